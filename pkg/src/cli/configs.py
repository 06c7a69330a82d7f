import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core.config import Config
from ..core.errors import InvalidInputError

logger = logging.getLogger(__name__)

PatternName = Literal['block', 'interleaved', 'random']


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra='forbid')

    seed: int = Field(default_factory=lambda: Config.MASTER_SEED, ge=0, lt=2 ** 64)
    out: Optional[str] = None
    workers: Optional[int] = Field(default=None, ge=1)

    def output_dir(self) -> Path:
        return Path(self.out or Config.OUTPUT_DIR)


class SolveConfig(ExperimentConfig):
    problem: str
    n_a: int = Field(default=1, ge=0)
    n_b: int = Field(default=1, ge=0)
    T: int = Field(default=500, ge=0)
    schedule: str = "sc-decay"
    pattern: PatternName = 'block'
    sigma: float = Field(default=0.0, ge=0)
    replication: int = Field(default=0, ge=0)


class SweepConfig(ExperimentConfig):
    problem: str
    n_total: int = Field(default=200, ge=1)
    T: int = Field(default=300, ge=0)
    step: str = "fixed:1e-3"
    method: Literal['sa2gd', 'weighted-sum', 'both'] = 'both'
    pattern: PatternName = 'block'
    sigma: float = Field(default=0.0, ge=0)
    replications: int = Field(default=1, ge=1)


class RateConfig(ExperimentConfig):
    regime: Literal['smooth-sc', 'nonsmooth-sc', 'smooth-convex', 'nonsmooth-convex'] = 'smooth-sc'
    n_a: int = Field(default=3, ge=0)
    n_b: int = Field(default=1, ge=0)
    sigma: float = Field(default_factory=lambda: Config.DEFAULT_SIGMA, ge=0)
    horizons: List[int] = Field(default_factory=lambda: [16, 32, 64, 128, 256, 512, 1024], min_length=3)
    replications: int = Field(default=100, ge=1)
    alpha_bar: float = Field(default=1.0, gt=0)
    pattern: PatternName = 'random'

    @field_validator('horizons')
    @classmethod
    def _positive_horizons(cls, horizons: List[int]) -> List[int]:
        if any(T < 1 for T in horizons):
            raise ValueError('horizons must be positive')
        return horizons


class IvtConfig(ExperimentConfig):
    instances: int = Field(default=1000, ge=0)
    max_points: int = Field(default=8, ge=1)
    max_dim: int = Field(default=4, ge=1)
    degree: int = Field(default=5, ge=0)
    tol: float = Field(default_factory=lambda: Config.IVT_RESIDUAL_TOL, ge=0)


M = TypeVar('M', bound=ExperimentConfig)


def load_config(model: Type[M], config_path: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> M:
    """
    Build a command config: flags override the JSON file, which overrides defaults.

    overrides holds the parsed flags; entries that are None were not given.
    """
    data: Dict[str, Any] = {}
    if config_path:
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise InvalidInputError(f"Cannot read config file {config_path}: {e}")
        if not isinstance(data, dict):
            raise InvalidInputError(f"Config file {config_path} must hold a JSON object")
        logger.debug(f"Loaded {len(data)} settings from {config_path}")
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise InvalidInputError(f"Invalid {model.__name__}: {e}")
