import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from ..core.artifacts import atomic_write_text
from ..core.errors import InvalidInputError
from ..core.types import Point

logger = logging.getLogger(__name__)


class Method(Enum):
    SA2GD = "SA2GD"
    WEIGHTED_SUM = "WeightedSum"


@dataclass(eq=False)
class Trajectory:
    """
    Record of one solver run.

    iterates holds x_0..x_T (T + 1 rows), step_sizes holds α_0..α_{T-1}.
    f_a, f_b and s_values are evaluated at every outer iterate, s_values
    with weight lam (λ_* for SA2GD, the given λ for the baseline).
    """
    iterates: np.ndarray
    f_a: np.ndarray
    f_b: np.ndarray
    s_values: np.ndarray
    step_sizes: np.ndarray
    lam: float
    method: Method
    problem: str
    master_seed: int
    replication_id: int
    n_a: Optional[int] = None
    n_b: Optional[int] = None
    intermediates: Optional[List[np.ndarray]] = None
    orders: Optional[List[Tuple[str, ...]]] = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        steps = len(self.iterates) - 1
        if not (len(self.f_a) == len(self.f_b) == len(self.s_values) == steps + 1 and len(self.step_sizes) == steps):
            raise InvalidInputError("Trajectory fields have inconsistent lengths")

    @property
    def T(self) -> int:
        return len(self.iterates) - 1

    @property
    def final(self) -> Point:
        return self.iterates[-1]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({'t': np.arange(self.T + 1)})
        for i in range(self.iterates.shape[1]):
            frame[f'x{i}'] = self.iterates[:, i]
        frame['f_a'] = self.f_a
        frame['f_b'] = self.f_b
        frame['S_lambda'] = self.s_values
        # α_t moves x_t to x_{t+1}; the last row has no step
        frame['alpha_t'] = np.append(self.step_sizes, np.nan)
        return frame


def write_trajectory_csv(traj: Trajectory, path: Union[str, Path]) -> Path:
    """One CSV per replication: t, x0..x{n-1}, f_a, f_b, S_lambda, alpha_t"""
    text = traj.to_frame().to_csv(index=False, lineterminator='\n')
    return atomic_write_text(path, text)


class AggregationMode(Enum):
    TRIANGULAR_WEIGHTS = "triangular"
    UNIFORM_MEAN = "uniform"


@dataclass(frozen=True, eq=False)
class AggregatedIterate:
    mode: AggregationMode
    point: Point


def aggregate_iterates(traj: Trajectory, mode: AggregationMode = AggregationMode.TRIANGULAR_WEIGHTS,
                       horizon: Optional[int] = None) -> AggregatedIterate:
    """
    Convex combination of x_1..x_T, or of x_1..x_horizon when a horizon is given.

    TRIANGULAR_WEIGHTS weighs x_t by t (strongly convex regimes),
    UNIFORM_MEAN averages them (convex regimes).
    """
    horizon = traj.T if horizon is None else int(horizon)
    if not 1 <= horizon <= traj.T:
        raise InvalidInputError(f"Aggregation horizon must lie in [1, {traj.T}], got {horizon}")
    mode = AggregationMode(mode)
    points = traj.iterates[1:horizon + 1]
    if mode is AggregationMode.TRIANGULAR_WEIGHTS:
        weights = np.arange(1, horizon + 1, dtype=float)
        point = weights @ points / weights.sum()
    else:
        point = points.mean(axis=0)
    return AggregatedIterate(mode, point)
