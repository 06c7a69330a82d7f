import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..core.errors import InvalidInputError, UnknownProblemError
from ..core.oracles import GradientOracle
from ..core.regions import region_from_dict
from .objectives import (BilinearObjective, GaussianBumpsObjective, PoloniObjective, QuadraticObjective,
                         SqrtObjective)
from .problem import BenchmarkProblem, Regime

logger = logging.getLogger(__name__)

MANIFEST_PATH = Path(__file__).with_name('benchmarks.json')

# (weight, sharpness, c1, c2) rows of w exp(-s ||x - c||²)
_FAR1_A = ((-2.0, 15.0, 0.1, 0.0), (-1.0, 20.0, 0.6, 0.6), (1.0, 20.0, -0.6, 0.6),
           (1.0, 20.0, 0.6, -0.6), (1.0, 20.0, -0.6, -0.6))
_FAR1_B = ((2.0, 20.0, 0.0, 0.0), (1.0, 20.0, 0.4, 0.6), (-1.0, 20.0, -0.5, 0.7),
           (-1.0, 20.0, 0.5, -0.7), (1.0, 20.0, -0.4, -0.8))

OBJECTIVES: Dict[str, Callable[[], Tuple[GradientOracle, GradientOracle]]] = {
    'MOP1': lambda: (QuadraticObjective([0.0], 2.0), QuadraticObjective([2.0], 2.0)),
    'IM1': lambda: (SqrtObjective(), BilinearObjective()),
    'MOP3': lambda: (PoloniObjective(), QuadraticObjective([-3.0, -1.0], 2.0)),
    'FAR1': lambda: (GaussianBumpsObjective(_FAR1_A), GaussianBumpsObjective(_FAR1_B)),
}


class BenchmarkEntry(BaseModel):
    dimension: int
    region: dict
    collection_region: Optional[dict] = None
    f_a: str
    f_b: str
    source: str
    notes: Optional[str] = None


class BenchmarkManifest(BaseModel):
    version: int
    collection: str
    problems: Dict[str, BenchmarkEntry]


@lru_cache(maxsize=1)
def load_manifest(path: Path = MANIFEST_PATH) -> BenchmarkManifest:
    """Parse and validate the benchmark manifest"""
    with open(path, 'r', encoding='utf-8') as f:
        manifest = BenchmarkManifest.model_validate(json.load(f))
    missing = set(manifest.problems) ^ set(OBJECTIVES)
    if missing:
        raise InvalidInputError(f"Benchmark manifest and objective table disagree on: {', '.join(sorted(missing))}")
    return manifest


def benchmark_names() -> List[str]:
    return list(load_manifest().problems)


def benchmark_problem(name: str) -> BenchmarkProblem:
    """
    Build one of the deterministic benchmark problems MOP1, IM1, MOP3, FAR1.

    Bounds, formula text and provenance come from the manifest; gradients
    are analytic.
    """
    manifest = load_manifest()
    entry = manifest.problems.get(name)
    if entry is None:
        raise UnknownProblemError(name, manifest.problems)

    region = region_from_dict(entry.region)
    if region.dimension != entry.dimension:
        raise InvalidInputError(f"{name}: region dimension {region.dimension} != declared {entry.dimension}")
    oracle_a, oracle_b = OBJECTIVES[name]()
    collection_region = region_from_dict(entry.collection_region) if entry.collection_region else None
    return BenchmarkProblem(
        name=name, region=region, oracle_a=oracle_a, oracle_b=oracle_b,
        regime=Regime.NONCONVEX_BENCHMARK,
        formula_a=entry.f_a, formula_b=entry.f_b,
        source=f"{entry.source}; {manifest.collection}",
        collection_region=collection_region,
    )
