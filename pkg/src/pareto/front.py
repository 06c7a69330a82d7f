import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core.errors import InvalidInputError
from ..core.types import Point
from ..solver.trajectory import Method

logger = logging.getLogger(__name__)


def dominates(u: Tuple[float, float], v: Tuple[float, float]) -> bool:
    """Weak dominance: u is no worse than v in both objectives and differs from it"""
    return u[0] <= v[0] and u[1] <= v[1] and (u[0], u[1]) != (v[0], v[1])


@dataclass(frozen=True, eq=False)
class FrontPoint:
    x: Point
    f_a: float
    f_b: float
    n_a: Optional[int]
    n_b: Optional[int]
    lambda_star: float
    method: Method
    seed: int

    def __post_init__(self):
        if not (np.isfinite(self.f_a) and np.isfinite(self.f_b)):
            raise InvalidInputError(f"Front point has non-finite objectives ({self.f_a}, {self.f_b})")
        if self.method is Method.SA2GD and self.n_a is not None:
            expected = self.n_a / (self.n_a + self.n_b)
            if not np.isclose(self.lambda_star, expected, rtol=0, atol=1e-15):
                raise InvalidInputError(f"lambda_star {self.lambda_star} != n_a/(n_a+n_b) = {expected}")

    @property
    def objectives(self) -> Tuple[float, float]:
        return self.f_a, self.f_b


@dataclass
class Front:
    """
    Points of one sweep. Filtered fronts hold only mutually non-dominated
    points sorted by f_a, and keep the unfiltered input in candidates.
    """
    points: Sequence[FrontPoint]
    problem: str = ""
    params: dict = field(default_factory=dict)
    candidates: Sequence[FrontPoint] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def objectives(self) -> np.ndarray:
        return np.array([p.objectives for p in self.points], dtype=float).reshape(-1, 2)

    @property
    def decisions(self) -> np.ndarray:
        return np.array([p.x for p in self.points], dtype=float)


def flag_nondominated(values: np.ndarray) -> np.ndarray:
    """
    Boolean mask of the rows of an (m, 2) objective array that no other row
    weakly dominates. Of several identical rows only the first is flagged.
    """
    values = np.asarray(values, dtype=float).reshape(-1, 2)
    keep = np.zeros(len(values), dtype=bool)
    # ascending f_a, ties by f_b then input order; then a row survives iff
    # its f_b beats every row before it
    order = np.lexsort((np.arange(len(values)), values[:, 1], values[:, 0]))
    best_f_b = np.inf
    for i in order:
        if values[i, 1] < best_f_b:
            keep[i] = True
            best_f_b = values[i, 1]
    return keep


def nondominated_filter(points: Sequence[FrontPoint], problem: str = "", params: Optional[dict] = None) -> Front:
    """Non-dominated subset of points, duplicates collapsed to the first seen, sorted ascending by f_a"""
    points = list(points)
    if not points:
        return Front([], problem, dict(params or {}))
    values = np.array([p.objectives for p in points], dtype=float)
    keep = flag_nondominated(values)
    kept = sorted((i for i in range(len(points)) if keep[i]), key=lambda i: (values[i, 0], i))
    return Front([points[i] for i in kept], problem, dict(params or {}), candidates=points)


@dataclass(frozen=True)
class FrontMetrics:
    cardinality: int
    extent_f_a: float
    extent_f_b: float
    max_gap_f_a: float
    max_distance_to_reference: Optional[float] = None


def distance_to_segment(x: Point, start: Point, end: Point) -> float:
    x, start, end = (np.asarray(v, dtype=float) for v in (x, start, end))
    direction = end - start
    length_sq = float(direction @ direction)
    if length_sq == 0.0:
        return float(np.linalg.norm(x - start))
    s = np.clip((x - start) @ direction / length_sq, 0.0, 1.0)
    return float(np.linalg.norm(x - (start + s * direction)))


def _distance_to_front(x: Point, reference: Front) -> float:
    return float(np.min(np.linalg.norm(reference.decisions - np.asarray(x, dtype=float), axis=1)))


def front_metrics(front: Front, reference=None) -> FrontMetrics:
    """
    Summary numbers of a front.

    Args:
        front: nonempty front
        reference: optional analytic Pareto segment (start, end) in decision
            space, or another Front whose decision vectors serve as the reference set

    Returns:
        FrontMetrics; max_distance_to_reference is None without a reference
    """
    if len(front) == 0:
        raise InvalidInputError("front_metrics needs a nonempty front")
    values = front.objectives
    f_a_sorted = np.sort(values[:, 0])
    max_gap = float(np.max(np.diff(f_a_sorted))) if len(f_a_sorted) > 1 else 0.0

    distance = None
    if isinstance(reference, Front):
        if len(reference) == 0:
            raise InvalidInputError("Reference front is empty")
        distance = max(_distance_to_front(p.x, reference) for p in front.points)
    elif reference is not None:
        start, end = reference
        distance = max(distance_to_segment(p.x, start, end) for p in front.points)

    return FrontMetrics(
        cardinality=len(front),
        extent_f_a=float(np.ptp(values[:, 0])),
        extent_f_b=float(np.ptp(values[:, 1])),
        max_gap_f_a=max_gap,
        max_distance_to_reference=distance,
    )
