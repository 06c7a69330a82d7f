import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..core.errors import InvalidInputError
from ..core.oracles import GradientOracle, with_noise
from ..core.regions import Box, FeasibleRegion
from ..core.scalarization import WeightedSum
from ..core.types import Point, as_point
from .objectives import L1QuadraticObjective, QuadraticObjective

logger = logging.getLogger(__name__)


class Regime(Enum):
    SMOOTH_STRONGLY_CONVEX = "smooth-sc"
    SMOOTH_CONVEX = "smooth-convex"
    NONSMOOTH_STRONGLY_CONVEX = "nonsmooth-sc"
    NONSMOOTH_CONVEX = "nonsmooth-convex"
    NONCONVEX_BENCHMARK = "nonconvex-benchmark"

    @property
    def smooth(self) -> Optional[bool]:
        if self is Regime.NONCONVEX_BENCHMARK:
            return None
        return self in (Regime.SMOOTH_STRONGLY_CONVEX, Regime.SMOOTH_CONVEX)

    @property
    def strongly_convex(self) -> bool:
        return self in (Regime.SMOOTH_STRONGLY_CONVEX, Regime.NONSMOOTH_STRONGLY_CONVEX)

    @property
    def has_bounds(self) -> bool:
        return self is not Regime.NONCONVEX_BENCHMARK


@dataclass(frozen=True, eq=False, kw_only=True)
class BiObjectiveProblem:
    """
    min F(x) = (f^a(x), f^b(x)) over a compact convex region.

    Problems are immutable and can be shared between worker processes.
    sigma records the scale of the Gaussian gradient noise attached to the
    oracles (0 for exact oracles).
    """
    name: str
    region: FeasibleRegion
    oracle_a: GradientOracle
    oracle_b: GradientOracle
    regime: Regime
    sigma: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'regime', Regime(self.regime))
        if not self.sigma >= 0:
            raise InvalidInputError(f"sigma must be nonnegative, got {self.sigma}")
        expected = self.regime.smooth
        if expected is True and not (self.oracle_a.smooth and self.oracle_b.smooth):
            raise InvalidInputError(f"{self.name}: regime {self.regime.value} needs smooth oracles")
        if expected is False and self.oracle_a.smooth and self.oracle_b.smooth:
            raise InvalidInputError(f"{self.name}: regime {self.regime.value} needs a nonsmooth oracle")

    @property
    def dimension(self) -> int:
        return self.region.dimension

    def weighted_sum(self, lam: float) -> WeightedSum:
        return WeightedSum(lam, self.oracle_a, self.oracle_b)

    def analytic_weighted_minimizer(self, lam: float) -> Optional[Point]:
        """Exact minimizer of S(·, λ) over the region, or None when not known in closed form"""
        return None

    def pareto_segment(self) -> Optional[Tuple[Point, Point]]:
        """Endpoints of the analytic Pareto set when it is a segment, else None"""
        return None

    def _check_lambda(self, lam: float) -> float:
        lam = float(lam)
        if not 0.0 <= lam <= 1.0:
            raise InvalidInputError(f"lambda must lie in [0, 1], got {lam}")
        return lam


@dataclass(frozen=True, eq=False, kw_only=True)
class QuadraticPair(BiObjectiveProblem):
    a: Point
    b: Point
    curvature_a: float
    curvature_b: float

    def analytic_weighted_minimizer(self, lam: float) -> Point:
        # S is a single quadratic with Hessian w I, so projecting its
        # unconstrained minimizer gives the constrained one
        lam = self._check_lambda(lam)
        w_a = lam * self.curvature_a
        w_b = (1.0 - lam) * self.curvature_b
        return self.region.project((w_a * self.a + w_b * self.b) / (w_a + w_b))

    def pareto_segment(self) -> Optional[Tuple[Point, Point]]:
        # with a and b both feasible the convex region holds all of [a, b];
        # otherwise the projected set bends along the boundary
        if self.curvature_a != self.curvature_b:
            return None
        if not (self.region.contains(self.a) and self.region.contains(self.b)):
            return None
        return self.a.copy(), self.b.copy()


def _minimize_coordinate(lam: float, m: float, a: float, b: float, lo: float, hi: float) -> float:
    def h(x: float) -> float:
        return (lam * (0.5 * m * (x - a) ** 2 + abs(x - a))
                + (1.0 - lam) * (0.5 * m * (x - b) ** 2 + abs(x - b)))

    # the minimizer is an endpoint, a kink, or the stationary point of one smooth piece
    candidates = [lo, hi, a, b]
    if m > 0:
        center = lam * a + (1.0 - lam) * b
        for s_a in (-1.0, 1.0):
            for s_b in (-1.0, 1.0):
                candidates.append(center - (lam * s_a + (1.0 - lam) * s_b) / m)
    return min((min(max(c, lo), hi) for c in candidates), key=h)


@dataclass(frozen=True, eq=False, kw_only=True)
class NonsmoothPair(BiObjectiveProblem):
    a: Point
    b: Point
    modulus: float

    def analytic_weighted_minimizer(self, lam: float) -> Optional[Point]:
        # S separates over coordinates on a box, so each coordinate is a 1-D problem
        if not isinstance(self.region, Box):
            return None
        lam = self._check_lambda(lam)
        return np.array([
            _minimize_coordinate(lam, self.modulus, a_i, b_i, lo, hi)
            for a_i, b_i, lo, hi in zip(self.a, self.b, self.region.lower, self.region.upper)
        ])


@dataclass(frozen=True, eq=False, kw_only=True)
class BenchmarkProblem(BiObjectiveProblem):
    formula_a: str
    formula_b: str
    source: str
    collection_region: Optional[FeasibleRegion] = None


def _check_dimensions(a: Point, b: Point, region: FeasibleRegion) -> Tuple[Point, Point]:
    a = as_point(a)
    b = as_point(b)
    if not a.size == b.size == region.dimension:
        raise InvalidInputError(
            f"Dimension mismatch: a has {a.size}, b has {b.size}, region has {region.dimension}"
        )
    return a, b


def quadratic_pair(a, b, curvature_a: float, curvature_b: float, region: FeasibleRegion,
                   name: str = "quadratic-pair", regime: Regime = Regime.SMOOTH_STRONGLY_CONVEX) -> QuadraticPair:
    """
    Two isotropic quadratics f^i(x) = (c_i/2) ||x - p_i||².

    Args:
        a, b: minimizers of f^a and f^b
        curvature_a, curvature_b: positive curvatures c_a, c_b
        region: feasible region
        regime: SMOOTH_CONVEX runs the same instance under the convex schedule and bounds

    Returns:
        A QuadraticPair with its closed-form weighted-sum minimizer
    """
    a, b = _check_dimensions(a, b, region)
    for label, curvature in (('curvature_a', curvature_a), ('curvature_b', curvature_b)):
        if not (np.isfinite(curvature) and curvature > 0):
            raise InvalidInputError(f"{label} must be positive, got {curvature}")
    regime = Regime(regime)
    if regime not in (Regime.SMOOTH_STRONGLY_CONVEX, Regime.SMOOTH_CONVEX):
        raise InvalidInputError(f"A quadratic pair is smooth; regime {regime.value} does not apply")
    return QuadraticPair(
        name=name, region=region, regime=regime,
        oracle_a=QuadraticObjective(a, curvature_a), oracle_b=QuadraticObjective(b, curvature_b),
        a=a, b=b, curvature_a=float(curvature_a), curvature_b=float(curvature_b),
    )


def nonsmooth_pair(a, b, modulus: float, region: FeasibleRegion, name: str = "nonsmooth-pair") -> NonsmoothPair:
    """f^i(x) = (modulus/2) ||x - p_i||² + ||x - p_i||_1; modulus 0 gives the plain convex regime"""
    a, b = _check_dimensions(a, b, region)
    regime = Regime.NONSMOOTH_STRONGLY_CONVEX if modulus > 0 else Regime.NONSMOOTH_CONVEX
    return NonsmoothPair(
        name=name, region=region, regime=regime,
        oracle_a=L1QuadraticObjective(a, modulus), oracle_b=L1QuadraticObjective(b, modulus),
        a=a, b=b, modulus=float(modulus),
    )


def attach_noise(problem: BiObjectiveProblem, sigma: float) -> BiObjectiveProblem:
    """Copy of the problem whose oracles add N(0, σ²I) noise; sigma=0 restores exact oracles"""
    if not (np.isfinite(sigma) and sigma >= 0):
        raise InvalidInputError(f"sigma must be nonnegative, got {sigma}")
    return replace(
        problem,
        oracle_a=with_noise(problem.oracle_a, sigma),
        oracle_b=with_noise(problem.oracle_b, sigma),
        sigma=float(sigma),
    )
