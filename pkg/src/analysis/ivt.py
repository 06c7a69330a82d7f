"""
Constructive mean-value witness for a continuous function.

Given points x_1..x_m and a continuous φ, builds w in their convex hull with
m φ(w) = Σ φ(x_j) by folding in one point at a time: the running witness is
moved along the segment towards the next point until φ hits the running
mean, which the intermediate value theorem guarantees is possible.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import bisect

from ..core.config import Config
from ..core.errors import InvalidInputError, NumericError
from ..core.noise import NoiseStream, Stream

logger = logging.getLogger(__name__)

WEIGHT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class IvtWitness:
    w: np.ndarray
    weights: np.ndarray  # convex weights over the original points
    residual: float  # |m φ(w) - Σ φ(x_j)|
    points: np.ndarray

    def is_convex_certificate(self, tol: float = WEIGHT_TOL) -> bool:
        scale = 1.0 + float(np.max(np.abs(self.points)))
        return bool(
            np.all(self.weights >= -tol) and np.all(self.weights <= 1.0 + tol)
            and abs(self.weights.sum() - 1.0) <= tol
            and np.allclose(self.weights @ self.points, self.w, rtol=0, atol=tol * scale)
        )


def _finite(value: float, point: np.ndarray) -> float:
    value = float(value)
    if not np.isfinite(value):
        raise NumericError("phi returned a non-finite value", point=point)
    return value


def ivt_witness(phi: Callable[[np.ndarray], float], points, tol: float = Config.IVT_RESIDUAL_TOL) -> IvtWitness:
    """
    Find w = Σ μ_j x_j with m φ(w) = Σ φ(x_j).

    Args:
        phi: continuous scalar function of a point
        points: m >= 1 points, shape (m, n) or (m,) for scalars
        tol: bound on the residual |m φ(w) - Σ φ(x_j)|

    Returns:
        IvtWitness with the point, its convex weights and the residual

    Raises:
        NumericError: residual above tol after bisection, which happens when
            φ is discontinuous or not finite
    """
    points = np.asarray(points, dtype=float)
    if points.ndim == 1:
        points = points[:, None]
    m = points.shape[0]
    if m < 1:
        raise InvalidInputError("ivt_witness needs at least one point")

    values = [_finite(phi(x), x) for x in points]
    w = points[0].copy()
    weights = np.zeros(m)
    weights[0] = 1.0
    phi_w = values[0]
    running_sum = values[0]

    for k in range(1, m):
        x_next = points[k]
        target = (running_sum + values[k]) / (k + 1)
        start = w.copy()

        def g(s: float) -> float:
            blended = (1.0 - s) * start + s * x_next
            return _finite(phi(blended), blended) - target

        g0, g1 = phi_w - target, values[k] - target
        if g0 == 0.0:
            s = 0.0
        elif g1 == 0.0:
            s = 1.0
        elif g0 * g1 > 0:
            # only reachable through rounding in the running witness
            s = 0.0 if abs(g0) <= abs(g1) else 1.0
        else:
            s = bisect(g, 0.0, 1.0, xtol=Config.IVT_BISECTION_XTOL)

        w = (1.0 - s) * start + s * x_next
        weights *= (1.0 - s)
        weights[k] += s
        phi_w = _finite(phi(w), w)
        running_sum += values[k]

    residual = abs(m * phi_w - running_sum)
    if residual > tol:
        raise NumericError("No mean-value witness within tolerance; is phi continuous?", point=w, residual=residual)
    return IvtWitness(w=w, weights=weights, residual=residual, points=points)


def verify_ivt(phi: Callable[[np.ndarray], float], points, tol: float = Config.IVT_RESIDUAL_TOL
               ) -> Tuple[bool, IvtWitness]:
    """Witness plus whether its weights certify membership in the convex hull"""
    witness = ivt_witness(phi, points, tol)
    return witness.residual <= tol and witness.is_convex_certificate(), witness


@dataclass(frozen=True, eq=False)
class RandomPolynomial:
    """Σ_k c_k Π_i x_i^{e_ki}"""
    exponents: np.ndarray  # (terms, n) nonnegative integers
    coefficients: np.ndarray

    def __call__(self, x: np.ndarray) -> float:
        return float(np.prod(np.asarray(x, dtype=float) ** self.exponents, axis=1) @ self.coefficients)

    @classmethod
    def draw(cls, rng: np.random.Generator, dimension: int, degree: int, terms: int = 8) -> "RandomPolynomial":
        exponents = np.zeros((terms, dimension), dtype=int)
        for row in exponents:
            # spread a random total degree over random coordinates
            for _ in range(rng.integers(0, degree + 1)):
                row[rng.integers(dimension)] += 1
        return cls(exponents, rng.standard_normal(terms))


@dataclass
class IvtCampaignResult:
    instances: int
    passed: int = 0
    max_relative_residual: float = 0.0
    failures: List[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.instances


def run_ivt_campaign(instances: int = 1000, max_points: int = 8, max_dim: int = 4, degree: int = 5,
                     tol: float = Config.IVT_RESIDUAL_TOL, master_seed: int = 0,
                     on_instance: Optional[Callable[[int, bool], None]] = None) -> IvtCampaignResult:
    """
    Random polynomials and point sets; instance i passes when its witness has
    residual <= tol (1 + |Σ φ(x_j)|) and valid convex weights.
    """
    for name, value, low in (('instances', instances, 0), ('max_points', max_points, 1),
                             ('max_dim', max_dim, 1), ('degree', degree, 0)):
        if int(value) < low:
            raise InvalidInputError(f"{name} must be at least {low}, got {value}")
    if tol < 0:
        raise InvalidInputError(f"tol must be nonnegative, got {tol}")

    stream = NoiseStream(master_seed)
    result = IvtCampaignResult(instances=int(instances))
    for i in range(int(instances)):
        rng = stream.key(i, stream=Stream.CAMPAIGN).generator()
        m = int(rng.integers(1, max_points + 1))
        n = int(rng.integers(1, max_dim + 1))
        phi = RandomPolynomial.draw(rng, n, int(rng.integers(0, degree + 1)))
        points = rng.uniform(-1.0, 1.0, size=(m, n))
        scale = 1.0 + abs(sum(phi(x) for x in points))

        try:
            ok, witness = verify_ivt(phi, points, tol * scale)
            residual = witness.residual
        except NumericError as e:
            ok, residual = False, e.residual if e.residual is not None else float('inf')
        result.max_relative_residual = max(result.max_relative_residual, residual / scale)
        if ok:
            result.passed += 1
        else:
            result.failures.append(f"instance {i}: m={m}, n={n}, residual={residual:.3e}")
        if on_instance is not None:
            on_instance(i, ok)

    status = "✅" if result.all_passed else "❌"
    logger.info(f"{status} [IVT]   {result.passed}/{result.instances} instances passed | "
                f"max relative residual {result.max_relative_residual:.3e}")
    return result
