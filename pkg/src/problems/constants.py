"""
Closed-form problem constants used by the rate bounds.

Quadratic and nonsmooth pairs get exact values. Any other problem gets the
region diameter plus sampled finite-difference estimates, flagged as such.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

import numpy as np

from ..core.config import Config
from ..core.errors import InvalidInputError
from ..core.noise import NoiseStream, Stream
from ..core.regions import Box
from ..core.types import Point
from .problem import BiObjectiveProblem, NonsmoothPair, QuadraticPair

logger = logging.getLogger(__name__)

ESTIMATE_SAMPLES = 200


@dataclass(frozen=True)
class ProblemConstants:
    theta: float
    L_a: Optional[float] = None
    L_b: Optional[float] = None
    c_a: Optional[float] = None
    c_b: Optional[float] = None
    M_nabla_a: Optional[float] = None
    M_nabla_b: Optional[float] = None
    G: Optional[float] = None
    G_bar: Optional[float] = None
    L_hat_a: Optional[float] = None
    L_hat_b: Optional[float] = None
    L_tilde_a: Optional[float] = None
    L_tilde_b: Optional[float] = None
    c_hat_a: Optional[float] = None
    c_hat_b: Optional[float] = None
    sigma: float = 0.0
    estimated: bool = False

    @staticmethod
    def _pair(x: Optional[float], y: Optional[float], reduce) -> Optional[float]:
        if x is None or y is None:
            return None
        return reduce(x, y)

    @property
    def L(self) -> Optional[float]:
        return self._pair(self.L_a, self.L_b, max)

    @property
    def c(self) -> Optional[float]:
        return self._pair(self.c_a, self.c_b, min)

    @property
    def M_nabla(self) -> Optional[float]:
        return self._pair(self.M_nabla_a, self.M_nabla_b, max)

    @property
    def L_hat(self) -> Optional[float]:
        return self._pair(self.L_hat_a, self.L_hat_b, max)

    @property
    def L_tilde(self) -> Optional[float]:
        return self._pair(self.L_tilde_a, self.L_tilde_b, max)

    @property
    def c_hat(self) -> Optional[float]:
        return self._pair(self.c_hat_a, self.c_hat_b, min)

    @property
    def G_hat(self) -> Optional[float]:
        if self.G is None or self.G_bar is None or self.M_nabla is None:
            return None
        return math.sqrt(self.G + self.G_bar * self.M_nabla)

    def to_dict(self) -> dict:
        data = asdict(self)
        for name in ('L', 'c', 'M_nabla', 'L_hat', 'L_tilde', 'c_hat', 'G_hat'):
            data[name] = getattr(self, name)
        return data


def _noise_moments(n: int, sigma: float) -> Tuple[float, float]:
    # E||∇f + ε||² = ||∇f||² + nσ², so G = nσ² and Ḡ = 1
    return n * sigma ** 2, 1.0


def _quadratic_constants(problem: QuadraticPair, sigma: float) -> ProblemConstants:
    n = problem.dimension
    G, G_bar = _noise_moments(n, sigma)
    d_a = problem.region.max_distance(problem.a)
    d_b = problem.region.max_distance(problem.b)
    M_a = problem.curvature_a ** 2 * d_a ** 2
    M_b = problem.curvature_b ** 2 * d_b ** 2
    return ProblemConstants(
        theta=problem.region.diameter(),
        L_a=problem.curvature_a, L_b=problem.curvature_b,
        c_a=problem.curvature_a, c_b=problem.curvature_b,
        M_nabla_a=M_a, M_nabla_b=M_b,
        G=G, G_bar=G_bar,
        L_hat_a=problem.curvature_a * d_a, L_hat_b=problem.curvature_b * d_b,
        L_tilde_a=math.sqrt(M_a + G), L_tilde_b=math.sqrt(M_b + G),
        c_hat_a=problem.curvature_a, c_hat_b=problem.curvature_b,
        sigma=sigma,
    )


def _l1_quadratic_sup(problem: NonsmoothPair, center: Point) -> Tuple[float, float]:
    """
    sup over the region of ||m(x - p) + s||² for the chosen subgradient, and
    for the worst element of the subdifferential.
    """
    m = problem.modulus
    region = problem.region
    if isinstance(region, Box):
        # separable over coordinates: each attains its sup at the farther bound
        reach = np.maximum(np.abs(region.lower - center), np.abs(region.upper - center))
        chosen = np.where(reach > 0, m * reach + 1.0, 0.0)
        worst = m * reach + 1.0
        return float(chosen @ chosen), float(worst @ worst)
    bound = (m * region.max_distance(center) + math.sqrt(problem.dimension)) ** 2
    return bound, bound


def _nonsmooth_constants(problem: NonsmoothPair, sigma: float) -> ProblemConstants:
    n = problem.dimension
    G, G_bar = _noise_moments(n, sigma)
    chosen_a, worst_a = _l1_quadratic_sup(problem, problem.a)
    chosen_b, worst_b = _l1_quadratic_sup(problem, problem.b)
    c_hat = problem.modulus if problem.modulus > 0 else None
    return ProblemConstants(
        theta=problem.region.diameter(),
        G=G, G_bar=G_bar,
        L_hat_a=math.sqrt(worst_a), L_hat_b=math.sqrt(worst_b),
        L_tilde_a=math.sqrt(chosen_a + G), L_tilde_b=math.sqrt(chosen_b + G),
        c_hat_a=c_hat, c_hat_b=c_hat,
        sigma=sigma,
    )


def _estimated_constants(problem: BiObjectiveProblem, sigma: float) -> ProblemConstants:
    """Θ plus sampled lower estimates of L_i and L̂_i from finite differences of the gradients"""
    rng = NoiseStream(Config.MASTER_SEED).key(0, stream=Stream.CAMPAIGN).generator()
    h = Config.FINITE_DIFF_STEP
    region = problem.region
    estimates = {}
    for label, oracle in (('a', problem.oracle_a.base), ('b', problem.oracle_b.base)):
        lipschitz, grad_norm = 0.0, 0.0
        for _ in range(ESTIMATE_SAMPLES):
            x = region.sample_uniform(rng)
            v = rng.standard_normal(region.dimension)
            v /= np.linalg.norm(v)
            hv = (oracle.deterministic_gradient(x + h * v) - oracle.deterministic_gradient(x - h * v)) / (2 * h)
            lipschitz = max(lipschitz, float(np.linalg.norm(hv)))
            grad_norm = max(grad_norm, float(np.linalg.norm(oracle.deterministic_gradient(x))))
        estimates[label] = (lipschitz, grad_norm)

    logger.info(f"⚠️ {problem.name}: no closed-form constants, returning sampled estimates")
    return ProblemConstants(
        theta=region.diameter(),
        L_a=estimates['a'][0], L_b=estimates['b'][0],
        L_hat_a=estimates['a'][1], L_hat_b=estimates['b'][1],
        sigma=sigma, estimated=True,
    )


def compute_constants(problem: BiObjectiveProblem, sigma: Optional[float] = None) -> ProblemConstants:
    """
    Constants of a problem under additive Gaussian gradient noise of scale sigma.

    Args:
        problem: the problem; quadratic and nonsmooth pairs get exact constants
        sigma: noise scale, defaults to the scale already attached to the problem

    Returns:
        ProblemConstants, with estimated=True for problems without closed forms
    """
    sigma = problem.sigma if sigma is None else float(sigma)
    if not sigma >= 0:
        raise InvalidInputError(f"sigma must be nonnegative, got {sigma}")
    if isinstance(problem, QuadraticPair):
        return _quadratic_constants(problem, sigma)
    if isinstance(problem, NonsmoothPair):
        return _nonsmooth_constants(problem, sigma)
    return _estimated_constants(problem, sigma)
