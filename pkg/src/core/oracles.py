import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidInputError, NumericError
from .noise import RngKey
from .types import Point, Vector

logger = logging.getLogger(__name__)


class GradientOracle(ABC):
    """
    First-order oracle of one objective f^i.

    deterministic_gradient returns the true gradient, or for nonsmooth
    objectives one fixed element of the subdifferential (kinks of |.| map to 0).
    stochastic_gradient returns an unbiased estimate of it. Oracles hold no
    mutable state, so one instance can be shared by concurrent runs.
    """

    smooth: bool = True

    @abstractmethod
    def value(self, x: Point) -> float:
        ...

    @abstractmethod
    def deterministic_gradient(self, x: Point) -> Vector:
        ...

    def stochastic_gradient(self, x: Point, key: Optional[RngKey]) -> Vector:
        return self.deterministic_gradient(x)

    @property
    def sigma(self) -> float:
        return 0.0

    @property
    def base(self) -> "GradientOracle":
        return self


@dataclass(frozen=True, eq=False)
class NoisyOracle(GradientOracle):
    """Additive i.i.d. Gaussian noise: g(x, ξ) = ∇f(x) + ε, ε ~ N(0, σ²I)"""
    inner: GradientOracle
    noise_sigma: float

    def __post_init__(self):
        if not self.noise_sigma >= 0:
            raise InvalidInputError(f"sigma must be nonnegative, got {self.noise_sigma}")

    @property
    def smooth(self) -> bool:
        return self.inner.smooth

    @property
    def sigma(self) -> float:
        return self.noise_sigma

    @property
    def base(self) -> GradientOracle:
        return self.inner.base

    def value(self, x: Point) -> float:
        return self.inner.value(x)

    def deterministic_gradient(self, x: Point) -> Vector:
        return self.inner.deterministic_gradient(x)

    def stochastic_gradient(self, x: Point, key: Optional[RngKey]) -> Vector:
        grad = self.inner.deterministic_gradient(x)
        if self.noise_sigma == 0.0 or key is None:
            return grad
        return grad + self.noise_sigma * key.standard_normal(grad.size)


def with_noise(oracle: GradientOracle, sigma: float) -> GradientOracle:
    """Wrap the noiseless base of an oracle with Gaussian noise of scale sigma"""
    base = oracle.base
    if sigma == 0:
        return base
    return NoisyOracle(base, float(sigma))


def sample_gradient(oracle: GradientOracle, x: Point, key: Optional[RngKey]) -> Vector:
    """Draw one stochastic (sub)gradient and reject non-finite output"""
    grad = np.asarray(oracle.stochastic_gradient(x, key), dtype=float)
    if not np.all(np.isfinite(grad)):
        raise NumericError("Oracle returned a non-finite gradient", point=x)
    return grad
