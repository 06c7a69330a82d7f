"""
Closed-form objective oracles used by the problem families and benchmarks.

All oracles are defined on the whole of R^n: intermediate points of an
outer iteration are not projected and may leave the feasible region.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.errors import InvalidInputError
from ..core.oracles import GradientOracle
from ..core.types import Point, Vector, as_point


@dataclass(frozen=True, eq=False)
class QuadraticObjective(GradientOracle):
    """f(x) = (curvature/2) ||x - center||²"""
    center: Point
    curvature: float

    def __post_init__(self):
        if not (np.isfinite(self.curvature) and self.curvature > 0):
            raise InvalidInputError(f"Curvature must be positive, got {self.curvature}")
        object.__setattr__(self, 'center', as_point(self.center))
        object.__setattr__(self, 'curvature', float(self.curvature))

    def value(self, x: Point) -> float:
        d = np.asarray(x, dtype=float) - self.center
        return 0.5 * self.curvature * float(d @ d)

    def deterministic_gradient(self, x: Point) -> Vector:
        return self.curvature * (np.asarray(x, dtype=float) - self.center)


@dataclass(frozen=True, eq=False)
class L1QuadraticObjective(GradientOracle):
    """
    f(x) = (modulus/2) ||x - center||² + ||x - center||_1

    The returned subgradient is modulus (x - center) + sign(x - center),
    with sign(0) = 0 at the kinks.
    """
    center: Point
    modulus: float

    smooth = False

    def __post_init__(self):
        if not (np.isfinite(self.modulus) and self.modulus >= 0):
            raise InvalidInputError(f"Modulus must be nonnegative, got {self.modulus}")
        object.__setattr__(self, 'center', as_point(self.center))
        object.__setattr__(self, 'modulus', float(self.modulus))

    def value(self, x: Point) -> float:
        d = np.asarray(x, dtype=float) - self.center
        return 0.5 * self.modulus * float(d @ d) + float(np.abs(d).sum())

    def deterministic_gradient(self, x: Point) -> Vector:
        d = np.asarray(x, dtype=float) - self.center
        return self.modulus * d + np.sign(d)


# Benchmark objectives. Formulas are recorded in benchmarks.json.

@dataclass(frozen=True, eq=False)
class SqrtObjective(GradientOracle):
    """
    f(x) = 2 sqrt(x_1)

    Off the domain x_1 > 0 the value and gradient come out NaN or inf, which
    sample_gradient turns into a NumericError at the offending point.
    """

    def value(self, x: Point) -> float:
        with np.errstate(invalid='ignore'):
            return 2.0 * float(np.sqrt(float(x[0])))

    def deterministic_gradient(self, x: Point) -> Vector:
        grad = np.zeros(len(x))
        with np.errstate(invalid='ignore', divide='ignore'):
            grad[0] = 1.0 / np.sqrt(float(x[0]))
        return grad


@dataclass(frozen=True, eq=False)
class BilinearObjective(GradientOracle):
    """f(x) = x_1 (1 - x_2) + 5"""

    def value(self, x: Point) -> float:
        return float(x[0]) * (1.0 - float(x[1])) + 5.0

    def deterministic_gradient(self, x: Point) -> Vector:
        return np.array([1.0 - float(x[1]), -float(x[0])])


_POLONI_A1 = 0.5 * math.sin(1) - 2.0 * math.cos(1) + math.sin(2) - 1.5 * math.cos(2)
_POLONI_A2 = 1.5 * math.sin(1) - math.cos(1) + 2.0 * math.sin(2) - 0.5 * math.cos(2)


@dataclass(frozen=True, eq=False)
class PoloniObjective(GradientOracle):
    """f(x) = 1 + (A1 - B1(x))² + (A2 - B2(x))²"""

    @staticmethod
    def _terms(x: Point) -> Tuple[float, float, np.ndarray, np.ndarray]:
        x1, x2 = float(x[0]), float(x[1])
        b1 = 0.5 * math.sin(x1) - 2.0 * math.cos(x1) + math.sin(x2) - 1.5 * math.cos(x2)
        b2 = 1.5 * math.sin(x1) - math.cos(x1) + 2.0 * math.sin(x2) - 0.5 * math.cos(x2)
        db1 = np.array([0.5 * math.cos(x1) + 2.0 * math.sin(x1), math.cos(x2) + 1.5 * math.sin(x2)])
        db2 = np.array([1.5 * math.cos(x1) + math.sin(x1), 2.0 * math.cos(x2) + 0.5 * math.sin(x2)])
        return b1, b2, db1, db2

    def value(self, x: Point) -> float:
        b1, b2, _, _ = self._terms(x)
        return 1.0 + (_POLONI_A1 - b1) ** 2 + (_POLONI_A2 - b2) ** 2

    def deterministic_gradient(self, x: Point) -> Vector:
        b1, b2, db1, db2 = self._terms(x)
        return -2.0 * (_POLONI_A1 - b1) * db1 - 2.0 * (_POLONI_A2 - b2) * db2


@dataclass(frozen=True, eq=False)
class GaussianBumpsObjective(GradientOracle):
    """f(x) = sum_k w_k exp(-s_k ||x - c_k||²) over rows (w_k, s_k, c_k...) of terms"""
    terms: Tuple[Tuple[float, ...], ...]

    def _parts(self, x: Point) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        table = np.asarray(self.terms, dtype=float)
        weights, sharpness, centers = table[:, 0], table[:, 1], table[:, 2:]
        d = np.asarray(x, dtype=float) - centers
        return weights * np.exp(-sharpness * np.einsum('ij,ij->i', d, d)), sharpness, d

    def value(self, x: Point) -> float:
        bumps, _, _ = self._parts(x)
        return float(bumps.sum())

    def deterministic_gradient(self, x: Point) -> Vector:
        bumps, sharpness, d = self._parts(x)
        return -2.0 * (bumps * sharpness) @ d
