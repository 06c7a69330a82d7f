"""
Compact convex feasible regions with exact Euclidean projections.

Three variants are supported: an axis-aligned box, a Euclidean ball and a
scaled probability simplex {x >= 0, sum(x) = scale}.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from .config import Config
from .errors import InvalidInputError
from .types import Point, as_point


class FeasibleRegion(ABC):
    """Common interface of the feasible-region variants"""

    kind: str = "region"

    @property
    @abstractmethod
    def dimension(self) -> int:
        ...

    @abstractmethod
    def project(self, x: Point) -> Point:
        """Euclidean-nearest point of the region to x"""

    @abstractmethod
    def diameter(self) -> float:
        ...

    @abstractmethod
    def contains(self, x: Point, tol: float = Config.MEMBERSHIP_TOL) -> bool:
        ...

    @abstractmethod
    def sample_uniform(self, rng: np.random.Generator) -> Point:
        """Draw a point uniformly at random from the region"""

    @abstractmethod
    def max_distance(self, p: Point) -> float:
        """max over x in the region of ||x - p||"""

    def vertices(self) -> np.ndarray:
        """Extreme points used for boundedness checks (may be a finite subset for balls)"""
        raise NotImplementedError

    def _checked(self, x) -> Point:
        return as_point(x, self.dimension)


@dataclass(frozen=True, eq=False)
class Box(FeasibleRegion):
    lower: Point
    upper: Point
    kind: str = field(default="box", init=False)

    def __post_init__(self):
        lower = as_point(self.lower)
        upper = as_point(self.upper, lower.size)
        if np.any(lower > upper):
            raise InvalidInputError(f"Box requires lower <= upper componentwise (lower={lower}, upper={upper})")
        object.__setattr__(self, 'lower', lower)
        object.__setattr__(self, 'upper', upper)

    @property
    def dimension(self) -> int:
        return self.lower.size

    def project(self, x: Point) -> Point:
        return np.clip(self._checked(x), self.lower, self.upper)

    def diameter(self) -> float:
        return float(np.linalg.norm(self.upper - self.lower))

    def contains(self, x: Point, tol: float = Config.MEMBERSHIP_TOL) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower - tol) and np.all(x <= self.upper + tol))

    def sample_uniform(self, rng: np.random.Generator) -> Point:
        return rng.uniform(self.lower, self.upper)

    def max_distance(self, p: Point) -> float:
        p = self._checked(p)
        return float(np.linalg.norm(np.maximum(np.abs(self.lower - p), np.abs(self.upper - p))))

    def vertices(self) -> np.ndarray:
        corners = np.array(np.meshgrid(*zip(self.lower, self.upper), indexing='ij'))
        return corners.reshape(self.dimension, -1).T


@dataclass(frozen=True, eq=False)
class Ball(FeasibleRegion):
    center: Point
    radius: float
    kind: str = field(default="ball", init=False)

    def __post_init__(self):
        if not (np.isfinite(self.radius) and self.radius > 0):
            raise InvalidInputError(f"Ball radius must be positive, got {self.radius}")
        object.__setattr__(self, 'center', as_point(self.center))
        object.__setattr__(self, 'radius', float(self.radius))

    @property
    def dimension(self) -> int:
        return self.center.size

    def project(self, x: Point) -> Point:
        x = self._checked(x)
        offset = x - self.center
        dist = np.linalg.norm(offset)
        if dist <= self.radius:
            return x.copy()
        return self.center + offset * (self.radius / dist)

    def diameter(self) -> float:
        return 2.0 * self.radius

    def contains(self, x: Point, tol: float = Config.MEMBERSHIP_TOL) -> bool:
        return bool(np.linalg.norm(np.asarray(x, dtype=float) - self.center) <= self.radius + tol)

    def sample_uniform(self, rng: np.random.Generator) -> Point:
        direction = rng.standard_normal(self.dimension)
        direction /= np.linalg.norm(direction)
        return self.center + direction * self.radius * rng.uniform() ** (1.0 / self.dimension)

    def max_distance(self, p: Point) -> float:
        p = self._checked(p)
        return float(np.linalg.norm(self.center - p) + self.radius)

    def vertices(self) -> np.ndarray:
        eye = np.eye(self.dimension) * self.radius
        return np.vstack([self.center + eye, self.center - eye])


@dataclass(frozen=True, eq=False)
class Simplex(FeasibleRegion):
    scale: float
    n: int
    kind: str = field(default="simplex", init=False)

    def __post_init__(self):
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise InvalidInputError(f"Simplex scale must be positive, got {self.scale}")
        if int(self.n) < 2:
            raise InvalidInputError(f"Simplex needs dimension >= 2, got {self.n}")
        object.__setattr__(self, 'scale', float(self.scale))
        object.__setattr__(self, 'n', int(self.n))

    @property
    def dimension(self) -> int:
        return self.n

    def project(self, x: Point) -> Point:
        # sort-based exact projection onto {y >= 0, sum(y) = scale}
        x = self._checked(x)
        u = np.sort(x)[::-1]
        css = np.cumsum(u)
        ranks = np.arange(1, x.size + 1)
        theta = (css - self.scale) / ranks
        rho = np.nonzero(u - theta > 0)[0][-1]
        return np.maximum(x - theta[rho], 0.0)

    def diameter(self) -> float:
        return self.scale * math.sqrt(2.0)

    def contains(self, x: Point, tol: float = Config.MEMBERSHIP_TOL) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= -tol) and abs(x.sum() - self.scale) <= tol * max(1.0, self.scale) * x.size)

    def sample_uniform(self, rng: np.random.Generator) -> Point:
        return self.scale * rng.dirichlet(np.ones(self.n))

    def max_distance(self, p: Point) -> float:
        p = self._checked(p)
        # a convex function attains its max over a polytope at a vertex
        return float(np.max(np.linalg.norm(self.vertices() - p, axis=1)))

    def vertices(self) -> np.ndarray:
        return np.eye(self.n) * self.scale


def project(region: FeasibleRegion, x: Point) -> Point:
    """Orthogonal projection of x onto the region"""
    return region.project(x)


def region_diameter(region: FeasibleRegion) -> float:
    """Exact diameter Θ of the region"""
    return region.diameter()


def region_from_dict(spec: dict) -> FeasibleRegion:
    """
    Build a region from a plain mapping such as ``{"kind": "box", "lower": [...], "upper": [...]}``

    Used by the benchmark manifest and JSON experiment configs.
    """
    kind = str(spec.get('kind', '')).lower()
    if kind == 'box':
        return Box(spec['lower'], spec['upper'])
    if kind == 'ball':
        return Ball(spec['center'], spec['radius'])
    if kind == 'simplex':
        return Simplex(spec['scale'], spec['n'])
    raise InvalidInputError(f"Unknown region kind '{kind}'. Expected one of: box, ball, simplex")
