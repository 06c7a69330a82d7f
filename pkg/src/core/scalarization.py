from dataclasses import dataclass

from .errors import InvalidInputError
from .oracles import GradientOracle
from .types import Point, Vector


def lambda_star(n_a: int, n_b: int) -> float:
    """Weight implicitly targeted by n_a steps on f^a and n_b steps on f^b"""
    if n_a < 0 or n_b < 0:
        raise InvalidInputError(f"Step counts must be nonnegative, got n_a={n_a}, n_b={n_b}")
    if n_a + n_b < 1:
        raise InvalidInputError("n_a + n_b must be at least 1")
    return n_a / (n_a + n_b)


@dataclass(frozen=True, eq=False)
class WeightedSum:
    """S(x, λ) = λ f^a(x) + (1 − λ) f^b(x)"""
    lam: float
    objective_a: GradientOracle
    objective_b: GradientOracle

    def __post_init__(self):
        if not 0.0 <= self.lam <= 1.0:
            raise InvalidInputError(f"lambda must lie in [0, 1], got {self.lam}")

    def value(self, x: Point) -> float:
        return self.combine(self.objective_a.value(x), self.objective_b.value(x))

    def combine(self, f_a: float, f_b: float) -> float:
        return self.lam * f_a + (1.0 - self.lam) * f_b

    def gradient(self, x: Point) -> Vector:
        return (self.lam * self.objective_a.deterministic_gradient(x)
                + (1.0 - self.lam) * self.objective_b.deterministic_gradient(x))


def weighted_sum_value(ws: WeightedSum, x: Point) -> float:
    return ws.value(x)
