import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

from .errors import InvalidInputError


class StepSchedule(ABC):
    """A step-size rule α_t. Subclasses define the formula and the first valid index."""

    first_index: int = 0

    @abstractmethod
    def _value(self, t: int) -> float:
        ...

    def step_size(self, t: int) -> float:
        if t < self.first_index:
            raise InvalidInputError(f"{type(self).__name__} is defined for t >= {self.first_index}, got t={t}")
        return self._value(t)

    def for_iteration(self, t: int) -> float:
        """Step size used at solver iteration t = 0, 1, ... (shifted onto the valid index range)"""
        return self.step_size(t + self.first_index)

    @abstractmethod
    def describe(self) -> str:
        ...


@dataclass(frozen=True)
class StronglyConvexDecay(StepSchedule):
    """α_t = 2 / (c (t + 1) n_total); c is the strong-convexity modulus (c or ĉ)"""
    c: float
    n_total: int

    def __post_init__(self):
        if not self.c > 0:
            raise InvalidInputError(f"Strong-convexity modulus must be positive, got {self.c}")
        if int(self.n_total) < 1:
            raise InvalidInputError(f"n_total must be a positive integer, got {self.n_total}")

    def _value(self, t: int) -> float:
        return 2.0 / (self.c * (t + 1) * self.n_total)

    def describe(self) -> str:
        return f"sc-decay(c={self.c:g}, n_total={self.n_total})"


@dataclass(frozen=True)
class InverseT(StepSchedule):
    """α_t = γ / t"""
    gamma: float
    first_index = 1

    def __post_init__(self):
        if not self.gamma > 0:
            raise InvalidInputError(f"gamma must be positive, got {self.gamma}")

    def _value(self, t: int) -> float:
        return self.gamma / t

    def describe(self) -> str:
        return f"inverse-t(gamma={self.gamma:g})"


@dataclass(frozen=True)
class ConvexSqrtDecay(StepSchedule):
    """α_t = ᾱ / (√t n_total)"""
    alpha_bar: float
    n_total: int
    first_index = 1

    def __post_init__(self):
        if not self.alpha_bar > 0:
            raise InvalidInputError(f"alpha_bar must be positive, got {self.alpha_bar}")
        if int(self.n_total) < 1:
            raise InvalidInputError(f"n_total must be a positive integer, got {self.n_total}")

    def _value(self, t: int) -> float:
        return self.alpha_bar / (math.sqrt(t) * self.n_total)

    def describe(self) -> str:
        return f"sqrt(alpha_bar={self.alpha_bar:g}, n_total={self.n_total})"


@dataclass(frozen=True)
class Fixed(StepSchedule):
    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise InvalidInputError(f"Fixed step size must be positive, got {self.alpha}")

    def _value(self, t: int) -> float:
        return self.alpha

    def describe(self) -> str:
        return f"fixed({self.alpha:g})"


def step_size(schedule: StepSchedule, t: int) -> float:
    """α_t for the given schedule"""
    return schedule.step_size(t)


def parse_schedule(text: str, c: float = 1.0, n_total: int = 1) -> StepSchedule:
    """
    Parse a schedule flag.

    Accepted forms: ``sc-decay``, ``sc-decay:<c>``, ``inverse-t:<gamma>``,
    ``sqrt``, ``sqrt:<alpha_bar>``, ``fixed:<alpha>``.

    Args:
        text: the flag value
        c: modulus used by ``sc-decay`` when not given inline
        n_total: n_a + n_b for the schedules that scale with it

    Returns:
        The matching StepSchedule
    """
    name, _, arg = text.strip().lower().partition(':')
    try:
        value = float(arg) if arg else None
    except ValueError:
        raise InvalidInputError(f"Schedule parameter must be a number: '{text}'")

    if name == 'sc-decay':
        return StronglyConvexDecay(value if value is not None else c, n_total)
    if name == 'inverse-t':
        if value is None:
            raise InvalidInputError("inverse-t needs gamma, e.g. 'inverse-t:0.5'")
        return InverseT(value)
    if name == 'sqrt':
        return ConvexSqrtDecay(value if value is not None else 1.0, n_total)
    if name == 'fixed':
        if value is None:
            raise InvalidInputError("fixed needs a step size, e.g. 'fixed:1e-3'")
        return Fixed(value)
    raise InvalidInputError(f"Unknown schedule '{text}'. Expected sc-decay, inverse-t:<gamma>, sqrt[:<alpha_bar>] or fixed:<alpha>")
