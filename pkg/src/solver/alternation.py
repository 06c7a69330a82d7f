from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..core.errors import InvalidInputError
from ..core.noise import RngKey


class Pattern(Enum):
    BLOCK_A_THEN_B = "block"
    INTERLEAVED = "interleaved"
    RANDOM_POSITIONS = "random"


@dataclass(frozen=True)
class AlternationSpec:
    """Optimization effort (n_a, n_b) and the order in which the steps are taken"""
    n_a: int
    n_b: int
    pattern: Pattern = Pattern.BLOCK_A_THEN_B

    def __post_init__(self):
        if self.n_a < 0 or self.n_b < 0:
            raise InvalidInputError(f"Step counts must be nonnegative, got n_a={self.n_a}, n_b={self.n_b}")
        if self.n_a + self.n_b < 1:
            raise InvalidInputError("n_a + n_b must be at least 1")
        object.__setattr__(self, 'pattern', Pattern(self.pattern))

    @property
    def n_total(self) -> int:
        return self.n_a + self.n_b


def _rounded(p: int, q: int) -> int:
    # round(p / q) with halves rounded up, in integer arithmetic
    return (2 * p + q) // (2 * q)


def alternation_order(spec: AlternationSpec, key: Optional[RngKey] = None) -> Tuple[str, ...]:
    """
    Tags ('a' or 'b') of the n_a + n_b steps of one outer iteration.

    BLOCK_A_THEN_B takes all 'a' steps first. INTERLEAVED spreads the 'a'
    steps evenly over the iteration, e.g. (3, 1) gives a, a, b, a.
    RANDOM_POSITIONS draws a uniformly random arrangement from key.
    """
    n = spec.n_total
    if spec.pattern is Pattern.BLOCK_A_THEN_B:
        return ('a',) * spec.n_a + ('b',) * spec.n_b

    if spec.pattern is Pattern.INTERLEAVED:
        return tuple(
            'a' if _rounded((j + 1) * spec.n_a, n) > _rounded(j * spec.n_a, n) else 'b'
            for j in range(n)
        )

    if key is None:
        raise InvalidInputError("RANDOM_POSITIONS needs an rng key")
    positions = set(key.generator().choice(n, size=spec.n_a, replace=False).tolist())
    return tuple('a' if j in positions else 'b' for j in range(n))
