"""
Closed-form upper bounds on the expected optimality gap of SA2GD.

Strongly convex regimes decay like 1/(T + 1) under α_t = 2/(c (t + 1) n),
convex regimes like 1/√T under α_t = ᾱ/(√t n), where n = n_a + n_b.
"""

import math
from dataclasses import dataclass
from typing import Optional

from ..core.errors import InvalidInputError
from ..problems.constants import ProblemConstants
from ..problems.problem import Regime

_REQUIRED = {
    Regime.SMOOTH_STRONGLY_CONVEX: ('theta', 'L', 'c', 'G_hat'),
    Regime.NONSMOOTH_STRONGLY_CONVEX: ('theta', 'L_hat', 'L_tilde', 'c_hat'),
    Regime.SMOOTH_CONVEX: ('theta', 'L', 'G_hat'),
    Regime.NONSMOOTH_CONVEX: ('theta', 'L_hat', 'L_tilde'),
}
_MODULI = ('c', 'c_hat')


@dataclass(frozen=True)
class RateBoundInputs:
    constants: ProblemConstants
    n_a: int
    n_b: int
    regime: Regime
    alpha_bar: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'regime', Regime(self.regime))
        if self.n_a < 0 or self.n_b < 0 or self.n_a + self.n_b < 1:
            raise InvalidInputError(f"Invalid step counts n_a={self.n_a}, n_b={self.n_b}")
        if not self.regime.has_bounds:
            raise InvalidInputError(f"No theoretical bound for regime {self.regime.value}")

        missing = []
        for name in _REQUIRED[self.regime]:
            value = getattr(self.constants, name)
            if value is None or value < 0 or (name in _MODULI and value <= 0):
                missing.append(name)
        if not self.regime.strongly_convex and not (self.alpha_bar is not None and self.alpha_bar > 0):
            missing.append('alpha_bar')
        if missing:
            raise InvalidInputError(
                f"Regime {self.regime.value} needs positive constants: {', '.join(missing)}"
            )

    @property
    def n_total(self) -> int:
        return self.n_a + self.n_b

    @property
    def M(self) -> float:
        """2 n² (G + Ḡ M_∇ + L Θ √(G + Ḡ M_∇))"""
        k = self.constants
        if k.G_hat is None or k.L is None:
            raise InvalidInputError("M needs G, G_bar, M_nabla and L")
        return 2.0 * self.n_total ** 2 * (k.G_hat ** 2 + k.L * k.theta * k.G_hat)

    @property
    def M_tilde(self) -> float:
        return self.M / self.n_total ** 2


def _check_horizon(T: int) -> int:
    if int(T) < 1:
        raise InvalidInputError(f"Horizon T must be at least 1, got {T}")
    return int(T)


def theoretical_bound_smooth_sc(inputs: RateBoundInputs, T: int) -> float:
    """4 / (c (T + 1)) (Ĝ² + L Θ Ĝ)"""
    T = _check_horizon(T)
    k = inputs.constants
    return 4.0 / (k.c * (T + 1)) * (k.G_hat ** 2 + k.L * k.theta * k.G_hat)


def theoretical_bound_nonsmooth_sc(inputs: RateBoundInputs, T: int) -> float:
    """4 / (ĉ (T + 1)) (2 L̃² + L̂ L̃ + ĉ Θ L̃)"""
    T = _check_horizon(T)
    k = inputs.constants
    return 4.0 / (k.c_hat * (T + 1)) * (2.0 * k.L_tilde ** 2 + k.L_hat * k.L_tilde + k.c_hat * k.theta * k.L_tilde)


def theoretical_bound_convex(inputs: RateBoundInputs, T: int, smooth: bool) -> float:
    """
    Convex regimes under α_t = ᾱ / (√t n):

    smooth:     (Θ²/(2ᾱ) + 2ᾱ Ĝ² + 2ᾱ L Θ Ĝ) / √T
    nonsmooth:  (Θ²/(2ᾱ) + 4ᾱ L̃² + 2ᾱ L̃ L̂) / √T
    """
    T = _check_horizon(T)
    if inputs.alpha_bar is None or not inputs.alpha_bar > 0:
        raise InvalidInputError("The convex bounds need alpha_bar > 0")
    k = inputs.constants
    a = inputs.alpha_bar
    if smooth:
        if k.G_hat is None or k.L is None:
            raise InvalidInputError("The smooth convex bound needs G_hat and L")
        numerator = k.theta ** 2 / (2 * a) + 2 * a * k.G_hat ** 2 + 2 * a * k.L * k.theta * k.G_hat
    else:
        if k.L_tilde is None or k.L_hat is None:
            raise InvalidInputError("The nonsmooth convex bound needs L_tilde and L_hat")
        numerator = k.theta ** 2 / (2 * a) + 4 * a * k.L_tilde ** 2 + 2 * a * k.L_tilde * k.L_hat
    return numerator / math.sqrt(T)


def theoretical_bound_iterate(inputs: RateBoundInputs, gamma: float, x0_error: float, T: int) -> float:
    """
    Bound on E||x_T - x_*||² under α_t = γ / t, smooth strongly convex case.

    Args:
        inputs: smooth strongly convex inputs
        gamma: step constant, must exceed 1 / (2 n c)
        x0_error: ||x_0 - x_*||²
        T: horizon

    Returns:
        max(2γ² M / (2 c n γ - 1), ||x_0 - x_*||²) / T
    """
    T = _check_horizon(T)
    c = inputs.constants.c
    if c is None or c <= 0:
        raise InvalidInputError("The iterate bound needs a positive strong-convexity modulus c")
    n = inputs.n_total
    threshold = 1.0 / (2.0 * n * c)
    if not gamma > threshold:
        raise InvalidInputError(f"gamma must exceed 1/(2 (n_a + n_b) c) = {threshold:.6g}, got {gamma}")
    if x0_error < 0:
        raise InvalidInputError(f"x0_error is a squared distance, got {x0_error}")
    return max(2.0 * gamma ** 2 * inputs.M / (2.0 * c * n * gamma - 1.0), x0_error) / T


def theoretical_bound(inputs: RateBoundInputs, T: int) -> float:
    """Bound matching the regime of the inputs"""
    if inputs.regime is Regime.SMOOTH_STRONGLY_CONVEX:
        return theoretical_bound_smooth_sc(inputs, T)
    if inputs.regime is Regime.NONSMOOTH_STRONGLY_CONVEX:
        return theoretical_bound_nonsmooth_sc(inputs, T)
    return theoretical_bound_convex(inputs, T, smooth=inputs.regime is Regime.SMOOTH_CONVEX)
