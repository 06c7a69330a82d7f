from typing import Iterable, Optional

import numpy as np


class InvalidInputError(ValueError):
    """Raised when an operation receives arguments outside its contract."""


class UnknownProblemError(InvalidInputError):
    def __init__(self, name: str, available: Iterable[str]):
        self.name = name
        self.available = sorted(available)
        super().__init__(f"Unknown problem '{name}'. Available problems: {', '.join(self.available)}")


class NumericError(ArithmeticError):
    """
    Raised when a computation produces a non-finite value or misses a tolerance.

    The offending location is attached so callers can report it.
    """

    def __init__(self, message: str, point: Optional[np.ndarray] = None, t: Optional[int] = None,
                 r: Optional[int] = None, residual: Optional[float] = None):
        self.base_message = message
        self.point = None if point is None else np.array(point, dtype=float, copy=True)
        self.t = t
        self.r = r
        self.residual = residual

        details = []
        if t is not None:
            details.append(f"t={t}")
        if r is not None:
            details.append(f"r={r}")
        if residual is not None:
            details.append(f"residual={residual:.3e}")
        if self.point is not None:
            details.append(f"point={np.array2string(self.point, precision=6)}")
        if details:
            message = f"{message} ({', '.join(details)})"
        super().__init__(message)

    def with_context(self, t: Optional[int] = None, r: Optional[int] = None) -> "NumericError":
        """Return a copy of this error tagged with an iteration/step index"""
        return NumericError(
            self.base_message,
            point=self.point,
            t=self.t if t is None else t,
            r=self.r if r is None else r,
            residual=self.residual,
        )
