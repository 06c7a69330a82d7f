from typing import TypeAlias

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import InvalidInputError

# Decision vectors (x, x_t, x_*, aggregated iterates) are plain float64 arrays.
Point: TypeAlias = NDArray[np.float64]
Vector: TypeAlias = NDArray[np.float64]


def as_point(x: ArrayLike, dimension: int = None) -> Point:
    """
    Convert array-like input to a finite 1-D float64 point.

    Args:
        x: scalar or sequence of coordinates
        dimension: expected dimension, checked when given

    Returns:
        A fresh read-only float64 array
    """
    point = np.array(x, dtype=np.float64, copy=True).reshape(-1)
    if point.size < 1:
        raise InvalidInputError("A point needs at least one coordinate")
    if not np.all(np.isfinite(point)):
        raise InvalidInputError(f"Point has non-finite entries: {point}")
    if dimension is not None and point.size != dimension:
        raise InvalidInputError(f"Dimension mismatch: expected {dimension}, got {point.size}")
    point.setflags(write=False)
    return point
