from os import PathLike
from typing import TYPE_CHECKING, Callable, TypeVar

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    from typing_extensions import Self
else:
    Self = TypeVar("Self")


StrPath = str | PathLike[str]

Vector = npt.NDArray[np.float64]
"""Vector is a 1-D float64 array; 3-vectors for positions, 2-vectors for gradients."""

Matrix = npt.NDArray[np.float64]

ScalarFunction = Callable[[float], float]

T = TypeVar("T")


def as_vector(x: npt.ArrayLike) -> Vector:
    """as_vector converts anything array-like into a float64 array,
    without copying if x is already one.

    >>> as_vector([1, 2, 3])
    array([1., 2., 3.])
    """
    return np.asarray(x, dtype=np.float64)


def all_finite(*arrays: npt.ArrayLike) -> bool:
    """Returns True if every element of every provided array is finite.

    >>> all_finite([1.0, 2.0], 3.0)
    True
    >>> all_finite([1.0, float("nan")])
    False
    """
    return all(bool(np.all(np.isfinite(a))) for a in arrays)
