from typing import Callable, TypeVar

import numpy as np
import numpy.typing as npt

from .types import Vector

_ArrayT = TypeVar("_ArrayT", float, npt.NDArray[np.float64])


def richardson(coarse: _ArrayT, fine: _ArrayT) -> _ArrayT:
    """richardson combines two central-difference estimates, computed with steps h and h/2,
    into a single estimate with the leading O(h²) error term eliminated.

    >>> richardson(1.0, 1.0)
    1.0
    >>> richardson(4.0, 1.0)
    0.0
    """
    return (4.0 * fine - coarse) / 3.0


def central_difference(f: Callable[[float], _ArrayT], x: float, h: float) -> _ArrayT:
    """central_difference approximates f′(x) with (f(x+h) − f(x−h)) / 2h,
    improved with one level of Richardson extrapolation.

    >>> round(central_difference(lambda x: x ** 3, 2.0, 1e-3), 9)
    12.0
    """
    coarse = (f(x + h) - f(x - h)) / (2.0 * h)
    half = 0.5 * h
    fine = (f(x + half) - f(x - half)) / h
    return richardson(coarse, fine)


def chebyshev_nodes(lo: float, hi: float, count: int) -> Vector:
    """chebyshev_nodes returns `count` Chebyshev points of the first kind mapped onto
    the open interval (lo, hi), in ascending order.

    >>> nodes = chebyshev_nodes(-1.0, 1.0, 2)
    >>> [round(float(i), 6) for i in nodes]
    [-0.707107, 0.707107]
    """
    if count < 1:
        raise ValueError(f"chebyshev_nodes needs at least one node, got {count}")
    k = np.arange(count, dtype=np.float64)
    reference = -np.cos((2.0 * k + 1.0) * np.pi / (2.0 * count))
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * reference
