from dataclasses import dataclass
from typing import final

import numpy as np
import numpy.polynomial.polynomial as P
import numpy.typing as npt

MAX_DEGREE = 6


@final
@dataclass(frozen=True)
class TPoly:
    """TPoly is a polynomial in the ruling parameter t, with the coefficients
    stored in ascending order of powers. Trailing (exact) zeros are trimmed.

    >>> TPoly.of(1.0, 0.0, 2.0, 0.0)
    TPoly(coeffs=(1.0, 0.0, 2.0))
    >>> TPoly.of(1.0, 0.0, 2.0)(2.0)
    9.0
    >>> TPoly.of(0.0).degree
    -1
    """

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0.0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(float(c) for c in trimmed))
        if len(self.coeffs) > MAX_DEGREE + 1:
            raise ValueError(f"TPoly degree {len(self.coeffs) - 1} exceeds {MAX_DEGREE}")

    @classmethod
    def of(cls, *coeffs: float) -> "TPoly":
        return cls(tuple(coeffs))

    @classmethod
    def from_array(cls, coeffs: npt.ArrayLike) -> "TPoly":
        return cls(tuple(float(c) for c in np.asarray(coeffs, dtype=np.float64)))

    @property
    def degree(self) -> int:
        """degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> float:
        """coefficient returns the coefficient of t^power, 0 if absent.

        >>> TPoly.of(1.0, 2.0).coefficient(5)
        0.0
        """
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0.0

    def padded(self, length: int = MAX_DEGREE + 1) -> list[float]:
        return [self.coefficient(i) for i in range(length)]

    def __call__(self, t: float) -> float:
        if not self.coeffs:
            return 0.0
        return float(P.polyval(t, self.coeffs))

    def __add__(self, other: "TPoly") -> "TPoly":
        return TPoly.from_array(P.polyadd(self.padded(), other.padded()))

    def __mul__(self, k: float) -> "TPoly":
        return TPoly(tuple(k * c for c in self.coeffs))

    __rmul__ = __mul__

    def max_deviation(self, other: "TPoly") -> float:
        """max_deviation returns the largest coefficient difference, relative to
        1 + the largest absolute coefficient of either polynomial.

        >>> TPoly.of(1.0, 3.0).max_deviation(TPoly.of(1.0, 3.0))
        0.0
        >>> TPoly.of(1.0).max_deviation(TPoly.of(0.0, 1.0))
        0.5
        """
        a = np.array(self.padded())
        b = np.array(other.padded())
        scale = 1.0 + max(float(np.max(np.abs(a))), float(np.max(np.abs(b))))
        return float(np.max(np.abs(a - b))) / scale

