from dataclasses import dataclass
from typing import final

import numpy as np
import numpy.typing as npt

from ..tools.types import Matrix, Vector


@final
@dataclass(frozen=True)
class SymTensor2:
    """SymTensor2 is a symmetric 2×2 tensor, like the components of a fundamental form.

    >>> t = SymTensor2(4.0, 0.0, 1.0)
    >>> t.det
    4.0
    >>> t.inverse()
    SymTensor2(f11=0.25, f12=-0.0, f22=1.0)
    """

    f11: float
    f12: float
    f22: float

    @property
    def det(self) -> float:
        return self.f11 * self.f22 - self.f12 * self.f12

    @property
    def trace(self) -> float:
        return self.f11 + self.f22

    def matrix(self) -> Matrix:
        return np.array([[self.f11, self.f12], [self.f12, self.f22]], dtype=np.float64)

    def inverse(self) -> "SymTensor2":
        """inverse returns the contravariant components F^{ij}.
        The caller is responsible for checking that det is not zero."""
        d = self.det
        return SymTensor2(self.f22 / d, -self.f12 / d, self.f11 / d)

    def contract(self, a: npt.ArrayLike, b: npt.ArrayLike) -> float:
        """contract returns Σ F_ij a_i b_j."""
        va = np.asarray(a, dtype=np.float64)
        vb = np.asarray(b, dtype=np.float64)
        return float(va @ self.matrix() @ vb)

    def apply(self, a: npt.ArrayLike) -> Vector:
        """apply returns the vector F·a."""
        return self.matrix() @ np.asarray(a, dtype=np.float64)

    def is_positive_definite(self) -> bool:
        return self.f11 > 0.0 and self.det > 0.0

    def __add__(self, other: "SymTensor2") -> "SymTensor2":
        return SymTensor2(self.f11 + other.f11, self.f12 + other.f12, self.f22 + other.f22)

    def scaled(self, k: float) -> "SymTensor2":
        return SymTensor2(k * self.f11, k * self.f12, k * self.f22)

    @classmethod
    def from_matrix(cls, m: npt.ArrayLike) -> "SymTensor2":
        """from_matrix symmetrizes a 2×2 matrix into a SymTensor2.

        >>> SymTensor2.from_matrix([[1.0, 2.0], [4.0, 5.0]])
        SymTensor2(f11=1.0, f12=3.0, f22=5.0)
        """
        a = np.asarray(m, dtype=np.float64)
        return cls(float(a[0, 0]), float(0.5 * (a[0, 1] + a[1, 0])), float(a[1, 1]))
