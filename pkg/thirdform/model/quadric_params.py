from dataclasses import dataclass
from typing import final

from ..errors import DomainViolation


@final
@dataclass(frozen=True)
class Quadric1Params:
    """Quadric1Params describe a quadric of the first kind, z² − ax² − by² = c, abc ≠ 0.

    >>> Quadric1Params(-1.0, -1.0, 4.0).is_sphere
    True
    >>> Quadric1Params(1.0, 0.0, 1.0)
    Traceback (most recent call last):
    ...
    thirdform.errors.DomainViolation: quadric of the first kind needs abc ≠ 0, got (1, 0, 1)
    """

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if self.a * self.b * self.c == 0.0:
            raise DomainViolation(
                "quadric of the first kind needs abc ≠ 0, "
                f"got ({self.a:g}, {self.b:g}, {self.c:g})"
            )

    @property
    def is_sphere(self) -> bool:
        return self.a == -1.0 and self.b == -1.0 and self.c > 0.0

    def omega(self, u: float, v: float) -> float:
        """ω = c + au² + bv²"""
        return self.c + self.a * u * u + self.b * v * v

    def T(self, u: float, v: float) -> float:
        """T = c + a(a+1)u² + b(b+1)v²"""
        return self.c + self.a * (self.a + 1.0) * u * u + self.b * (self.b + 1.0) * v * v


@final
@dataclass(frozen=True)
class Quadric2Params:
    """Quadric2Params describe a quadric of the second kind, z = (a/2)x² + (b/2)y², a, b > 0.

    >>> Quadric2Params(1.0, 2.0).g(1.0, 1.0)
    6.0
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.b > 0.0):
            raise DomainViolation(
                f"quadric of the second kind needs a, b > 0, got ({self.a:g}, {self.b:g})"
            )

    def g(self, u: float, v: float) -> float:
        """g = det(g_ij) = 1 + (au)² + (bv)²"""
        return 1.0 + (self.a * u) ** 2 + (self.b * v) ** 2
