from math import cos, cosh, pi, sin, sinh
from typing import Optional, Sequence, final

import numpy as np

from ..errors import DomainViolation
from ..model import Jet2, ParamPoint
from ..options import Tolerances
from ..tools.types import Vector
from .patch import Domain, SurfacePatch

ZERO = np.zeros(3, dtype=np.float64)


def _vec(x: float, y: float, z: float) -> Vector:
    return np.array([x, y, z], dtype=np.float64)


@final
class Sphere(SurfacePatch):
    """Sphere of radius r, x(u, v) = c + r(cos u cos v, sin u cos v, sin v).
    The default domain stays away from the poles (v = ±π/2)."""

    def __init__(
        self,
        r: float = 1.0,
        center: Sequence[float] = (0.0, 0.0, 0.0),
        domain: Optional[Domain] = None,
    ) -> None:
        if not abs(r) > 0.0:
            raise DomainViolation(f"sphere needs r ≠ 0, got {r:g}")
        if len(center) != 3:
            raise DomainViolation(f"sphere center needs 3 coordinates, got {len(center)}")
        params = {"r": r}
        if any(center):
            params.update(cx=center[0], cy=center[1], cz=center[2])
        super().__init__("sphere", params, domain or Domain(0.0, 2 * pi, -1.2, 1.2))
        self.r = r
        self.center = np.array(center, dtype=np.float64)

    def evaluate(self, p: ParamPoint) -> Jet2:
        r = self.r
        cu, su, cv, sv = cos(p.u), sin(p.u), cos(p.v), sin(p.v)
        return Jet2(
            x=self.center + r * _vec(cu * cv, su * cv, sv),
            x_u=r * _vec(-su * cv, cu * cv, 0.0),
            x_v=r * _vec(-cu * sv, -su * sv, cv),
            x_uu=r * _vec(-cu * cv, -su * cv, 0.0),
            x_uv=r * _vec(su * sv, -cu * sv, 0.0),
            x_vv=r * _vec(-cu * cv, -su * cv, -sv),
        )


@final
class Plane(SurfacePatch):
    """Plane z = 0. Every point is parabolic."""

    def __init__(self, domain: Optional[Domain] = None) -> None:
        super().__init__("plane", {}, domain or Domain(-1.0, 1.0, -1.0, 1.0))

    def evaluate(self, p: ParamPoint) -> Jet2:
        return Jet2(
            x=_vec(p.u, p.v, 0.0),
            x_u=_vec(1.0, 0.0, 0.0),
            x_v=_vec(0.0, 1.0, 0.0),
            x_uu=ZERO,
            x_uv=ZERO,
            x_vv=ZERO,
        )


@final
class Cylinder(SurfacePatch):
    """Circular cylinder (r cos u, r sin u, v). Every point is parabolic."""

    def __init__(self, r: float = 1.0, domain: Optional[Domain] = None) -> None:
        if not r > 0.0:
            raise DomainViolation(f"cylinder needs r > 0, got {r:g}")
        super().__init__("cylinder", {"r": r}, domain or Domain(0.0, 2 * pi, -1.0, 1.0))
        self.r = r

    def evaluate(self, p: ParamPoint) -> Jet2:
        r = self.r
        cu, su = cos(p.u), sin(p.u)
        return Jet2(
            x=_vec(r * cu, r * su, p.v),
            x_u=_vec(-r * su, r * cu, 0.0),
            x_v=_vec(0.0, 0.0, 1.0),
            x_uu=_vec(-r * cu, -r * su, 0.0),
            x_uv=ZERO,
            x_vv=ZERO,
        )


@final
class Helicoid(SurfacePatch):
    """Helicoid x(s, t) = (c₂ + (λ+t) cos s, c₄ + (λ+t) sin s, c₅s + c₆),
    with u = s and v = t."""

    def __init__(
        self,
        c5: float = 1.0,
        lam: float = 0.0,
        c2: float = 0.0,
        c4: float = 0.0,
        c6: float = 0.0,
        domain: Optional[Domain] = None,
    ) -> None:
        if not abs(c5) > 0.0:
            raise DomainViolation(f"helicoid needs c5 ≠ 0, got {c5:g}")
        super().__init__(
            "helicoid",
            {"c5": c5, "lam": lam, "c2": c2, "c4": c4, "c6": c6},
            domain or Domain(0.0, pi, 0.5, 2.0),
        )
        self.c5 = c5
        self.lam = lam
        self.offset = _vec(c2, c4, c6)

    def q(self, t: float) -> float:
        return (self.lam + t) ** 2 + self.c5 * self.c5

    def guard(self, p: ParamPoint, tolerances: Tolerances) -> bool:
        return self.q(p.v) > tolerances.eps_q

    def evaluate(self, p: ParamPoint) -> Jet2:
        s, t = p.u, p.v
        w = self.lam + t
        cs, ss = cos(s), sin(s)
        return Jet2(
            x=self.offset + _vec(w * cs, w * ss, self.c5 * s),
            x_u=_vec(-w * ss, w * cs, self.c5),
            x_v=_vec(cs, ss, 0.0),
            x_uu=_vec(-w * cs, -w * ss, 0.0),
            x_uv=_vec(-ss, cs, 0.0),
            x_vv=ZERO,
        )


@final
class Catenoid(SurfacePatch):
    """Catenoid (c cosh(v/c) cos u, c cosh(v/c) sin u, v)."""

    def __init__(self, c: float = 1.0, domain: Optional[Domain] = None) -> None:
        if not abs(c) > 0.0:
            raise DomainViolation(f"catenoid needs c ≠ 0, got {c:g}")
        super().__init__("catenoid", {"c": c}, domain or Domain(0.0, 2 * pi, -1.0, 1.0))
        self.c = c

    def evaluate(self, p: ParamPoint) -> Jet2:
        c = self.c
        cu, su = cos(p.u), sin(p.u)
        ch, sh = cosh(p.v / c), sinh(p.v / c)
        return Jet2(
            x=_vec(c * ch * cu, c * ch * su, p.v),
            x_u=_vec(-c * ch * su, c * ch * cu, 0.0),
            x_v=_vec(sh * cu, sh * su, 1.0),
            x_uu=_vec(-c * ch * cu, -c * ch * su, 0.0),
            x_uv=_vec(-sh * su, sh * cu, 0.0),
            x_vv=_vec(ch * cu / c, ch * su / c, 0.0),
        )
