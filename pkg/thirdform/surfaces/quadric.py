from math import sqrt
from typing import Optional, final

import numpy as np

from ..errors import DomainViolation
from ..model import Jet2, ParamPoint, Quadric1Params, Quadric2Params
from ..options import Tolerances
from .patch import Domain, SurfacePatch


def _axis_range(coefficient: float, c: float, other_opens: bool) -> tuple[float, float]:
    if c > 0.0:
        if coefficient < 0.0:
            half = 0.95 * sqrt(c / (2.0 * -coefficient))
            return -half, half
        return -1.0, 1.0

    # c < 0: one axis (the "opening" one) has to reach past the neck at √(|c|/k),
    # the other one stays narrow enough to keep ω positive.
    if coefficient > 0.0 and not other_opens:
        r = sqrt(-c / coefficient)
        return 1.2 * r, 2.2 * r
    elif coefficient > 0.0:
        half = 0.5 * sqrt(-c / coefficient)
        return -half, half
    else:
        half = sqrt(0.2 * -c / -coefficient)
        return -half, half


def default_quadric1_domain(p: Quadric1Params) -> Domain:
    """default_quadric1_domain returns a parameter rectangle on which ω = c + au² + bv² stays
    positive, keeping the whole rectangle on the upper branch z = √ω.

    >>> default_quadric1_domain(Quadric1Params(-1.0, -1.0, 2.0))
    Domain(u0=-0.95, u1=0.95, v0=-0.95, v1=0.95)
    >>> default_quadric1_domain(Quadric1Params(1.0, 1.0, -1.0))
    Domain(u0=1.2, u1=2.2, v0=-0.5, v1=0.5)
    """
    if p.c > 0.0:
        u0, u1 = _axis_range(p.a, p.c, other_opens=False)
        v0, v1 = _axis_range(p.b, p.c, other_opens=False)
    elif p.a > 0.0:
        u0, u1 = _axis_range(p.a, p.c, other_opens=False)
        v0, v1 = _axis_range(p.b, p.c, other_opens=True)
    elif p.b > 0.0:
        u0, u1 = _axis_range(p.a, p.c, other_opens=True)
        v0, v1 = _axis_range(p.b, p.c, other_opens=False)
    else:
        raise DomainViolation(
            f"z² − ({p.a:g})x² − ({p.b:g})y² = {p.c:g} has no real points"
        )
    return Domain(u0, u1, v0, v1)


@final
class Quadric1Surface(SurfacePatch):
    """Quadric of the first kind, z² − ax² − by² = c, on the chart (u, v, √ω),
    with ω = c + au² + bv². Only the upper branch is modelled."""

    def __init__(self, params: Quadric1Params, domain: Optional[Domain] = None) -> None:
        super().__init__(
            "quadric1",
            {"a": params.a, "b": params.b, "c": params.c},
            domain or default_quadric1_domain(params),
        )
        self.quadric = params

    def contains(self, p: ParamPoint) -> bool:
        return super().contains(p) and self.quadric.omega(p.u, p.v) > 0.0

    def guard(self, p: ParamPoint, tolerances: Tolerances) -> bool:
        return (
            self.quadric.omega(p.u, p.v) > tolerances.eps_domain
            and self.quadric.T(p.u, p.v) > tolerances.eps_domain
        )

    def evaluate(self, p: ParamPoint) -> Jet2:
        a, b, c = self.quadric.a, self.quadric.b, self.quadric.c
        u, v = p.u, p.v
        omega = self.quadric.omega(u, v)
        z = sqrt(omega)
        w32 = omega * z
        return Jet2(
            x=np.array([u, v, z]),
            x_u=np.array([1.0, 0.0, a * u / z]),
            x_v=np.array([0.0, 1.0, b * v / z]),
            x_uu=np.array([0.0, 0.0, a * (c + b * v * v) / w32]),
            x_uv=np.array([0.0, 0.0, -a * b * u * v / w32]),
            x_vv=np.array([0.0, 0.0, b * (c + a * u * u) / w32]),
        )


@final
class Quadric2Surface(SurfacePatch):
    """Quadric of the second kind, (u, v, (a/2)u² + (b/2)v²)."""

    def __init__(self, params: Quadric2Params, domain: Optional[Domain] = None) -> None:
        super().__init__(
            "quadric2",
            {"a": params.a, "b": params.b},
            domain or Domain(-1.0, 1.0, -1.0, 1.0),
        )
        self.quadric = params

    def evaluate(self, p: ParamPoint) -> Jet2:
        a, b = self.quadric.a, self.quadric.b
        u, v = p.u, p.v
        return Jet2(
            x=np.array([u, v, 0.5 * (a * u * u + b * v * v)]),
            x_u=np.array([1.0, 0.0, a * u]),
            x_v=np.array([0.0, 1.0, b * v]),
            x_uu=np.array([0.0, 0.0, a]),
            x_uv=np.array([0.0, 0.0, 0.0]),
            x_vv=np.array([0.0, 0.0, b]),
        )
