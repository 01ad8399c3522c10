"""Fundamental forms, Gauss map and curvatures of parametrized surfaces."""

from typing import TYPE_CHECKING, Callable

import numpy as np
import numpy.typing as npt
from scipy.linalg import eigh

from .errors import DegenerateImmersion, SingularMetric
from .model import FormBundle, Jet2, ParamPoint, SymTensor2
from .tools.numeric import richardson
from .tools.types import Vector

if TYPE_CHECKING:
    from .surfaces import SurfacePatch

IMMERSION_EPS = 1e-12
METRIC_EPS = 1e-14


def eval_jet(surface: "SurfacePatch", p: ParamPoint) -> Jet2:
    """eval_jet returns the second-order jet of the surface at p.

    Raises OutOfDomain or DegenerateImmersion.
    """
    return surface.jet(p)


def third_form(g: SymTensor2, b: SymTensor2) -> SymTensor2:
    """third_form returns e = b·g⁻¹·b.

    >>> third_form(SymTensor2(1.0, 0.0, 1.0), SymTensor2(1.0, 0.0, 1.0))
    SymTensor2(f11=1.0, f12=0.0, f22=1.0)
    >>> third_form(SymTensor2(1.0, 1.0, 1.0), SymTensor2(1.0, 0.0, 1.0))
    Traceback (most recent call last):
    ...
    thirdform.errors.SingularMetric: First fundamental form is singular (det = 0)
    """
    if g.det <= METRIC_EPS:
        raise SingularMetric(g.det)
    bm = b.matrix()
    return SymTensor2.from_matrix(bm @ g.inverse().matrix() @ bm)


def form_bundle(jet: Jet2) -> FormBundle:
    """form_bundle computes the three fundamental forms, the unit normal
    n = (x_u × x_v) / |x_u × x_v| and the Gauss and mean curvatures.

    >>> from thirdform.surfaces import Sphere
    >>> bundle = form_bundle(Sphere(2.0).jet(ParamPoint(0.3, 0.2)))
    >>> round(bundle.K, 12), round(abs(bundle.H), 12)
    (0.25, 0.5)
    """
    cross = np.cross(jet.x_u, jet.x_v)
    length = float(np.linalg.norm(cross))
    if not length >= IMMERSION_EPS:
        raise DegenerateImmersion("at the given jet")
    n = cross / length

    g = SymTensor2(
        float(jet.x_u @ jet.x_u),
        float(jet.x_u @ jet.x_v),
        float(jet.x_v @ jet.x_v),
    )
    b = SymTensor2(
        float(jet.x_uu @ n),
        float(jet.x_uv @ n),
        float(jet.x_vv @ n),
    )
    e = third_form(g, b)
    K = b.det / g.det
    H = 0.5 * float(np.trace(g.inverse().matrix() @ b.matrix()))
    return FormBundle(g=g, b=b, e=e, n=n, K=K, H=H)


def parabolic_guard(bundle: FormBundle, eps_K: float) -> bool:
    """parabolic_guard returns True iff |K| > eps_K, that is
    iff the point is safely away from parabolic points, where III degenerates."""
    return abs(bundle.K) > eps_K


def cayley_hamilton_residual(bundle: FormBundle) -> float:
    """cayley_hamilton_residual returns max |e − 2H·b + K·g| over the entries,
    relative to 1 + max |e|.

    >>> from thirdform.surfaces import Sphere
    >>> cayley_hamilton_residual(form_bundle(Sphere(2.0).jet(ParamPoint(0.3, 0.2)))) < 1e-12
    True
    """
    e = bundle.e.matrix()
    lhs = e - 2.0 * bundle.H * bundle.b.matrix() + bundle.K * bundle.g.matrix()
    return float(np.max(np.abs(lhs))) / (1.0 + float(np.max(np.abs(e))))


def determinant_residual(bundle: FormBundle) -> float:
    """determinant_residual returns |det e − K²·det g|, relative to 1 + |det e|."""
    det_e = bundle.e.det
    return abs(det_e - bundle.K**2 * bundle.g.det) / (1.0 + abs(det_e))


def weingarten(jet: Jet2, bundle: FormBundle) -> tuple[Vector, Vector]:
    """weingarten returns the derivatives of the unit normal, n_i = −b_ij g^jk x_k."""
    w = bundle.b.matrix() @ bundle.g.inverse().matrix()
    n_u = -(w[0, 0] * jet.x_u + w[0, 1] * jet.x_v)
    n_v = -(w[1, 0] * jet.x_u + w[1, 1] * jet.x_v)
    return n_u, n_v


def principal_curvatures(bundle: FormBundle) -> tuple[float, float]:
    """principal_curvatures returns the eigenvalues k1 ≤ k2 of the shape operator g⁻¹b,
    solved as the generalized symmetric problem b·v = k·g·v.

    >>> from thirdform.surfaces import Cylinder
    >>> k1, k2 = principal_curvatures(form_bundle(Cylinder(2.0).jet(ParamPoint(1.0, 0.0))))
    >>> round(abs(k1 + k2), 12), round(abs(k1 * k2), 12)
    (0.5, 0.0)
    """
    k = eigh(bundle.b.matrix(), bundle.g.matrix(), eigvals_only=True)
    return float(k[0]), float(k[1])


PositionFunction = Callable[[float, float], npt.ArrayLike]


def finite_difference_jet(position: PositionFunction, p: ParamPoint, h: float = 1e-4) -> Jet2:
    """finite_difference_jet builds a jet of an arbitrary position function
    with central differences and one level of Richardson extrapolation.

    First partials use step h; second partials use 10·h, as their rounding error
    grows like 1/h².

    >>> jet = finite_difference_jet(lambda u, v: (u * u, u * v, v ** 3), ParamPoint(1.0, 2.0))
    >>> [round(float(i), 6) for i in jet.x_u], [round(float(i), 6) for i in jet.x_vv]
    ([2.0, 2.0, 0.0], [0.0, 0.0, 12.0])
    """

    def x(u: float, v: float) -> Vector:
        return np.asarray(position(u, v), dtype=np.float64)

    u, v = p.u, p.v
    x0 = x(u, v)

    def first(step: float) -> tuple[Vector, Vector]:
        du = (x(u + step, v) - x(u - step, v)) / (2 * step)
        dv = (x(u, v + step) - x(u, v - step)) / (2 * step)
        return du, dv

    def second(step: float) -> tuple[Vector, Vector, Vector]:
        duu = (x(u + step, v) - 2 * x0 + x(u - step, v)) / (step * step)
        dvv = (x(u, v + step) - 2 * x0 + x(u, v - step)) / (step * step)
        duv = (
            x(u + step, v + step)
            - x(u + step, v - step)
            - x(u - step, v + step)
            + x(u - step, v - step)
        ) / (4 * step * step)
        return duu, duv, dvv

    (du_h, dv_h), (du_h2, dv_h2) = first(h), first(h / 2)
    wide = 10 * h
    (duu_h, duv_h, dvv_h), (duu_h2, duv_h2, dvv_h2) = second(wide), second(wide / 2)

    return Jet2(
        x=x0,
        x_u=richardson(du_h, du_h2),
        x_v=richardson(dv_h, dv_h2),
        x_uu=richardson(duu_h, duu_h2),
        x_uv=richardson(duv_h, duv_h2),
        x_vv=richardson(dvv_h, dvv_h2),
    )
