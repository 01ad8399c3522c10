"""Beltrami differential parameters ∇^F and Δ^F for the three fundamental forms.

Δ^F follows the sign convention of the positive Laplacian:
Δ^F φ = −(1/√|f|) ∂_j(√|f| F^{ij} ∂_i φ), so that Δ = −∂²/∂u² − ∂²/∂v² on a flat metric.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, Callable, Mapping, Optional, Sequence

import numpy as np
import numpy.typing as npt

from .errors import SingularForm, StencilOutsideDomain
from .kernel import form_bundle, parabolic_guard, weingarten
from .model import FormBundle, FormSelector, Jet2, OperatorSample, ParamPoint, SymTensor2
from .options import Tolerances
from .tools.numeric import central_difference, richardson
from .tools.types import Matrix, Vector

if TYPE_CHECKING:
    from .surfaces import SurfacePatch

FORM_EPS = 1e-14

logger = logging.getLogger(__name__)

FieldFunction = Callable[[ParamPoint, Jet2], float]
GradientFunction = Callable[[ParamPoint, Jet2], Vector]
HessianFunction = Callable[[ParamPoint, Jet2], Matrix]


class ScalarField:
    """ScalarField is a function φ(u, v) on a surface together with its gradient (φ_u, φ_v)
    and, optionally, its Hessian. All three callables receive the parameter point
    and the surface's jet at that point.
    """

    def __init__(
        self,
        name: str,
        value: FieldFunction,
        gradient: GradientFunction,
        hessian: Optional[HessianFunction] = None,
    ) -> None:
        self.name = name
        self.value = value
        self.gradient = gradient
        self.hessian = hessian

    def __repr__(self) -> str:
        return f"<ScalarField {self.name}>"

    def __add__(self, other: "ScalarField") -> "ScalarField":
        hessian: Optional[HessianFunction] = None
        if self.hessian and other.hessian:
            h1, h2 = self.hessian, other.hessian
            hessian = lambda p, j: h1(p, j) + h2(p, j)  # noqa: E731

        return ScalarField(
            f"({self.name} + {other.name})",
            lambda p, j: self.value(p, j) + other.value(p, j),
            lambda p, j: self.gradient(p, j) + other.gradient(p, j),
            hessian,
        )

    def __mul__(self, k: float) -> "ScalarField":
        hessian: Optional[HessianFunction] = None
        if self.hessian:
            h = self.hessian
            hessian = lambda p, j: k * h(p, j)  # noqa: E731

        return ScalarField(
            f"{k:g}·{self.name}",
            lambda p, j: k * self.value(p, j),
            lambda p, j: k * self.gradient(p, j),
            hessian,
        )

    __rmul__ = __mul__

    @classmethod
    def constant(cls, c: float) -> "ScalarField":
        return cls(
            f"{c:g}",
            lambda p, j: c,
            lambda p, j: np.zeros(2),
            lambda p, j: np.zeros((2, 2)),
        )

    @classmethod
    def coordinate(cls, k: int) -> "ScalarField":
        """coordinate returns the k-th coordinate function x_k of the position vector."""
        return cls(
            f"x{k + 1}",
            lambda p, j: float(j.x[k]),
            lambda p, j: np.array([j.x_u[k], j.x_v[k]]),
            lambda p, j: np.array([[j.x_uu[k], j.x_uv[k]], [j.x_uv[k], j.x_vv[k]]]),
        )

    @classmethod
    def gauss_map(cls, k: int) -> "ScalarField":
        """gauss_map returns the k-th component of the unit normal n."""

        def gradient(p: ParamPoint, j: Jet2) -> Vector:
            n_u, n_v = weingarten(j, form_bundle(j))
            return np.array([n_u[k], n_v[k]])

        return cls(f"n{k + 1}", lambda p, j: float(form_bundle(j).n[k]), gradient)

    @classmethod
    def polynomial(cls, coefficients: Mapping[tuple[int, int], float]) -> "ScalarField":
        """polynomial returns Σ c_ij u^i v^j of the parameters, given a {(i, j): c_ij} mapping.

        >>> f = ScalarField.polynomial({(2, 0): 1.0, (1, 1): 3.0})
        >>> p = ParamPoint(2.0, 1.0)
        >>> f.value(p, None), f.gradient(p, None).tolist(), f.hessian(p, None).tolist()
        (10.0, [7.0, 6.0], [[2.0, 3.0], [3.0, 0.0]])
        """
        terms = [(i, j, float(c)) for (i, j), c in coefficients.items() if c != 0.0]

        def power(x: float, n: int) -> float:
            return x**n if n >= 0 else 0.0

        def value(p: ParamPoint, _: Jet2) -> float:
            return sum(c * power(p.u, i) * power(p.v, j) for i, j, c in terms)

        def gradient(p: ParamPoint, _: Jet2) -> Vector:
            return np.array(
                [
                    sum(c * i * power(p.u, i - 1) * power(p.v, j) for i, j, c in terms),
                    sum(c * j * power(p.u, i) * power(p.v, j - 1) for i, j, c in terms),
                ]
            )

        def hessian(p: ParamPoint, _: Jet2) -> Matrix:
            uu = sum(c * i * (i - 1) * power(p.u, i - 2) * power(p.v, j) for i, j, c in terms)
            uv = sum(c * i * j * power(p.u, i - 1) * power(p.v, j - 1) for i, j, c in terms)
            vv = sum(c * j * (j - 1) * power(p.u, i) * power(p.v, j - 2) for i, j, c in terms)
            return np.array([[uu, uv], [uv, vv]], dtype=np.float64)

        name = " + ".join(f"{c:g}·u^{i}·v^{j}" for i, j, c in terms) or "0"
        return cls(name, value, gradient, hessian)

    @classmethod
    def from_function(
        cls,
        name: str,
        f: Callable[[ParamPoint], float],
        h: float = 1e-4,
    ) -> "ScalarField":
        """from_function wraps an arbitrary function of the parameters;
        the gradient is approximated by Richardson-extrapolated central differences.

        >>> f = ScalarField.from_function("u³v", lambda p: p.u ** 3 * p.v)
        >>> [round(float(i), 8) for i in f.gradient(ParamPoint(1.0, 2.0), None)]
        [6.0, 1.0]
        """

        def gradient(p: ParamPoint, _: Jet2) -> Vector:
            return np.array(
                [
                    central_difference(lambda u: f(ParamPoint(u, p.v)), p.u, h),
                    central_difference(lambda v: f(ParamPoint(p.u, v)), p.v, h),
                ]
            )

        return cls(name, lambda p, _: f(p), gradient)


def nabla(form: SymTensor2, dphi: npt.ArrayLike, dpsi: npt.ArrayLike) -> float:
    """nabla returns the first differential parameter ∇^F(φ, ψ) = F^{ij} φ_i ψ_j.

    >>> nabla(SymTensor2(4.0, 0.0, 1.0), (1.0, 0.0), (1.0, 0.0))
    0.25
    >>> nabla(SymTensor2(1.0, 1.0, 1.0), (1.0, 0.0), (1.0, 0.0))
    Traceback (most recent call last):
    ...
    thirdform.errors.SingularForm: Degenerate form (det = 0); parabolic point?
    """
    if abs(form.det) < FORM_EPS:
        raise SingularForm(form.det)
    return form.inverse().contract(dphi, dpsi)


def _checked_form(bundle: FormBundle, selector: FormSelector, eps_K: float) -> SymTensor2:
    if selector != "I" and not parabolic_guard(bundle, eps_K):
        raise SingularForm(bundle.K, "form (K)")
    form = bundle.form(selector)
    if abs(form.det) < FORM_EPS:
        raise SingularForm(form.det)
    return form


def _fluxes(
    surface: "SurfacePatch",
    selector: FormSelector,
    fields: Sequence[ScalarField],
    q: ParamPoint,
    eps_K: float,
) -> Matrix:
    """Returns the (2, len(fields)) matrix with columns w = √|f|·F⁻¹·∇φ."""
    jet = surface.jet(q)
    form = _checked_form(form_bundle(jet), selector, eps_K)
    density = np.sqrt(abs(form.det))
    grads = np.column_stack([phi.gradient(q, jet) for phi in fields])
    return density * (form.inverse().matrix() @ grads)


def _check_stencil(surface: "SurfacePatch", p: ParamPoint, h: float) -> None:
    for du, dv in ((h, 0.0), (-h, 0.0), (0.0, h), (0.0, -h)):
        if not surface.contains(p.shifted(du, dv)):
            raise StencilOutsideDomain(surface.name, p.u, p.v, h)


def laplace_beltrami_many(
    surface: "SurfacePatch",
    selector: FormSelector,
    fields: Sequence[ScalarField],
    p: ParamPoint,
    tolerances: Tolerances = Tolerances(),
) -> Vector:
    """laplace_beltrami_many evaluates Δ^F on several scalar fields at once,
    sharing the jets and forms computed at the stencil points.

    The fluxes √|f|·F^{ij}·φ_i are computed from analytic jets at p ± h·e_k and p ± h/2·e_k,
    and their divergence is approximated with central differences improved
    with one level of Richardson extrapolation.
    """
    h = tolerances.fd_step
    eps_K = tolerances.eps_K
    _check_stencil(surface, p, h)

    def divergence(step: float) -> Vector:
        w_u_plus = _fluxes(surface, selector, fields, p.shifted(step, 0.0), eps_K)
        w_u_minus = _fluxes(surface, selector, fields, p.shifted(-step, 0.0), eps_K)
        w_v_plus = _fluxes(surface, selector, fields, p.shifted(0.0, step), eps_K)
        w_v_minus = _fluxes(surface, selector, fields, p.shifted(0.0, -step), eps_K)
        return (w_u_plus[0] - w_u_minus[0] + w_v_plus[1] - w_v_minus[1]) / (2.0 * step)

    div = richardson(divergence(h), divergence(0.5 * h))
    center = _checked_form(form_bundle(surface.jet(p)), selector, eps_K)
    return -div / np.sqrt(abs(center.det))


def laplace_beltrami(
    surface: "SurfacePatch",
    selector: FormSelector,
    phi: ScalarField,
    p: ParamPoint,
    tolerances: Tolerances = Tolerances(),
) -> float:
    """laplace_beltrami returns the second differential parameter Δ^F φ at p,
    for F being the first, second or third fundamental form.

    Raises StencilOutsideDomain if the finite-difference stencil doesn't fit in the domain,
    and SingularForm if F degenerates (for II and III: near parabolic points)
    anywhere on the stencil.
    """
    return float(laplace_beltrami_many(surface, selector, [phi], p, tolerances)[0])


POSITION = (ScalarField.coordinate(0), ScalarField.coordinate(1), ScalarField.coordinate(2))
GAUSS_MAP = (ScalarField.gauss_map(0), ScalarField.gauss_map(1), ScalarField.gauss_map(2))


def delta_position(
    surface: "SurfacePatch",
    p: ParamPoint,
    form: FormSelector = "III",
    tolerances: Tolerances = Tolerances(),
) -> OperatorSample:
    """delta_position evaluates Δ^F x componentwise at p."""
    value = laplace_beltrami_many(surface, form, POSITION, p, tolerances)
    jet = surface.jet(p)
    bundle = form_bundle(jet)
    return OperatorSample(point=p, x=jet.x, value=value, K=bundle.K, H=bundle.H, n=bundle.n)


def delta3_position(
    surface: "SurfacePatch",
    p: ParamPoint,
    tolerances: Tolerances = Tolerances(),
) -> OperatorSample:
    """delta3_position evaluates Δ^III x at p."""
    return delta_position(surface, p, "III", tolerances)


def delta3_gauss(
    surface: "SurfacePatch",
    p: ParamPoint,
    tolerances: Tolerances = Tolerances(),
) -> Vector:
    """delta3_gauss evaluates Δ^III n at p. The Gauss map is a local isometry
    from (S, III) onto the unit sphere, so the result is 2n on every surface."""
    return laplace_beltrami_many(surface, "III", GAUSS_MAP, p, tolerances)


def curvature_ratio(surface: "SurfacePatch", p: ParamPoint) -> float:
    """curvature_ratio returns 2H/K at p."""
    bundle = form_bundle(surface.jet(p))
    return 2.0 * bundle.H / bundle.K


def check_identity_eq2(
    surface: "SurfacePatch",
    p: ParamPoint,
    tolerances: Tolerances = Tolerances(),
) -> float:
    """check_identity_eq2 returns |Δ^III x − ∇^III(2H/K, n) + (2H/K)·n| at p.

    ∇^III(2H/K, ·) is applied to each component of n; the gradient of 2H/K
    comes from central differences, n's gradient from the Weingarten equations.
    """
    sample = delta3_position(surface, p, tolerances)
    ratio = ScalarField.from_function(
        "2H/K", lambda q: curvature_ratio(surface, q), tolerances.fd_step
    )

    jet = surface.jet(p)
    bundle = form_bundle(jet)
    f = ratio.value(p, jet)
    coefficients = bundle.e.inverse().apply(ratio.gradient(p, jet))
    n_u, n_v = weingarten(jet, bundle)
    nabla_f_n = coefficients[0] * n_u + coefficients[1] * n_v

    return float(np.linalg.norm(sample.value - nabla_f_n + f * bundle.n))


def evaluate_samples(
    surface: "SurfacePatch",
    points: Sequence[ParamPoint],
    form: FormSelector = "III",
    tolerances: Tolerances = Tolerances(),
    workers: int = 1,
) -> list[OperatorSample]:
    """evaluate_samples evaluates Δ^F x at every point, keeping the order of points.
    With workers > 1 the points are spread over a thread pool."""
    logger.debug("Evaluating Δ^%s x at %d point(s) of %s", form, len(points), surface.name)

    def evaluate(p: ParamPoint) -> OperatorSample:
        return delta_position(surface, p, form, tolerances)

    if workers <= 1:
        return [evaluate(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, points))
