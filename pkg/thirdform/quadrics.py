"""Closed-form fundamental forms and Δ^III operators of the two non-ruled quadric families.

Kind I is z² − ax² − by² = c (abc ≠ 0) on the chart (u, v, √ω), ω = c + au² + bv²,
kind II is z = (a/2)x² + (b/2)y² (a, b > 0) on the chart (u, v, (a/2)u² + (b/2)v²).
Everything here is evaluated from explicit formulas, independently of the generic kernel,
so that the two can be compared.
"""

import logging
from dataclasses import dataclass
from math import sqrt
from typing import Literal, Optional, Sequence, Union, final

import numpy as np
from numpy.polynomial import Polynomial

from .analyzer import analyze, sample_domain
from .beltrami import POSITION, ScalarField, check_identity_eq2, delta3_position
from .errors import DomainViolation, MultipleGeometryErrors
from .model import (
    FormBundle,
    ParamPoint,
    Quadric1Params,
    Quadric2Params,
    QuadricRow,
    SymTensor2,
    Verdict,
    VerdictKind,
)
from .options import Tolerances
from .surfaces import Domain, Quadric1Surface, Quadric2Surface, SurfacePatch
from .tools.types import Vector

logger = logging.getLogger(__name__)

QuadricParams = Union[Quadric1Params, Quadric2Params]

CLOSED_FORM_THRESHOLD = 1e-5
DOMAIN_EPS = 1e-3

THIRD_COORDINATE_KIND_I = "sqrt(omega)"
THIRD_COORDINATE_KIND_II = "(a/2)u^2 + (b/2)v^2 (√ω read as a misprint)"


def _check_chart(p: Quadric1Params, u: float, v: float, eps: float) -> tuple[float, float]:
    omega = p.omega(u, v)
    T = p.T(u, v)
    if not omega > eps:
        raise DomainViolation(f"ω = {omega:.3g} ≤ {eps:g} at ({u:g}, {v:g})")
    if not T > eps:
        raise DomainViolation(f"T = {T:.3g} ≤ {eps:g} at ({u:g}, {v:g})")
    return omega, T


def abc_functions(p: Quadric1Params, u: float, v: float) -> tuple[float, float, float]:
    """abc_functions returns the auxiliary polynomials (A, B, C) of a kind-I quadric:

        A = (auv)² + (au² + c)² + a²u²ω
        B = uv[c(a + b) + ab(u² + v² + ω)]
        C = (buv)² + (bv² + c)² + b²v²ω

    >>> abc_functions(Quadric1Params(1.0, 1.0, 1.0), 1.0, 1.0)
    (8.0, 7.0, 8.0)
    """
    a, b, c = p.a, p.b, p.c
    omega = p.omega(u, v)
    A = (a * u * v) ** 2 + (a * u * u + c) ** 2 + a * a * u * u * omega
    B = u * v * (c * (a + b) + a * b * (u * u + v * v + omega))
    C = (b * u * v) ** 2 + (b * v * v + c) ** 2 + b * b * v * v * omega
    return A, B, C


def _abc_derivatives(p: Quadric1Params, u: float, v: float) -> tuple[float, float, float, float]:
    """Returns (∂A/∂u, ∂B/∂u, ∂B/∂v, ∂C/∂v)."""
    a, b, c = p.a, p.b, p.c
    omega = p.omega(u, v)
    bracket = c * (a + b) + a * b * (u * u + v * v + omega)
    A_u = (
        2 * a * a * u * v * v
        + 4 * a * u * (a * u * u + c)
        + 2 * a * a * u * omega
        + 2 * a**3 * u**3
    )
    C_v = (
        2 * b * b * u * u * v
        + 4 * b * v * (b * v * v + c)
        + 2 * b * b * v * omega
        + 2 * b**3 * v**3
    )
    B_u = v * bracket + 2 * a * b * u * u * v * (1 + a)
    B_v = u * bracket + 2 * a * b * u * v * v * (1 + b)
    return A_u, B_u, B_v, C_v


def quadric1_forms(
    p: Quadric1Params,
    u: float,
    v: float,
    eps: float = DOMAIN_EPS,
) -> FormBundle:
    """quadric1_forms evaluates g, b and e of a kind-I quadric from their closed forms,
    with the normal n = (−au, −bv, √ω)/√T.

    >>> bundle = quadric1_forms(Quadric1Params(-1.0, -1.0, 1.0), 0.0, 0.0)
    >>> bundle.g, bundle.e, bundle.K
    (SymTensor2(f11=1.0, f12=0.0, f22=1.0), SymTensor2(f11=1.0, f12=0.0, f22=1.0), 1.0)

    Raises DomainViolation if ω or T do not exceed eps.
    """
    a, b, c = p.a, p.b, p.c
    omega, T = _check_chart(p, u, v, eps)
    root_T = sqrt(T)
    A, B, C = abc_functions(p, u, v)

    g = SymTensor2(
        1.0 + (a * u) ** 2 / omega,
        a * b * u * v / omega,
        1.0 + (b * v) ** 2 / omega,
    )
    second = SymTensor2(
        a * (c + b * v * v) / (omega * root_T),
        -a * b * u * v / (omega * root_T),
        b * (c + a * u * u) / (omega * root_T),
    )
    scale = 1.0 / (omega * T * T)
    e = SymTensor2(a * a * C * scale, -a * b * B * scale, b * b * A * scale)
    n = np.array([-a * u, -b * v, sqrt(omega)]) / root_T
    K = a * b * c / (T * T)
    H = 0.5 * float(np.trace(g.inverse().matrix() @ second.matrix()))
    return FormBundle(g=g, b=second, e=e, n=n, K=K, H=H)


def abc_identities(p: Quadric1Params, u: float, v: float) -> list[float]:
    """abc_identities evaluates both sides of the six polynomial identities
    satisfied by A, B and C, and returns their residuals relative
    to max(1, |lhs|, |rhs|):

        bA_u + aB_v = au[5ab(a+1)u² + 5ab(b+1)v² + c(3ab + 5b + a)]
        aC_v + bB_u = bv[5ab(a+1)u² + 5ab(b+1)v² + c(3ab + 5a + b)]
        uA + vB = [c + a(a+1)u² + a(b+1)v²]uω
        uB + vC = [c + b(a+1)u² + b(b+1)v²]vω
        (a+1)uA + (b+1)vB = u[c(a+1) + a(a+1)u² + a(b+1)v²]T
        (b+1)vC + (a+1)uB = v[c(b+1) + b(a+1)u² + b(b+1)v²]T

    >>> max(abc_identities(Quadric1Params(2.0, 1.0, 1.0), 1.0, 1.0))
    0.0
    """
    a, b, c = p.a, p.b, p.c
    omega = p.omega(u, v)
    T = p.T(u, v)
    A, B, C = abc_functions(p, u, v)
    A_u, B_u, B_v, C_v = _abc_derivatives(p, u, v)
    quartic = 5 * a * b * (a + 1) * u * u + 5 * a * b * (b + 1) * v * v

    sides = [
        (b * A_u + a * B_v, a * u * (quartic + c * (3 * a * b + 5 * b + a))),
        (a * C_v + b * B_u, b * v * (quartic + c * (3 * a * b + 5 * a + b))),
        (u * A + v * B, (c + a * (a + 1) * u * u + a * (b + 1) * v * v) * u * omega),
        (u * B + v * C, (c + b * (a + 1) * u * u + b * (b + 1) * v * v) * v * omega),
        (
            (a + 1) * u * A + (b + 1) * v * B,
            u * (c * (a + 1) + a * (a + 1) * u * u + a * (b + 1) * v * v) * T,
        ),
        (
            (b + 1) * v * C + (a + 1) * u * B,
            v * (c * (b + 1) + b * (a + 1) * u * u + b * (b + 1) * v * v) * T,
        ),
    ]
    return [abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)) for lhs, rhs in sides]


def quadric1_delta3_coords(
    p: Quadric1Params,
    u: float,
    v: float,
    eps: float = DOMAIN_EPS,
) -> tuple[float, float]:
    """quadric1_delta3_coords returns (Δ^III u, Δ^III v) of a kind-I quadric:

        Δ^III u = −(uT/c²)[3(a+1)u² + 3(b+1)v² + c(3b + a + 2ab)/(ab)]
        Δ^III v = −(vT/c²)[3(a+1)u² + 3(b+1)v² + c(b + 3a + 2ab)/(ab)]

    On a sphere (a = b = −1) both reduce to twice the coordinate.

    >>> quadric1_delta3_coords(Quadric1Params(-1.0, -1.0, 4.0), 0.5, -0.25)
    (1.0, -0.5)
    """
    a, b, c = p.a, p.b, p.c
    _, T = _check_chart(p, u, v, eps)
    common = 3 * (a + 1) * u * u + 3 * (b + 1) * v * v
    du = -(u * T / (c * c)) * (common + c * (3 * b + a + 2 * a * b) / (a * b))
    dv = -(v * T / (c * c)) * (common + c * (b + 3 * a + 2 * a * b) / (a * b))
    return du, dv


@final
@dataclass(frozen=True)
class OperatorCoefficients:
    """OperatorCoefficients of a second-order operator
    L = f_uu ∂²/∂u² + f_uv ∂²/∂u∂v + f_vv ∂²/∂v² + f_u ∂/∂u + f_v ∂/∂v."""

    f_uu: float
    f_uv: float
    f_vv: float
    f_u: float
    f_v: float

    def apply(self, phi: ScalarField, surface: SurfacePatch, point: ParamPoint) -> float:
        if phi.hessian is None:
            raise ValueError(f"{phi!r} provides no second derivatives")
        jet = surface.evaluate(point)
        (phi_u, phi_v) = phi.gradient(point, jet)
        hessian = phi.hessian(point, jet)
        return float(
            self.f_uu * hessian[0, 0]
            + self.f_uv * hessian[0, 1]
            + self.f_vv * hessian[1, 1]
            + self.f_u * phi_u
            + self.f_v * phi_v
        )


def quadric1_operator_coefficients(
    p: Quadric1Params,
    u: float,
    v: float,
    eps: float = DOMAIN_EPS,
) -> OperatorCoefficients:
    """quadric1_operator_coefficients assembles the five coefficients of Δ^III
    on a kind-I quadric from A, B, C, their derivatives, T and ω."""
    a, b, c = p.a, p.b, p.c
    omega, T = _check_chart(p, u, v, eps)
    A, B, C = abc_functions(p, u, v)
    A_u, B_u, B_v, C_v = _abc_derivatives(p, u, v)
    k = 1.0 / (a * b * c) ** 2

    f_u = k * (
        -T * b * (b * A_u + a * B_v)
        + T * (a * b * b / omega) * (u * A + v * B)
        + a * b * b * ((a + 1) * u * A + (b + 1) * v * B)
    )
    f_v = k * (
        -T * a * (a * C_v + b * B_u)
        + T * (a * a * b / omega) * (u * B + v * C)
        + a * a * b * ((b + 1) * v * C + (a + 1) * u * B)
    )
    return OperatorCoefficients(
        f_uu=-k * T * b * b * A,
        f_uv=-k * T * 2 * a * b * B,
        f_vv=-k * T * a * a * C,
        f_u=f_u,
        f_v=f_v,
    )


def _local_quadric1(p: Quadric1Params, u: float, v: float) -> Quadric1Surface:
    return Quadric1Surface(p, Domain(u - 1.0, u + 1.0, v - 1.0, v + 1.0))


def _local_quadric2(p: Quadric2Params, u: float, v: float) -> Quadric2Surface:
    return Quadric2Surface(p, Domain(u - 1.0, u + 1.0, v - 1.0, v + 1.0))


def quadric1_operator(
    p: Quadric1Params,
    phi: ScalarField,
    u: float,
    v: float,
    eps: float = DOMAIN_EPS,
) -> float:
    """quadric1_operator applies the closed-form Δ^III of a kind-I quadric to phi.
    phi must provide its Hessian.

    >>> quadric1_operator(Quadric1Params(-1.0, -2.0, 1.0), ScalarField.constant(3.0), 0.1, 0.2)
    0.0
    """
    coefficients = quadric1_operator_coefficients(p, u, v, eps)
    return coefficients.apply(phi, _local_quadric1(p, u, v), ParamPoint(u, v))


def quadric1_operator_on_coordinates(
    p: Quadric1Params,
    u: float,
    v: float,
    eps: float = DOMAIN_EPS,
) -> Vector:
    """quadric1_operator_on_coordinates returns Δ^III x = (Δ^III u, Δ^III v, Δ^III √ω)
    of a kind-I quadric, all three from the closed-form operator."""
    coefficients = quadric1_operator_coefficients(p, u, v, eps)
    surface = _local_quadric1(p, u, v)
    point = ParamPoint(u, v)
    return np.array([coefficients.apply(phi, surface, point) for phi in POSITION])


def quadric2_forms(p: Quadric2Params, u: float, v: float) -> FormBundle:
    """quadric2_forms evaluates g, b and e of a kind-II quadric from their closed forms,
    with g = det(g_ij) = 1 + (au)² + (bv)² and the normal n = (−au, −bv, 1)/√g.

    >>> quadric2_forms(Quadric2Params(1.0, 1.0), 0.0, 0.0).e
    SymTensor2(f11=1.0, f12=-0.0, f22=1.0)
    """
    a, b = p.a, p.b
    g_det = p.g(u, v)
    root = sqrt(g_det)

    g = SymTensor2(1.0 + (a * u) ** 2, a * b * u * v, 1.0 + (b * v) ** 2)
    second = SymTensor2(a / root, 0.0, b / root)
    e = SymTensor2(
        a * a * (1.0 + b * b * v * v) / g_det**2,
        -a * a * b * b * u * v / g_det**2,
        b * b * (1.0 + a * a * u * u) / g_det**2,
    )
    n = np.array([-a * u, -b * v, 1.0]) / root
    K = a * b / g_det**2
    H = 0.5 * float(np.trace(g.inverse().matrix() @ second.matrix()))
    return FormBundle(g=g, b=second, e=e, n=n, K=K, H=H)


def quadric2_operator_coefficients(p: Quadric2Params, u: float, v: float) -> OperatorCoefficients:
    a, b = p.a, p.b
    g = p.g(u, v)
    return OperatorCoefficients(
        f_uu=-g * (1.0 + a * a * u * u) / (a * a),
        f_uv=-2.0 * u * v * g,
        f_vv=-g * (1.0 + b * b * v * v) / (b * b),
        f_u=-2.0 * u * g,
        f_v=-2.0 * v * g,
    )


def quadric2_operator(p: Quadric2Params, phi: ScalarField, u: float, v: float) -> float:
    """quadric2_operator applies the closed-form Δ^III of a kind-II quadric to phi:

        Δ^III = −g(1 + a²u²)/a² ∂²/∂u² − g(1 + b²v²)/b² ∂²/∂v² − 2uvg ∂²/∂u∂v
                − 2ug ∂/∂u − 2vg ∂/∂v

    In particular Δ^III u = −2ug and Δ^III v = −2vg.

    >>> quadric2_operator(Quadric2Params(1.0, 1.0), ScalarField.coordinate(0), 1.0, 0.0)
    -4.0
    """
    coefficients = quadric2_operator_coefficients(p, u, v)
    return coefficients.apply(phi, _local_quadric2(p, u, v), ParamPoint(u, v))


def quadric2_operator_on_coordinates(p: Quadric2Params, u: float, v: float) -> Vector:
    """quadric2_operator_on_coordinates returns Δ^III x of a kind-II quadric,
    the third coordinate being the actual x₃ = (a/2)u² + (b/2)v²."""
    coefficients = quadric2_operator_coefficients(p, u, v)
    surface = _local_quadric2(p, u, v)
    point = ParamPoint(u, v)
    return np.array([coefficients.apply(phi, surface, point) for phi in POSITION])


def axis_restriction(p: Quadric1Params, axis: Literal["u", "v"]) -> Polynomial:
    """axis_restriction returns Δ^III u restricted to v = 0 (axis "u"),
    or Δ^III v restricted to u = 0 (axis "v"), as an odd polynomial of degree 5:

        −3a(a+1)²/c²·u⁵ − (a+1)(6b + a + 2ab)/(bc)·u³ − (3b + a + 2ab)/(ab)·u

    >>> float(axis_restriction(Quadric1Params(-1.0, -1.0, 1.0), "u")(0.5))
    1.0
    """
    a, b, c = p.a, p.b, p.c
    if axis == "v":
        a, b = b, a
    return Polynomial(
        [
            0.0,
            -(3 * b + a + 2 * a * b) / (a * b),
            0.0,
            -(a + 1) * (6 * b + a + 2 * a * b) / (b * c),
            0.0,
            -3 * a * (a + 1) ** 2 / (c * c),
        ]
    )


def quadric_surface(p: QuadricParams) -> SurfacePatch:
    if isinstance(p, Quadric1Params):
        return Quadric1Surface(p)
    return Quadric2Surface(p)


def predicted_verdict(p: QuadricParams) -> VerdictKind:
    """predicted_verdict returns the expected classification: only the
    origin-centered sphere (kind I with a = b = −1, c > 0) is of coordinate finite type.

    >>> predicted_verdict(Quadric1Params(-1.0, -1.0, 1.0)).value
    'SphereType'
    >>> predicted_verdict(Quadric2Params(1.0, 1.0)).value
    'NotCoordinateFiniteType'
    """
    if isinstance(p, Quadric1Params) and p.is_sphere:
        return VerdictKind.SPHERE_TYPE
    return VerdictKind.NOT_COORDINATE_FINITE_TYPE


@final
@dataclass(frozen=True, eq=False)
class NoSolutionWitness:
    """NoSolutionWitness is the outcome of fitting Δ^III x = Λx on a quadric:
    the verdict and the sample points the fit was run over."""

    surface: str
    verdict: Verdict
    points: list[ParamPoint]

    @property
    def refutes(self) -> bool:
        """refutes is True if no constant Λ reproduces the samples
        (the strict fit residual reaches 10·tau)."""
        return self.verdict.lambda_fit.residual_max >= 10.0 * self.verdict.threshold


def quadric_no_solution_witness(
    p: QuadricParams,
    grid: tuple[int, int] = (6, 6),
    tolerances: Tolerances = Tolerances(),
) -> NoSolutionWitness:
    """quadric_no_solution_witness fits Λ in strict mode over a sampled quadric.
    On every quadric except the origin-centered sphere the residual stays large."""
    surface = quadric_surface(p)
    points = sample_domain(surface, grid, tolerances)
    _, verdict = analyze(surface, grid, tolerances, "strict")
    return NoSolutionWitness(surface.describe(), verdict, points)


def closed_form_coordinates(p: QuadricParams, point: ParamPoint, eps: float) -> Vector:
    if isinstance(p, Quadric1Params):
        return quadric1_operator_on_coordinates(p, point.u, point.v, eps)
    return quadric2_operator_on_coordinates(p, point.u, point.v)


def quadric_row(
    p: QuadricParams,
    grid: tuple[int, int] = (6, 6),
    tolerances: Tolerances = Tolerances(),
) -> QuadricRow:
    """quadric_row classifies a single quadric and cross-checks it over the sample points:
    identity_max is the worst residual of Δ^III x = ∇^III(2H/K, n) − (2H/K)n,
    closed_form_max the worst difference between the closed-form and generic Δ^III x."""
    surface = quadric_surface(p)
    points = sample_domain(surface, grid, tolerances)
    _, verdict = analyze(surface, grid, tolerances, "strict")

    identity_max = max(check_identity_eq2(surface, q, tolerances) for q in points)
    closed_form_max = max(
        float(
            np.max(
                np.abs(
                    closed_form_coordinates(p, q, tolerances.eps_domain)
                    - delta3_position(surface, q, tolerances).value
                )
            )
        )
        for q in points
    )

    is_kind_i = isinstance(p, Quadric1Params)
    row = QuadricRow(
        family=surface.name,
        a=p.a,
        b=p.b,
        c=p.c if isinstance(p, Quadric1Params) else None,
        verdict=verdict.kind.value,
        predicted=predicted_verdict(p).value,
        residual_max=verdict.lambda_fit.residual_max,
        identity_max=identity_max,
        closed_form_max=closed_form_max,
        third_coordinate=THIRD_COORDINATE_KIND_I if is_kind_i else THIRD_COORDINATE_KIND_II,
        closed_form_threshold=CLOSED_FORM_THRESHOLD,
        tau=tolerances.tau,
    )
    logger.debug(
        "%s: %s, closed-form deviation %.3g", surface.describe(), row.verdict, closed_form_max
    )
    return row


def quadric_table(
    families: Sequence[QuadricParams],
    grid: tuple[int, int] = (6, 6),
    tolerances: Tolerances = Tolerances(),
) -> list[QuadricRow]:
    """quadric_table builds a QuadricRow for every quadric.
    Errors of individual rows are collected and raised together as MultipleGeometryErrors.
    """
    return MultipleGeometryErrors.catch_all(
        "quadric table", map(lambda p: quadric_row(p, grid, tolerances), families)
    )


def default_quadric_families(c_values: Optional[Sequence[float]] = None) -> list[QuadricParams]:
    """default_quadric_families returns the kind-I grid (a, b) ∈ {−1, −0.5, −2}² with c = 1
    and the kind-II grid (a, b) ∈ {0.5, 1, 2}²."""
    coefficients_i = (-1.0, -0.5, -2.0)
    coefficients_ii = (0.5, 1.0, 2.0)
    families: list[QuadricParams] = [
        Quadric1Params(a, b, c)
        for c in (c_values or (1.0,))
        for a in coefficients_i
        for b in coefficients_i
    ]
    families.extend(Quadric2Params(a, b) for a in coefficients_ii for b in coefficients_ii)
    return families
