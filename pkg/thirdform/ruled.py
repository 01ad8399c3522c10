"""Ruled surfaces x(s, t) = α(s) + tβ(s) and the coefficients of their Δ^III operator.

The directrix α and the ruling β are normalized so that ⟨α′, β⟩ = 0 and |β| = |β′| = 1,
that is s is the arc length of the spherical curve β. Then

    Δ^III = Q₁ ∂²/∂s² + Q₂ ∂²/∂s∂t + Q₃ ∂/∂s + Q₄ ∂/∂t + Q₅ ∂²/∂t²,

with Q₁…Q₅ polynomials in t of degree at most 6, whose coefficients depend on s through
the invariants κ, λ, μ, ν, ρ and A (see RuledInvariants).
"""

import logging
from dataclasses import dataclass
from math import cos, log, pi, sin, sqrt, tan
from typing import Callable, Literal, Optional, Sequence, final

import numpy as np
import numpy.polynomial.polynomial as P
import numpy.typing as npt
from scipy.spatial.transform import Rotation

from .beltrami import ScalarField, laplace_beltrami_many
from .errors import DomainViolation, IllConditionedVandermonde, NormalizationViolated
from .model import Jet2, ParamPoint, RuledInvariants, TPoly
from .options import Tolerances
from .surfaces import Domain, SurfacePatch
from .tools.numeric import chebyshev_nodes
from .tools.types import Matrix, Vector

logger = logging.getLogger(__name__)

CurveJet = tuple[Vector, Vector, Vector]
"""Value, first and second derivative of a curve at a single parameter value."""

CurveFunction = Callable[[float], CurveJet]

NORMALIZATION_EPS = 1e-10
INVARIANT_STEP = 1e-5
VANDERMONDE_MAX_CONDITION = 1e10
PROBE_NODES = 8
PROBE_DEGREE = 6

T1BetaPrimeVariant = Literal["listed", "expanded"]
"""The two printed forms of the β′ coefficient at t¹ of the coefficient equations:
"listed" is (½κ′A + 2κν + 4λρ)·A, "expanded" is (½κ′A + 3κν + 3λρ)·A."""

T1_BETA_PRIME_VARIANTS: tuple[T1BetaPrimeVariant, ...] = ("listed", "expanded")


def triple(a: Vector, b: Vector, c: Vector) -> float:
    """triple returns the triple product (a, b, c) = det[a, b, c].

    >>> triple(np.array([1, 0, 0]), np.array([0, 1, 0]), np.array([0, 0, 1]))
    1.0
    """
    return float(np.dot(a, np.cross(b, c)))


@final
@dataclass(frozen=True)
class CurvePair:
    """CurvePair holds the directrix α and the unit ruling field β of a ruled surface."""

    name: str
    alpha: CurveFunction
    beta: CurveFunction
    default_domain: Domain

    def normalization_deviation(self, s: float) -> tuple[str, float]:
        """normalization_deviation returns the worst of |⟨α′,β⟩|, |⟨β,β⟩−1|
        and |⟨β′,β′⟩−1| at s, with its label."""
        _, d_alpha, _ = self.alpha(s)
        beta, d_beta, _ = self.beta(s)
        deviations = [
            ("⟨α′,β⟩ = 0", abs(float(d_alpha @ beta))),
            ("⟨β,β⟩ = 1", abs(float(beta @ beta) - 1.0)),
            ("⟨β′,β′⟩ = 1", abs(float(d_beta @ d_beta) - 1.0)),
        ]
        return max(deviations, key=lambda i: i[1])

    def check_normalization(self, s: float, eps: float = NORMALIZATION_EPS) -> None:
        what, deviation = self.normalization_deviation(s)
        if deviation > eps:
            raise NormalizationViolated(what, s, deviation)


def helicoid_pair(
    c5: float = 1.0,
    lam: float = 0.0,
    c2: float = 0.0,
    c4: float = 0.0,
    c6: float = 0.0,
) -> CurvePair:
    """helicoid_pair returns α(s) = (c₂ + λ cos s, c₄ + λ sin s, c₅s + c₆) and
    β(s) = (cos s, sin s, 0), generating the helicoid
    ((λ+t) cos s + c₂, (λ+t) sin s + c₄, c₅s + c₆)."""
    if not abs(c5) > 0.0:
        raise DomainViolation(f"helicoid pair needs c5 ≠ 0, got {c5:g}")

    def alpha(s: float) -> CurveJet:
        cs, ss = cos(s), sin(s)
        return (
            np.array([c2 + lam * cs, c4 + lam * ss, c5 * s + c6]),
            np.array([-lam * ss, lam * cs, c5]),
            np.array([-lam * cs, -lam * ss, 0.0]),
        )

    def beta(s: float) -> CurveJet:
        cs, ss = cos(s), sin(s)
        return (
            np.array([cs, ss, 0.0]),
            np.array([-ss, cs, 0.0]),
            np.array([-cs, -ss, 0.0]),
        )

    name = f"helicoid pair (c5={c5:g}, λ={lam:g})"
    return CurvePair(name, alpha, beta, Domain(0.0, pi, 0.5, 2.0))


def spherical_ruling_pair(
    theta: float = pi / 2,
    lam0: float = 0.0,
    lam1: float = 0.0,
    A0: float = 1.0,
    A1: float = 0.0,
    rotation: Optional[npt.ArrayLike] = None,
    offset: Optional[npt.ArrayLike] = None,
) -> CurvePair:
    """spherical_ruling_pair returns a pair whose ruling β runs with unit speed along
    a circle of the unit sphere, at angle θ from the circle's pole:

        β(s) = R(sin θ cos ks, sin θ sin ks, cos θ), k = 1/sin θ,

    and whose directrix satisfies α′ = (λ₀ + λ₁s)β′ + (A₀ + A₁s)(β × β′), which makes
    λ = λ₀ + λ₁s, A = A₀ + A₁s and μ = −cot θ. α is integrated in closed form, starting
    from `offset`. θ = π/2 with λ₁ = A₁ = 0 and R = I gives a helicoid.
    """
    if not 0.0 < theta < pi:
        raise ValueError(f"theta must lie in (0, π), got {theta}")

    R: Matrix = np.eye(3) if rotation is None else np.asarray(rotation, dtype=np.float64)
    origin: Vector = np.zeros(3) if offset is None else np.asarray(offset, dtype=np.float64)
    st, ct = sin(theta), cos(theta)
    k = 1.0 / st

    def frame(s: float) -> tuple[Vector, Vector, Vector, Vector, Vector]:
        c, n = cos(k * s), sin(k * s)
        beta = np.array([st * c, st * n, ct])
        d_beta = np.array([-n, c, 0.0])
        dd_beta = np.array([-k * c, -k * n, 0.0])
        normal = np.array([-ct * c, -ct * n, st])  # β × β′
        d_normal = np.array([k * ct * n, -k * ct * c, 0.0])  # β × β″
        return beta, d_beta, dd_beta, normal, d_normal

    def integral_cos(a0: float, a1: float, s: float) -> float:
        # ∫ (a0 + a1·σ) cos(kσ) dσ
        return (a0 + a1 * s) * sin(k * s) / k + a1 * cos(k * s) / (k * k)

    def integral_sin(a0: float, a1: float, s: float) -> float:
        # ∫ (a0 + a1·σ) sin(kσ) dσ
        return -(a0 + a1 * s) * cos(k * s) / k + a1 * sin(k * s) / (k * k)

    def position(s: float) -> Vector:
        return np.array(
            [
                -integral_sin(lam0, lam1, s) - ct * integral_cos(A0, A1, s),
                integral_cos(lam0, lam1, s) - ct * integral_sin(A0, A1, s),
                st * (A0 * s + 0.5 * A1 * s * s),
            ]
        )

    start = position(0.0)

    def alpha(s: float) -> CurveJet:
        _, d_beta, dd_beta, normal, d_normal = frame(s)
        a1 = lam0 + lam1 * s
        a2 = A0 + A1 * s
        d_alpha = a1 * d_beta + a2 * normal
        dd_alpha = lam1 * d_beta + a1 * dd_beta + A1 * normal + a2 * d_normal
        return origin + R @ (position(s) - start), R @ d_alpha, R @ dd_alpha

    def beta(s: float) -> CurveJet:
        b, d_b, dd_b, _, _ = frame(s)
        return R @ b, R @ d_b, R @ dd_b

    name = (
        f"spherical ruling pair (θ={theta:g}, λ={lam0:g}+{lam1:g}s, A={A0:g}+{A1:g}s)"
    )
    return CurvePair(name, alpha, beta, Domain(-1.0, 1.0, -1.5, 1.5))


def loxodrome_pair(
    theta0: float = 1.0,
    c: float = 0.5,
    f0: float = 0.3,
    g0: float = 1.0,
    rotation: Optional[npt.ArrayLike] = None,
    offset: Optional[npt.ArrayLike] = None,
) -> CurvePair:
    """loxodrome_pair returns a pair whose ruling β is a unit-speed loxodrome of the unit
    sphere: its polar angle is θ(s) = θ₀ + cs and it crosses every meridian at the same
    angle, so that φ(s) = (w/c) ln tan(θ/2) with w = √(1 − c²). The directrix is

        α(s) = R[(f₀ − (g₀/c) sin θ)β + g₀s·ẑ],

    which keeps ⟨α′, β⟩ = 0 and gives A = g₀w sin θ and μ = −w cot θ. Unlike the other
    pairs, μ changes along the ruling curve: μ′ = wc / sin²θ.

    >>> curves = loxodrome_pair()
    >>> [round(curves.normalization_deviation(s)[1], 12) for s in (-1.0, 0.0, 1.0)]
    [0.0, 0.0, 0.0]
    """
    if not 0.0 < c < 1.0:
        raise ValueError(f"c must lie in (0, 1), got {c}")
    if not (0.0 < theta0 - c and theta0 + c < pi):
        raise ValueError(f"θ₀ ± c must lie in (0, π) for s ∈ [−1, 1], got θ₀ = {theta0}")
    if not abs(g0) > 0.0:
        raise DomainViolation(f"loxodrome pair needs g0 ≠ 0, got {g0:g}")

    R: Matrix = np.eye(3) if rotation is None else np.asarray(rotation, dtype=np.float64)
    origin: Vector = np.zeros(3) if offset is None else np.asarray(offset, dtype=np.float64)
    w = sqrt(1.0 - c * c)
    z_axis = np.array([0.0, 0.0, 1.0])

    def frame(s: float) -> tuple[Vector, Vector, Vector, float]:
        theta = theta0 + c * s
        phi = (w / c) * log(tan(0.5 * theta))
        st, ct, sp, cp = sin(theta), cos(theta), sin(phi), cos(phi)
        e_r = np.array([st * cp, st * sp, ct])
        e_theta = np.array([ct * cp, ct * sp, -st])
        e_phi = np.array([-sp, cp, 0.0])
        d_beta = c * e_theta + w * e_phi
        normal = c * e_phi - w * e_theta  # β × β′
        dd_beta = -e_r + (w * ct / st) * normal
        return e_r, d_beta, dd_beta, theta

    def alpha(s: float) -> CurveJet:
        beta, d_beta, dd_beta, theta = frame(s)
        f = f0 - (g0 / c) * sin(theta)
        d_f = -g0 * cos(theta)
        dd_f = g0 * c * sin(theta)
        value = f * beta + g0 * s * z_axis
        d_alpha = d_f * beta + f * d_beta + g0 * z_axis
        dd_alpha = dd_f * beta + 2 * d_f * d_beta + f * dd_beta
        return origin + R @ value, R @ d_alpha, R @ dd_alpha

    def beta(s: float) -> CurveJet:
        b, d_b, dd_b, _ = frame(s)
        return R @ b, R @ d_b, R @ dd_b

    name = f"loxodrome pair (θ₀={theta0:g}, c={c:g}, f₀={f0:g}, g₀={g0:g})"
    return CurvePair(name, alpha, beta, Domain(-1.0, 1.0, -1.5, 1.5))


def random_loxodrome_pair(rng: np.random.Generator) -> CurvePair:
    """random_loxodrome_pair draws a loxodrome pair in a random position:
    θ₀ ∈ [0.9, 1.4], c ∈ [0.3, 0.6], |g₀| ≥ 0.8."""
    return loxodrome_pair(
        theta0=float(rng.uniform(0.9, 1.4)),
        c=float(rng.uniform(0.3, 0.6)),
        f0=float(rng.uniform(-0.5, 0.5)),
        g0=float(rng.choice([-1.0, 1.0]) * rng.uniform(0.8, 1.3)),
        rotation=Rotation.from_quat(rng.normal(size=4)).as_matrix(),
        offset=rng.uniform(-1.0, 1.0, size=3),
    )


@final
class RuledSurface(SurfacePatch):
    """RuledSurface is x(s, t) = α(s) + tβ(s), with u = s and v = t."""

    def __init__(self, curves: CurvePair, domain: Optional[Domain] = None) -> None:
        super().__init__(curves.name, {}, domain or curves.default_domain)
        self.curves = curves

    def q(self, p: ParamPoint) -> float:
        """q = |x_s|² = t² + 2λt + κ"""
        _, d_alpha, _ = self.curves.alpha(p.u)
        _, d_beta, _ = self.curves.beta(p.u)
        x_s = d_alpha + p.v * d_beta
        return float(x_s @ x_s)

    def guard(self, p: ParamPoint, tolerances: Tolerances) -> bool:
        return self.q(p) > tolerances.eps_q

    def evaluate(self, p: ParamPoint) -> Jet2:
        s, t = p.u, p.v
        alpha, d_alpha, dd_alpha = self.curves.alpha(s)
        beta, d_beta, dd_beta = self.curves.beta(s)
        return Jet2(
            x=alpha + t * beta,
            x_u=d_alpha + t * d_beta,
            x_v=beta,
            x_uu=dd_alpha + t * dd_beta,
            x_uv=d_beta,
            x_vv=np.zeros(3),
        )


def ruled_surface(
    curves: CurvePair,
    domain: Optional[Domain] = None,
    checks: int = 9,
) -> RuledSurface:
    """ruled_surface builds x(s, t) = α(s) + tβ(s), after checking the normalization
    ⟨α′,β⟩ = 0, |β| = |β′| = 1 at `checks` points spread over the s-range.

    Raises NormalizationViolated.
    """
    surface = RuledSurface(curves, domain)
    for s in np.linspace(surface.domain.u0, surface.domain.u1, checks):
        curves.check_normalization(float(s))
    return surface


def _raw_invariants(curves: CurvePair, s: float) -> Vector:
    _, d_alpha, dd_alpha = curves.alpha(s)
    beta, d_beta, dd_beta = curves.beta(s)
    return np.array(
        [
            float(d_alpha @ d_alpha),
            float(d_alpha @ d_beta),
            triple(d_beta, beta, dd_beta),
            triple(d_alpha, beta, dd_beta) + triple(d_beta, beta, dd_alpha),
            triple(d_alpha, beta, dd_alpha),
            triple(d_alpha, beta, d_beta),
        ]
    )


def ruled_invariants(curves: CurvePair, s: float, h: float = INVARIANT_STEP) -> RuledInvariants:
    """ruled_invariants evaluates κ, λ, μ, ν, ρ, A at s; their s-derivatives
    come from central differences with step h."""
    values = _raw_invariants(curves, s)
    derivatives = (_raw_invariants(curves, s + h) - _raw_invariants(curves, s - h)) / (2 * h)
    kappa, lam, mu, nu, rho, A = (float(i) for i in values)
    d_kappa, d_lam, d_mu, d_nu, d_rho, d_A = (float(i) for i in derivatives)
    return RuledInvariants(
        kappa, lam, mu, nu, rho, A, d_kappa, d_lam, d_mu, d_nu, d_rho, d_A
    )


def q_closed_forms(inv: RuledInvariants) -> tuple[TPoly, TPoly, TPoly, TPoly, TPoly]:
    """q_closed_forms evaluates the closed-form coefficients Q₁…Q₅ of Δ^III
    as polynomials in t (coefficients in ascending powers).

    >>> q1, q2, q3, q4, q5 = q_closed_forms(RuledInvariants(1.0, 0.0, 0.0, 0.0, 0.0, 1.0))
    >>> q1, q2, q3
    (TPoly(coeffs=(-1.0, -0.0, -1.0)), TPoly(coeffs=()), TPoly(coeffs=()))
    """
    k, l, m, n, r, A = inv.kappa, inv.lam, inv.mu, inv.nu, inv.rho, inv.A
    dk, dl, dm, dn, dr, dA = inv.d_kappa, inv.d_lam, inv.d_mu, inv.d_nu, inv.d_rho, inv.d_A
    A2 = A * A

    q1 = TPoly.of(k, 2 * l, 1.0) * (-1.0 / A2)
    q2 = TPoly.of(
        k * r,
        2 * l * r + k * n,
        2 * l * n + r + k * m,
        2 * l * m + n,
        m,
    ) * (2.0 / (A2 * A))
    q3 = TPoly.of(
        0.5 * dk * A - l * r + k * n,
        l * n - r + 2 * k * m + dl * A,
        3 * l * m,
        m,
    ) * (1.0 / (A2 * A))
    q4 = TPoly.of(
        k * dr * A - k * r * dA - 0.5 * dk * r * A + l * r * r - k * l * A2 - 2 * k * n * r,
        k * dn * A
        - k * n * dA
        - 0.5 * dk * n * A
        + 2 * l * dr * A
        - 2 * l * r * dA
        - dl * r * A
        - k * A2
        - 2 * l * l * A2
        - 2 * k * n * n
        + r * r
        - 2 * l * n * r
        - 4 * k * m * r,
        k * dm * A
        - k * m * dA
        - 0.5 * dk * m * A
        + 2 * l * dn * A
        - 2 * l * n * dA
        - dl * n * A
        - r * dA
        + dr * A
        - 3 * l * A2
        - 3 * l * n * n
        - 6 * l * m * r
        - 6 * k * m * n,
        dn * A
        - n * dA
        + 2 * l * dm * A
        - 2 * l * m * dA
        - dl * m * A
        - A2
        - 10 * l * m * n
        - 2 * m * r
        - n * n
        - 4 * k * m * m,
        dm * A - m * dA - 4 * m * n - 7 * l * m * m,
        -3 * m * m,
    ) * (1.0 / (A2 * A2))
    q5 = TPoly.of(
        k * r * r + k * k * A2,
        2 * l * r * r + 2 * k * n * r + 4 * l * k * A2,
        r * r + 4 * l * n * r + 2 * k * m * r + k * n * n + 4 * l * l * A2 + 2 * k * A2,
        2 * n * r + 4 * l * m * r + 2 * l * n * n + 2 * k * m * n + 4 * l * A2,
        2 * m * r + n * n + 4 * l * m * n + k * m * m + A2,
        2 * m * n + 2 * l * m * m,
        m * m,
    ) * (-1.0 / (A2 * A2))
    return q1, q2, q3, q4, q5


PROBE_FIELDS = (
    ScalarField.polynomial({(1, 0): 1.0}),  # s
    ScalarField.polynomial({(0, 1): 1.0}),  # t
    ScalarField.polynomial({(2, 0): 1.0}),  # s²
    ScalarField.polynomial({(0, 2): 1.0}),  # t²
    ScalarField.polynomial({(1, 1): 1.0}),  # st
)


def default_t_nodes(surface: SurfacePatch, count: int = PROBE_NODES) -> Vector:
    """default_t_nodes returns Chebyshev nodes spread over the t-range of the surface."""
    return chebyshev_nodes(surface.domain.v0, surface.domain.v1, count)


def probe_coefficients(
    surface: SurfacePatch,
    s: float,
    t_nodes: Optional[Sequence[float]] = None,
    tolerances: Tolerances = Tolerances(),
) -> tuple[TPoly, TPoly, TPoly, TPoly, TPoly]:
    """probe_coefficients reconstructs Q₁…Q₅ at a fixed s from the numeric Δ^III,
    independently of the closed forms.

    Δ^III is applied to the probe fields s, t, s², t² and st at every node (s, t_k):

        Δs = Q₃,  Δt = Q₄,  Δs² = 2Q₁ + 2sQ₃,  Δt² = 2Q₅ + 2tQ₄,  Δst = Q₂ + sQ₄ + tQ₃,

    and every Q is then fitted with a polynomial of degree 6 in t (least squares over
    the Vandermonde matrix of the nodes).

    Raises IllConditionedVandermonde if the nodes (nearly) coincide.
    """
    nodes = np.asarray(
        default_t_nodes(surface) if t_nodes is None else t_nodes, dtype=np.float64
    )
    if nodes.size <= PROBE_DEGREE:
        raise ValueError(f"probing needs at least {PROBE_DEGREE + 1} t nodes, got {nodes.size}")

    vandermonde = P.polyvander(nodes, PROBE_DEGREE)
    condition = float(np.linalg.cond(vandermonde))
    if not condition <= VANDERMONDE_MAX_CONDITION:
        raise IllConditionedVandermonde(condition)

    values = np.empty((nodes.size, 5), dtype=np.float64)
    for i, t in enumerate(nodes):
        p = ParamPoint(s, float(t))
        d_s, d_t, d_ss, d_tt, d_st = laplace_beltrami_many(
            surface, "III", PROBE_FIELDS, p, tolerances
        )
        q3 = d_s
        q4 = d_t
        q1 = 0.5 * (d_ss - 2 * s * q3)
        q5 = 0.5 * (d_tt - 2 * t * q4)
        q2 = d_st - s * q4 - t * q3
        values[i] = (q1, q2, q3, q4, q5)

    coefficients, *_ = np.linalg.lstsq(vandermonde, values, rcond=None)
    logger.debug("Probed Q₁…Q₅ of %s at s = %g (cond V = %.3g)", surface.name, s, condition)
    q1, q2, q3, q4, q5 = (TPoly.from_array(coefficients[:, i]) for i in range(5))
    return q1, q2, q3, q4, q5


def expansion_delta3(curves: CurvePair, s: float, t: float) -> Vector:
    """expansion_delta3 assembles Δ^III x from the closed-form coefficients:
    Q₁α″ + Q₂β′ + Q₃α′ + Q₄β + (Q₁β″ + Q₃β′)t."""
    q1, q2, q3, q4, _ = (q(t) for q in q_closed_forms(ruled_invariants(curves, s)))
    _, d_alpha, dd_alpha = curves.alpha(s)
    beta, d_beta, dd_beta = curves.beta(s)
    return (
        q1 * dd_alpha
        + q2 * d_beta
        + q3 * d_alpha
        + q4 * beta
        + (q1 * dd_beta + q3 * d_beta) * t
    )


def t1_beta_prime_coefficient(inv: RuledInvariants, variant: T1BetaPrimeVariant) -> float:
    """Returns one of the two printed forms of the β′ coefficient at t¹."""
    k, l, n, r, A = inv.kappa, inv.lam, inv.nu, inv.rho, inv.A
    if variant == "listed":
        return (0.5 * inv.d_kappa * A + 2 * k * n + 4 * l * r) * A
    return (0.5 * inv.d_kappa * A + 3 * k * n + 3 * l * r) * A


def coefficient_equations(
    inv: RuledInvariants,
    beta_data: CurveJet,
    alpha_data: CurveJet,
    lambda_matrix: npt.ArrayLike,
    variant: T1BetaPrimeVariant = "listed",
) -> list[Vector]:
    """coefficient_equations evaluates the residuals of A⁴·(Δ^III x − Λx) = 0 split into
    the coefficients of t⁵, t⁴, …, t⁰ (in this order), each a 3-vector.

    alpha_data and beta_data are (value, first, second derivative) at the same s as inv.
    For a helicoid and Λ = 0 all six residuals vanish.
    """
    k, l, m, n, r, A = inv.kappa, inv.lam, inv.mu, inv.nu, inv.rho, inv.A
    dk, dl, dm, dn, dr, dA = inv.d_kappa, inv.d_lam, inv.d_mu, inv.d_nu, inv.d_rho, inv.d_A
    A2 = A * A
    alpha, d_alpha, dd_alpha = alpha_data
    beta, d_beta, dd_beta = beta_data
    lam_m = np.asarray(lambda_matrix, dtype=np.float64)

    e5 = -3 * m * m * beta
    e4 = (dm * A - m * dA - 4 * m * n - 7 * l * m * m) * beta + 3 * m * A * d_beta
    e3 = (
        m * A * d_alpha
        - A2 * dd_beta
        + (2 * n * A + 7 * l * m * A) * d_beta
        + (
            dn * A
            - n * dA
            + 2 * l * dm * A
            - 2 * l * m * dA
            - dl * m * A
            - A2
            - 10 * l * m * n
            - 2 * m * r
            - n * n
            - 4 * k * m * m
        )
        * beta
    )
    e2 = (
        (
            k * dm * A
            - k * m * dA
            - 0.5 * dk * m * A
            + 2 * l * dn * A
            - 2 * l * n * dA
            - dl * n * A
            - r * dA
            + dr * A
            - 3 * l * A2
            - 3 * l * n * n
            - 6 * l * m * r
            - 6 * k * m * n
        )
        * beta
        + 3 * l * m * A * d_alpha
        - 2 * l * A2 * dd_beta
        - A2 * dd_alpha
        + (dl * A + 5 * l * n + 4 * k * m + r) * A * d_beta
    )
    e1 = (
        (
            k * dn * A
            - k * n * dA
            - 0.5 * dk * n * A
            + 2 * l * dr * A
            - 2 * l * r * dA
            - dl * r * A
            - k * A2
            - 2 * l * l * A2
            - 2 * k * n * n
            + r * r
            - 2 * l * n * r
            - 4 * k * m * r
        )
        * beta
        - 2 * l * A2 * dd_alpha
        - k * A2 * dd_beta
        + t1_beta_prime_coefficient(inv, variant) * d_beta
        + (l * n - r + 2 * k * m + dl * A) * A * d_alpha
        - A2 * A2 * (lam_m @ beta)
    )
    e0 = (
        (k * dr * A - k * r * dA - 0.5 * dk * r * A + l * r * r - k * l * A2 - 2 * k * n * r)
        * beta
        + 2 * k * r * A * d_beta
        + (0.5 * dk * A - l * r + k * n) * A * d_alpha
        - k * A2 * dd_alpha
        - A2 * A2 * (lam_m @ alpha)
    )
    return [e5, e4, e3, e2, e1, e0]


def adjudicate_t1_beta_prime(
    inv: RuledInvariants,
    probed: Sequence[TPoly],
    rel_tol: float = 1e-4,
) -> tuple[float, list[T1BetaPrimeVariant]]:
    """adjudicate_t1_beta_prime reconstructs the β′ coefficient at t¹ of A⁴·Δ^III x
    from probed coefficients, A⁴·(Q₂[t¹] + Q₃[t⁰]), and returns it with the list of
    printed variants matching it within rel_tol (relative to 1 + |variant|).
    """
    q2, q3 = probed[1], probed[2]
    A4 = inv.A**4
    value = A4 * (q2.coefficient(1) + q3.coefficient(0))
    matching = [
        variant
        for variant in T1_BETA_PRIME_VARIANTS
        if abs(value - t1_beta_prime_coefficient(inv, variant))
        <= rel_tol * (1.0 + abs(t1_beta_prime_coefficient(inv, variant)))
    ]
    return value, matching


def helicoid_checks(curves: CurvePair, s: float) -> tuple[float, float]:
    """helicoid_checks returns |μ| and |β″ + β| at s; both vanish for the canonical
    ruling β = (cos s, sin s, 0) of a helicoid."""
    beta, d_beta, dd_beta = curves.beta(s)
    return abs(triple(d_beta, beta, dd_beta)), float(np.linalg.norm(dd_beta + beta))


def random_spherical_pair(rng: np.random.Generator) -> CurvePair:
    """random_spherical_pair draws a non-cylindrical, non-helicoidal spherical ruling pair
    in a random position: θ ∈ [0.6, 1.3], A = A₀ + A₁s ≥ 0.5 on s ∈ [−1, 1]."""
    return spherical_ruling_pair(
        theta=float(rng.uniform(0.6, 1.3)),
        lam0=float(rng.uniform(-0.5, 0.5)),
        lam1=float(rng.uniform(-0.3, 0.3)),
        A0=float(rng.uniform(0.8, 1.5)),
        A1=float(rng.uniform(-0.3, 0.3)),
        rotation=Rotation.from_quat(rng.normal(size=4)).as_matrix(),
        offset=rng.uniform(-1.0, 1.0, size=3),
    )


def variants_differ(inv: RuledInvariants, rel_tol: float = 1e-4) -> bool:
    """variants_differ returns True if the two printed forms of the t¹ β′ coefficient
    are far enough apart (10·rel_tol) for adjudicate_t1_beta_prime to tell them apart.
    They coincide iff A(κν − λρ) = 0, in particular on every helicoid."""
    listed = t1_beta_prime_coefficient(inv, "listed")
    expanded = t1_beta_prime_coefficient(inv, "expanded")
    return abs(listed - expanded) > 10.0 * rel_tol * (1.0 + abs(expanded))
