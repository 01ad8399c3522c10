from dataclasses import dataclass
from typing import final

from .tpoly import TPoly


@final
@dataclass(frozen=True)
class RuledInvariants:
    """RuledInvariants are the scalar functions of s describing a ruled surface
    x(s, t) = α(s) + tβ(s) with ⟨α′, β⟩ = 0, |β| = |β′| = 1:

    - κ = ⟨α′, α′⟩, λ = ⟨α′, β′⟩,
    - μ = (β′, β, β″), ν = (α′, β, β″) + (β′, β, α″), ρ = (α′, β, α″),
    - A = (α′, β, β′),

    where (·, ·, ·) is the triple product. Fields prefixed with d_ are s-derivatives.

    >>> inv = RuledInvariants(1.0, 0.5, 0.0, 0.0, 0.0, 1.0)
    >>> inv.q()
    TPoly(coeffs=(1.0, 1.0, 1.0))
    >>> inv.q()(0.0) == inv.kappa, inv.p()(0.0) == inv.rho
    (True, True)
    """

    kappa: float
    lam: float
    mu: float
    nu: float
    rho: float
    A: float
    d_kappa: float = 0.0
    d_lam: float = 0.0
    d_mu: float = 0.0
    d_nu: float = 0.0
    d_rho: float = 0.0
    d_A: float = 0.0

    def q(self) -> TPoly:
        """q(t) = t² + 2λt + κ = |x_s|²."""
        return TPoly.of(self.kappa, 2.0 * self.lam, 1.0)

    def p(self) -> TPoly:
        """p(t) = μt² + νt + ρ."""
        return TPoly.of(self.rho, self.nu, self.mu)

    def gauss_curvature(self, t: float) -> float:
        """Returns K = −A²/q²."""
        q = self.q()(t)
        return -self.A * self.A / (q * q)
