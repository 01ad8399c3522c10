from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Mapping, Sequence, final

import numpy as np

from ..errors import DegenerateImmersion, DomainViolation, OutOfDomain
from ..model import Jet2, ParamPoint
from ..options import Tolerances

IMMERSION_EPS = 1e-12


@final
@dataclass(frozen=True)
class Domain:
    """Domain is the closed parameter rectangle [u0, u1] × [v0, v1].

    >>> d = Domain(0.0, 1.0, -1.0, 1.0)
    >>> d.contains(ParamPoint(0.5, 1.0)), d.contains(ParamPoint(1.5, 0.0))
    (True, False)
    >>> [(p.u, p.v) for p in d.grid(2, 1)]
    [(0.25, 0.0), (0.75, 0.0)]
    """

    u0: float
    u1: float
    v0: float
    v1: float

    def __post_init__(self) -> None:
        if not (self.u0 < self.u1 and self.v0 < self.v1):
            raise DomainViolation(
                f"empty parameter domain [{self.u0}, {self.u1}] × [{self.v0}, {self.v1}]"
            )

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> "Domain":
        """from_pairs creates a Domain from `[[u0, u1], [v0, v1]]`."""
        (u0, u1), (v0, v1) = pairs
        return cls(float(u0), float(u1), float(v0), float(v1))

    def as_pairs(self) -> list[list[float]]:
        return [[self.u0, self.u1], [self.v0, self.v1]]

    def contains(self, p: ParamPoint) -> bool:
        return self.u0 <= p.u <= self.u1 and self.v0 <= p.v <= self.v1

    def grid(self, n_u: int, n_v: int) -> list[ParamPoint]:
        """grid returns n_u × n_v cell-centered points, u varying slowest.
        Cell centers keep every point half a cell away from the boundary."""
        us = self.u0 + (np.arange(n_u) + 0.5) * (self.u1 - self.u0) / n_u
        vs = self.v0 + (np.arange(n_v) + 0.5) * (self.v1 - self.v0) / n_v
        return [ParamPoint(float(u), float(v)) for u in us for v in vs]


class SurfacePatch(ABC):
    """SurfacePatch is a parametrized surface x: Domain → E³ which
    can provide second-order jets at every point of its domain.
    """

    name: str
    params: Mapping[str, float]
    domain: Domain

    def __init__(self, name: str, params: Mapping[str, float], domain: Domain) -> None:
        self.name = name
        self.params = dict(params)
        self.domain = domain

    @abstractmethod
    def evaluate(self, p: ParamPoint) -> Jet2:
        """evaluate computes the jet without any domain or immersion checks.
        Callers should use `jet` instead."""
        raise NotImplementedError

    def contains(self, p: ParamPoint) -> bool:
        """contains returns True if the parametrization is defined at p."""
        return p.is_finite() and self.domain.contains(p)

    def guard(self, p: ParamPoint, tolerances: Tolerances) -> bool:
        """guard returns False for points which should be skipped by samplers
        for reasons specific to the surface family (apart from the parabolic guard)."""
        return True

    @final
    def jet(self, p: ParamPoint) -> Jet2:
        """jet evaluates the parametrization and its derivatives at p.

        Raises OutOfDomain if p is outside of the domain, and DegenerateImmersion
        if x_u × x_v vanishes (or the jet is not finite).
        """
        if not self.contains(p):
            raise OutOfDomain(self.name, p.u, p.v)
        j = self.evaluate(p)
        if not j.is_finite() or j.immersion_norm() < IMMERSION_EPS:
            raise DegenerateImmersion(f"at ({p.u:.6g}, {p.v:.6g}) of {self.name}")
        return j

    def describe(self) -> str:
        """describe returns a short label, like `sphere(r=2)`."""
        if not self.params:
            return self.name
        args = ", ".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.name}({args})"

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()}>"
