from typing import Callable, Optional, Sequence, final

import numpy as np

from ..analyzer import sample_random
from ..beltrami import delta3_position
from ..kernel import form_bundle
from ..model import CheckRecord, CoefficientRecord
from ..ruled import (
    CurvePair,
    RuledSurface,
    adjudicate_t1_beta_prime,
    coefficient_equations,
    expansion_delta3,
    helicoid_checks,
    probe_coefficients,
    q_closed_forms,
    random_loxodrome_pair,
    random_spherical_pair,
    ruled_invariants,
    ruled_surface,
    variants_differ,
)
from ..task import Task, TaskRuntime

COEFFICIENT_THRESHOLD = 1e-4

PairFactory = Callable[[np.random.Generator], CurvePair]

RANDOM_PAIRS: tuple[PairFactory, ...] = (random_spherical_pair, random_loxodrome_pair)
"""Random curve pairs drawn in turn: constant μ first, then μ varying with s."""


def default_s_values(surface: RuledSurface) -> list[float]:
    """default_s_values returns s at 1/4, 1/2 and 3/4 of the surface's s-range."""
    d = surface.domain
    return [d.u0 + k * (d.u1 - d.u0) for k in (0.25, 0.5, 0.75)]


@final
class RuledCoefficients(Task):
    """RuledCoefficients compares the closed-form operator coefficients Q₁…Q₅
    of a ruled surface with the ones probed from the numeric Δ^III, at several s.
    Each comparison also decides which printed form of the t¹ β′ coefficient
    matches the probed operator."""

    def __init__(
        self,
        surface: RuledSurface,
        s_values: Optional[Sequence[float]] = None,
        threshold: float = COEFFICIENT_THRESHOLD,
        name: Optional[str] = None,
    ) -> None:
        super().__init__(name)
        self.surface = surface
        self.s_values = s_values
        self.threshold = threshold

    def execute(self, r: TaskRuntime) -> None:
        s_values = self.s_values or default_s_values(self.surface)
        for s in s_values:
            self.report(r, self.compare_at(s, r))

    def compare_at(self, s: float, r: TaskRuntime) -> CoefficientRecord:
        inv = ruled_invariants(self.surface.curves, s)
        closed = q_closed_forms(inv)
        probed = probe_coefficients(self.surface, s, None, r.options.tolerances)
        max_deviation = max(c.max_deviation(p) for c, p in zip(closed, probed))
        value, matching = adjudicate_t1_beta_prime(inv, probed)
        self.logger.debug(
            "%s at s = %g: max deviation %.3g, t¹β′ matches %s",
            self.surface.name,
            s,
            max_deviation,
            matching,
        )
        return CoefficientRecord(
            surface=self.surface.name,
            s=s,
            closed_form=closed,
            probed=probed,
            max_deviation=max_deviation,
            threshold=self.threshold,
            t1_beta_prime=value,
            matching_variants=list(matching),
            discriminating=variants_differ(inv),
        )


@final
class RuledReconstruction(Task):
    """RuledReconstruction runs the closed-form vs probed coefficient comparison
    on `count` random non-cylindrical curve pairs, drawn in turn from `pairs`,
    and checks that every discriminating comparison picked the same printed variant
    of the t¹ β′ coefficient."""

    def __init__(
        self,
        count: int = 5,
        s_values: Sequence[float] = (-0.5, 0.0, 0.5),
        threshold: float = COEFFICIENT_THRESHOLD,
        pairs: Sequence[PairFactory] = RANDOM_PAIRS,
    ) -> None:
        super().__init__()
        self.count = count
        self.s_values = s_values
        self.threshold = threshold
        self.pairs = pairs

    def execute(self, r: TaskRuntime) -> None:
        matched: set[str] = set()
        undecided = 0
        for i in range(self.count):
            surface = ruled_surface(self.pairs[i % len(self.pairs)](r.rng))
            self.logger.info("Probing %s", surface.name)
            comparison = RuledCoefficients(surface, self.s_values, self.threshold)
            for s in self.s_values:
                record = comparison.compare_at(s, r)
                self.report(r, record)
                if record.discriminating and len(record.matching_variants) == 1:
                    matched.update(record.matching_variants)
                elif record.discriminating:
                    undecided += 1

        consistent = len(matched) == 1 and undecided == 0
        self.logger.info("t¹ β′ coefficient matches the %s variant", ", ".join(sorted(matched)))
        self.report(
            r,
            CheckRecord(
                "t1-beta-prime-variant",
                "random ruling pairs",
                0.0 if consistent else 1.0,
                0.5,
                self.count * len(self.s_values),
                {"matching": sorted(matched), "undecided": undecided},
            ),
        )


@final
class RuledConsistency(Task):
    """RuledConsistency checks, at random admissible points of random ruled surfaces,
    K = −A²/q² against the generic Gauss curvature, and Δ^III x assembled
    from the closed-form coefficients against the generic Δ^III x."""

    def __init__(
        self,
        count: int = 5,
        points: int = 20,
        curvature_threshold: float = 1e-8,
        expansion_threshold: float = 1e-4,
        pairs: Sequence[PairFactory] = RANDOM_PAIRS,
    ) -> None:
        super().__init__()
        self.count = count
        self.points = points
        self.curvature_threshold = curvature_threshold
        self.expansion_threshold = expansion_threshold
        self.pairs = pairs

    def execute(self, r: TaskRuntime) -> None:
        tolerances = r.options.tolerances
        worst_curvature = 0.0
        worst_expansion = 0.0
        for i in range(self.count):
            curves = self.pairs[i % len(self.pairs)](r.rng)
            surface = ruled_surface(curves)
            for p in sample_random(surface, r.rng, self.points, tolerances):
                inv = ruled_invariants(curves, p.u)
                K = form_bundle(surface.jet(p)).K
                worst_curvature = max(worst_curvature, abs(K - inv.gauss_curvature(p.v)))

                generic = delta3_position(surface, p, tolerances).value
                assembled = expansion_delta3(curves, p.u, p.v)
                worst_expansion = max(
                    worst_expansion, float(np.max(np.abs(generic - assembled)))
                )

        n = self.count * self.points
        label = "random ruling pairs"
        self.report(
            r,
            CheckRecord(
                "ruled-gauss-curvature", label, worst_curvature, self.curvature_threshold, n
            ),
        )
        self.report(
            r, CheckRecord("ruled-expansion", label, worst_expansion, self.expansion_threshold, n)
        )


@final
class CoefficientEquations(Task):
    """CoefficientEquations evaluates the six coefficient equations of
    A⁴·(Δ^III x − Λx) = 0 with Λ = 0 on helicoid curve pairs, where all of them vanish,
    together with μ = 0 and β″ = −β."""

    def __init__(
        self,
        pairs: Sequence[CurvePair],
        s_values: Sequence[float] = (0.3, 1.1, 2.4),
        threshold: float = 1e-8,
    ) -> None:
        super().__init__()
        self.pairs = pairs
        self.s_values = s_values
        self.threshold = threshold

    def execute(self, r: TaskRuntime) -> None:
        zero = np.zeros((3, 3))
        for curves in self.pairs:
            worst_equation = 0.0
            worst_helicoid = 0.0
            for s in self.s_values:
                inv = ruled_invariants(curves, s)
                residuals = coefficient_equations(inv, curves.beta(s), curves.alpha(s), zero)
                worst_equation = max(
                    worst_equation, max(float(np.linalg.norm(e)) for e in residuals)
                )
                worst_helicoid = max(worst_helicoid, *helicoid_checks(curves, s))

            self.report(
                r,
                CheckRecord(
                    "coefficient-equations",
                    curves.name,
                    max(worst_equation, worst_helicoid),
                    self.threshold,
                    len(self.s_values),
                    {"equations": worst_equation, "mu_and_beta": worst_helicoid},
                ),
            )
