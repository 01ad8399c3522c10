from typing import Optional, Sequence, final

import numpy as np

from ..analyzer import sample_domain, sample_random
from ..beltrami import ScalarField, check_identity_eq2, delta3_gauss, laplace_beltrami
from ..kernel import cayley_hamilton_residual, determinant_residual, form_bundle
from ..model import CheckRecord, ParamPoint, Quadric1Params
from ..quadrics import abc_identities
from ..surfaces import SurfacePatch, default_quadric1_domain
from ..task import Task, TaskRuntime

ONE = ScalarField.constant(1.0)


@final
class IdentityEq2(Task):
    """IdentityEq2 checks Δ^III x = ∇^III(2H/K, n) − (2H/K)·n at the grid sample points
    of every surface; at least min_points points must be checked."""

    def __init__(
        self,
        surfaces: Sequence[SurfacePatch],
        threshold: float = 1e-5,
        min_points: int = 25,
    ) -> None:
        super().__init__()
        self.surfaces = surfaces
        self.threshold = threshold
        self.min_points = min_points

    def execute(self, r: TaskRuntime) -> None:
        n_u, n_v = r.options.grid
        grid = (max(n_u, 6), max(n_v, 6))
        for surface in self.surfaces:
            points = sample_domain(surface, grid, r.options.tolerances)
            residual = max(check_identity_eq2(surface, p, r.options.tolerances) for p in points)
            if len(points) < self.min_points:
                self.logger.warning(
                    "%s: only %d point(s) survived the guards", surface.describe(), len(points)
                )
                residual = float("inf")
            label = surface.describe()
            self.report(
                r, CheckRecord("identity-eq2", label, residual, self.threshold, len(points))
            )


@final
class GaussMapEigen(Task):
    """GaussMapEigen checks Δ^III n = 2n at the grid sample points of every surface."""

    def __init__(self, surfaces: Sequence[SurfacePatch], threshold: float = 1e-5) -> None:
        super().__init__()
        self.surfaces = surfaces
        self.threshold = threshold

    def execute(self, r: TaskRuntime) -> None:
        tolerances = r.options.tolerances
        for surface in self.surfaces:
            points = sample_domain(surface, r.options.grid, tolerances)
            residual = max(
                float(
                    np.linalg.norm(
                        delta3_gauss(surface, p, tolerances) - 2.0 * form_bundle(surface.jet(p)).n
                    )
                )
                for p in points
            )
            label = surface.describe()
            self.report(
                r, CheckRecord("gauss-map", label, residual, self.threshold, len(points))
            )


@final
class FormIdentities(Task):
    """FormIdentities checks pointwise identities of the fundamental forms
    at `count` random admissible points of every surface:

    - Cayley–Hamilton: e − 2H·b + K·g = 0,
    - det e = K²·det g,
    - Δ^F 1 = 0 for F = I, II, III.
    """

    def __init__(
        self,
        surfaces: Sequence[SurfacePatch],
        count: int = 100,
        threshold: float = 1e-10,
        constant_threshold: float = 1e-9,
    ) -> None:
        super().__init__()
        self.surfaces = surfaces
        self.count = count
        self.threshold = threshold
        self.constant_threshold = constant_threshold

    def execute(self, r: TaskRuntime) -> None:
        tolerances = r.options.tolerances
        for surface in self.surfaces:
            label = surface.describe()
            points = sample_random(surface, r.rng, self.count, tolerances)
            bundles = [form_bundle(surface.jet(p)) for p in points]

            self.report(
                r,
                CheckRecord(
                    "cayley-hamilton",
                    label,
                    max(cayley_hamilton_residual(b) for b in bundles),
                    self.threshold,
                    len(points),
                ),
            )
            self.report(
                r,
                CheckRecord(
                    "determinant",
                    label,
                    max(determinant_residual(b) for b in bundles),
                    self.threshold,
                    len(points),
                ),
            )
            self.report(
                r,
                CheckRecord(
                    "constants-annihilated",
                    label,
                    max(
                        abs(laplace_beltrami(surface, form, ONE, p, tolerances))
                        for p in points
                        for form in ("I", "II", "III")
                    ),
                    self.constant_threshold,
                    len(points),
                ),
            )


@final
class AbcIdentities(Task):
    """AbcIdentities checks the six polynomial identities of the auxiliary functions
    A, B and C of kind-I quadrics, for `count` random quadrics, each at a random point
    of its default domain."""

    COEFFICIENTS = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)

    def __init__(self, count: int = 100, threshold: float = 1e-10) -> None:
        super().__init__()
        self.count = count
        self.threshold = threshold

    def random_quadric(self, rng: np.random.Generator) -> Quadric1Params:
        a = float(rng.choice(self.COEFFICIENTS))
        b = float(rng.choice(self.COEFFICIENTS))
        c = float(rng.uniform(0.5, 2.0))
        if (a > 0.0 or b > 0.0) and rng.random() < 0.5:
            c = -c
        return Quadric1Params(a, b, c)

    def execute(self, r: TaskRuntime) -> None:
        worst = 0.0
        worst_at: Optional[str] = None
        for _ in range(self.count):
            params = self.random_quadric(r.rng)
            d = default_quadric1_domain(params)
            p = ParamPoint(float(r.rng.uniform(d.u0, d.u1)), float(r.rng.uniform(d.v0, d.v1)))
            residual = max(abc_identities(params, p.u, p.v))
            if residual >= worst:
                worst = residual
                worst_at = f"a={params.a:g}, b={params.b:g}, c={params.c:g} at {p}"

        self.report(
            r,
            CheckRecord(
                "abc-identities",
                "quadric1 (random)",
                worst,
                self.threshold,
                self.count,
                {"worst_at": worst_at},
            ),
        )
