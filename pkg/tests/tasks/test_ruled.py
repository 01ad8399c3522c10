from typing import cast

from thirdform.model import CoefficientRecord
from thirdform.ruled import (
    helicoid_pair,
    random_loxodrome_pair,
    ruled_surface,
    spherical_ruling_pair,
)
from thirdform.surfaces import Domain
from thirdform.tasks import (
    CoefficientEquations,
    RuledCoefficients,
    RuledConsistency,
    RuledReconstruction,
)
from thirdform.tasks.ruled import default_s_values

from .template_testcase import AbstractTestTask


class TestRuledCoefficients(AbstractTestTask.Template):
    def test_helicoid_is_not_discriminating(self) -> None:
        surface = ruled_surface(helicoid_pair(1.5, 0.5))
        RuledCoefficients(surface, [0.4, 1.2]).execute(self.runtime)

        records = [cast(CoefficientRecord, r) for r in self.records("coefficients")]
        self.assertEqual([r.s for r in records], [0.4, 1.2])
        self.assertTrue(all(not r.discriminating for r in records))
        self.assertTrue(all(len(r.matching_variants) == 2 for r in records))
        self.assertAllPassed()

    def test_spherical_pair_picks_expanded(self) -> None:
        curves = spherical_ruling_pair(theta=1.0, lam0=0.3, lam1=0.2, A0=1.0, A1=0.25)
        surface = ruled_surface(curves, Domain(-1.0, 1.0, -1.5, 1.5))
        RuledCoefficients(surface, [0.3]).execute(self.runtime)

        (only,) = self.records("coefficients")
        record = cast(CoefficientRecord, only)
        self.assertTrue(record.discriminating)
        self.assertEqual(record.matching_variants, ["expanded"])
        self.assertTrue(record.passed)

    def test_default_s_values(self) -> None:
        surface = ruled_surface(helicoid_pair(), Domain(0.0, 2.0, 0.5, 2.0))
        self.assertEqual(default_s_values(surface), [0.5, 1.0, 1.5])


class TestRuledReconstruction(AbstractTestTask.Template):
    def test_random_pairs(self) -> None:
        RuledReconstruction(count=2, s_values=(0.0, 0.5)).execute(self.runtime)

        self.assertEqual(len(self.records("coefficients")), 4)
        surfaces = [cast(CoefficientRecord, r).surface for r in self.records("coefficients")]
        self.assertTrue(surfaces[0].startswith("spherical ruling pair"))
        self.assertTrue(surfaces[-1].startswith("loxodrome pair"))
        (summary,) = self.checks("t1-beta-prime-variant")
        self.assertEqual(summary.details["matching"], ["expanded"])
        self.assertAllPassed()

    def test_varying_mu(self) -> None:
        task = RuledReconstruction(count=2, s_values=(-0.5, 0.5), pairs=[random_loxodrome_pair])
        task.execute(self.runtime)

        records = [cast(CoefficientRecord, r) for r in self.records("coefficients")]
        self.assertEqual(len(records), 4)
        self.assertTrue(all(r.surface.startswith("loxodrome pair") for r in records))
        self.assertAllPassed()


class TestRuledConsistency(AbstractTestTask.Template):
    def test_random_pairs(self) -> None:
        RuledConsistency(count=2, points=5).execute(self.runtime)

        self.assertEqual(len(self.checks("ruled-gauss-curvature")), 1)
        self.assertEqual(len(self.checks("ruled-expansion")), 1)
        self.assertAllPassed()


class TestCoefficientEquations(AbstractTestTask.Template):
    def test_helicoids(self) -> None:
        pairs = [helicoid_pair(1.0, 0.0), helicoid_pair(2.0, 1.0, c2=0.5, c6=-1.0)]
        CoefficientEquations(pairs).execute(self.runtime)

        self.assertEqual(len(self.checks("coefficient-equations")), 2)
        self.assertAllPassed()

    def test_non_helicoid_fails(self) -> None:
        curves = spherical_ruling_pair(theta=1.0, lam0=0.3, lam1=0.2, A0=1.0, A1=0.25)
        CoefficientEquations([curves], s_values=(0.2,)).execute(self.runtime)

        (record,) = self.checks("coefficient-equations")
        self.assertFalse(record.passed)
