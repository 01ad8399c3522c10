from thirdform import TaskRuntime
from thirdform.model import CheckRecord, Quadric1Params, Quadric2Params
from thirdform.surfaces import Catenoid, Helicoid, Quadric1Surface, Quadric2Surface, Sphere
from thirdform.tasks import AbcIdentities, FormIdentities, GaussMapEigen, IdentityEq2

from .template_testcase import AbstractTestTask


class TestIdentityEq2(AbstractTestTask.Template):
    def test_catalog(self) -> None:
        surfaces = [Sphere(2.0), Helicoid(1.0), Quadric2Surface(Quadric2Params(1.0, 2.0))]
        IdentityEq2(surfaces).execute(self.runtime)

        records = self.checks("identity-eq2")
        self.assertEqual(len(records), 3)
        self.assertAllPassed()
        self.assertTrue(all(r.n_points >= 25 for r in records))

    def test_too_few_points(self) -> None:
        IdentityEq2([Sphere(2.0)], min_points=100).execute(self.runtime)
        (record,) = self.checks("identity-eq2")
        self.assertFalse(record.passed)


class TestGaussMapEigen(AbstractTestTask.Template):
    def test_catalog(self) -> None:
        surfaces = [Catenoid(1.0), Quadric1Surface(Quadric1Params(-1.0, -2.0, 1.0))]
        GaussMapEigen(surfaces).execute(self.runtime)
        self.assertEqual(len(self.checks("gauss-map")), 2)
        self.assertAllPassed()


class TestFormIdentities(AbstractTestTask.Template):
    def test_catalog(self) -> None:
        FormIdentities([Sphere(1.5), Helicoid(2.0, 1.0)], count=10).execute(self.runtime)

        self.assertEqual(len(self.runtime.records), 6)
        self.assertEqual(len(self.checks("cayley-hamilton")), 2)
        self.assertEqual(len(self.checks("determinant")), 2)
        self.assertEqual(len(self.checks("constants-annihilated")), 2)
        self.assertAllPassed()


class TestAbcIdentities(AbstractTestTask.Template):
    def test_random_quadrics(self) -> None:
        AbcIdentities(count=30).execute(self.runtime)

        (record,) = self.checks("abc-identities")
        self.assertTrue(record.passed)
        self.assertEqual(record.n_points, 30)
        self.assertIsNotNone(record.details["worst_at"])

    def test_deterministic(self) -> None:
        AbcIdentities(count=5).execute(self.runtime)
        again = TaskRuntime.seeded(self.options)
        AbcIdentities(count=5).execute(again)

        first = self.checks("abc-identities")[0]
        second = again.records[0]
        assert isinstance(second, CheckRecord)
        self.assertEqual(first.details, second.details)
        self.assertEqual(first.value, second.value)
