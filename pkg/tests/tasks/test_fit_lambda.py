from typing import cast

import numpy as np

from thirdform import RunOptions
from thirdform.model import CheckRecord, FitRecord, VerdictKind
from thirdform.surfaces import Cylinder, Helicoid, Sphere
from thirdform.tasks import FitLambda, LambdaTarget

from .template_testcase import AbstractTestTask


class TestFitLambda(AbstractTestTask.Template):
    def test_sphere(self) -> None:
        FitLambda(Sphere(2.0)).execute(self.runtime)

        (record,) = self.records("fit")
        record = cast(FitRecord, record)
        self.assertIs(record.verdict.kind, VerdictKind.SPHERE_TYPE)
        self.assertIsNone(record.expected)
        self.assertTrue(record.passed)

    def test_expected_verdict(self) -> None:
        FitLambda(Helicoid(1.0), expected=VerdictKind.SPHERE_TYPE).execute(self.runtime)

        (record,) = self.records("fit")
        record = cast(FitRecord, record)
        self.assertIs(record.verdict.kind, VerdictKind.NULL_TYPE)
        self.assertEqual(record.expected, "SphereType")
        self.assertFalse(record.passed)

    def test_form_i_on_sphere(self) -> None:
        FitLambda(Sphere(2.0), form="I").execute(self.runtime)
        (record,) = self.records("fit")
        lambda_matrix = cast(FitRecord, record).verdict.lambda_fit.lambda_matrix
        np.testing.assert_allclose(lambda_matrix, 0.5 * np.eye(3), atol=1e-6)

    def test_geometry_error(self) -> None:
        FitLambda(Cylinder(1.0)).execute(self.runtime)

        self.assertEqual(len(self.records("fit")), 0)
        (record,) = self.checks("fit-lambda")
        self.assertFalse(record.passed)
        self.assertIn("error", record.details)


class TestFitLambdaExpectOption(AbstractTestTask.Template):
    options = RunOptions(expect="NullType")

    def test_expect_from_options(self) -> None:
        FitLambda(Helicoid(1.0, 0.5)).execute(self.runtime)

        (record,) = self.records("fit")
        self.assertEqual(cast(FitRecord, record).expected, "NullType")
        self.assertTrue(record.passed)


class TestLambdaTarget(AbstractTestTask.Template):
    def test_spheres(self) -> None:
        task = LambdaTarget("sphere", [Sphere(0.5), Sphere(5.0)], 2.0 * np.eye(3))
        task.execute(self.runtime)

        records = self.checks("sphere")
        self.assertEqual(len(records), 2)
        self.assertAllPassed()
        self.assertEqual(records[0].details["verdict"], "SphereType")

    def test_wrong_target(self) -> None:
        LambdaTarget("null", [Sphere(1.0)], np.zeros((3, 3))).execute(self.runtime)

        (record,) = self.checks("null")
        self.assertFalse(record.passed)
        self.assertAlmostEqual(cast(CheckRecord, record).value, 2.0, places=4)
