from unittest import TestCase

import numpy as np

from thirdform.model import (
    CheckRecord,
    CoefficientRecord,
    FitRecord,
    LambdaFit,
    QuadricRow,
    Record,
    TPoly,
    Verdict,
    VerdictKind,
)

from .template_record import AbstractTestRecord


def sphere_verdict() -> Verdict:
    fit = LambdaFit(
        lambda_matrix=2.0 * np.eye(3),
        translation=None,
        residual_max=1e-9,
        residual_rms=5e-10,
        n_samples=36,
        mode="strict",
        condition_number=4.0,
    )
    return Verdict(VerdictKind.SPHERE_TYPE, fit, 1e-4)


def coefficients(matching: list[str], discriminating: bool = True) -> CoefficientRecord:
    polys = (TPoly.of(1.0, 2.0), TPoly.of(0.0, 1.0), TPoly.of(3.0), TPoly.of(), TPoly.of(-1.0))
    return CoefficientRecord(
        surface="helicoid pair (c5=1, λ=0)",
        s=0.3,
        closed_form=polys,
        probed=polys,
        max_deviation=1e-9,
        threshold=1e-4,
        t1_beta_prime=0.5,
        matching_variants=matching,
        discriminating=discriminating,
    )


class TestFitRecord(AbstractTestRecord.Template):
    def get_record(self) -> Record:
        return FitRecord("sphere(r=2)", sphere_verdict(), "SphereType", True)

    def test_csv_lambda_columns(self) -> None:
        row = self.get_record().csv_row()
        self.assertEqual(row["lambda_0"], 2.0)
        self.assertEqual(row["lambda_4"], 2.0)
        self.assertEqual(row["lambda_1"], 0.0)
        self.assertIsNone(row["lambda_9"])
        self.assertIsNone(row["lambda_11"])
        self.assertNotIn("lambda_12", row)

    def test_json(self) -> None:
        data = self.get_record().as_json()
        self.assertEqual(data["verdict"], "SphereType")
        self.assertEqual(data["lambda"], [2.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 2.0])
        self.assertEqual(data["n_samples"], 36)


class TestCheckRecord(AbstractTestRecord.Template):
    def get_record(self) -> Record:
        return CheckRecord("gauss-eigen", "catenoid(c=1)", 2e-9, 1e-6, 36, {"worst_u": 0.1})

    def test_passed(self) -> None:
        self.assertTrue(CheckRecord("x", "y", 0.5, 1.0).passed)
        self.assertFalse(CheckRecord("x", "y", 1.0, 1.0).passed)
        self.assertFalse(CheckRecord("x", "y", float("nan"), 1.0).passed)

    def test_infinite_value(self) -> None:
        record = CheckRecord("task-error", "Broken", float("inf"), 0.0)
        self.assertIsNone(record.as_json()["value"])
        self.assertFalse(record.passed)


class TestQuadricRow(AbstractTestRecord.Template):
    def get_record(self) -> Record:
        return self.row("NotCoordinateFiniteType", 0.5)

    @staticmethod
    def row(
        verdict: str,
        residual_max: float,
        predicted: str = "NotCoordinateFiniteType",
    ) -> QuadricRow:
        return QuadricRow(
            family="quadric1",
            a=-1.0,
            b=-2.0,
            c=1.0,
            verdict=verdict,
            predicted=predicted,
            residual_max=residual_max,
            identity_max=1e-8,
            closed_form_max=1e-9,
            third_coordinate="sqrt(omega)",
            closed_form_threshold=1e-5,
            tau=1e-4,
        )

    def test_passed(self) -> None:
        self.assertTrue(self.row("NotCoordinateFiniteType", 0.5).passed)
        self.assertFalse(self.row("NotCoordinateFiniteType", 5e-4).passed)
        self.assertFalse(self.row("GeneralLambda", 0.5).passed)
        self.assertTrue(self.row("SphereType", 1e-9, "SphereType").passed)


class TestCoefficientRecord(AbstractTestRecord.Template):
    def get_record(self) -> Record:
        return coefficients(["expanded"])

    def test_passed(self) -> None:
        self.assertTrue(coefficients(["expanded"]).passed)
        self.assertFalse(coefficients(["listed", "expanded"]).passed)
        self.assertFalse(coefficients([]).passed)
        self.assertTrue(coefficients(["listed", "expanded"], discriminating=False).passed)

    def test_csv_columns(self) -> None:
        row = self.get_record().csv_row()
        self.assertEqual(row["Q1_t1_closed"], 2.0)
        self.assertEqual(row["Q4_t0_probed"], 0.0)
        self.assertEqual(row["Q5_t6_closed"], 0.0)
        self.assertEqual(row["matching_variants"], "expanded")

    def test_json_pads_polynomials(self) -> None:
        data = self.get_record().as_json()
        closed = data["closed_form"]
        assert isinstance(closed, dict)
        self.assertEqual(closed["Q3"], [3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])


class TestVerdictKind(TestCase):
    def test_finite_type(self) -> None:
        self.assertTrue(VerdictKind.NULL_TYPE.is_finite_type)
        self.assertTrue(VerdictKind.GENERAL_LAMBDA.is_finite_type)
        self.assertFalse(VerdictKind.NOT_COORDINATE_FINITE_TYPE.is_finite_type)

    def test_values(self) -> None:
        self.assertIs(VerdictKind("SphereType"), VerdictKind.SPHERE_TYPE)
