from unittest import TestCase

import numpy as np

from thirdform.analyzer import analyze, classify, fit_lambda, sample_domain, sample_random
from thirdform.errors import InsufficientSamples, RankDeficient
from thirdform.model import (
    LambdaFit,
    OperatorSample,
    ParamPoint,
    Quadric1Params,
    Quadric2Params,
    VerdictKind,
)
from thirdform.surfaces import (
    Catenoid,
    Domain,
    Helicoid,
    Plane,
    Quadric1Surface,
    Quadric2Surface,
    RigidMotion,
    Sphere,
)
from thirdform.tools.testing_mocks import random_rotation


def synthetic_samples(lambda_matrix: np.ndarray, xs: np.ndarray) -> list[OperatorSample]:
    return [
        OperatorSample(
            point=ParamPoint(float(i), 0.0),
            x=x,
            value=lambda_matrix @ x,
            K=1.0,
            H=1.0,
            n=np.array([0.0, 0.0, 1.0]),
        )
        for i, x in enumerate(xs)
    ]


def fake_fit(lambda_matrix: np.ndarray, residual: float = 0.0) -> LambdaFit:
    return LambdaFit(
        lambda_matrix=lambda_matrix,
        translation=None,
        residual_max=residual,
        residual_rms=residual,
        n_samples=10,
        mode="strict",
    )


class TestSampling(TestCase):
    def test_full_grid(self) -> None:
        self.assertEqual(len(sample_domain(Sphere(2.0), (6, 6))), 36)

    def test_parabolic_surface_rejected(self) -> None:
        with self.assertRaises(InsufficientSamples):
            sample_domain(Plane(), (6, 6))

    def test_grid_too_small(self) -> None:
        with self.assertRaises(ValueError):
            sample_domain(Sphere(), (2, 2))

    def test_random_is_seeded(self) -> None:
        a = sample_random(Catenoid(), np.random.default_rng(5), 10)
        b = sample_random(Catenoid(), np.random.default_rng(5), 10)
        self.assertEqual(a, b)
        self.assertEqual(len(a), 10)
        self.assertTrue(all(Catenoid().domain.contains(p) for p in a))

    def test_random_gives_up(self) -> None:
        with self.assertRaises(InsufficientSamples):
            sample_random(Plane(), np.random.default_rng(5), 3, max_attempts_per_point=2)


class TestFitLambda(TestCase):
    def setUp(self) -> None:
        self.rng = np.random.default_rng(11)
        self.lambda_matrix = self.rng.normal(size=(3, 3))

    def test_recovers_exact_matrix(self) -> None:
        fit = fit_lambda(synthetic_samples(self.lambda_matrix, self.rng.normal(size=(20, 3))))
        np.testing.assert_allclose(fit.lambda_matrix, self.lambda_matrix, atol=1e-12)
        self.assertLess(fit.residual_max, 1e-12)
        self.assertEqual(fit.solver, "cholesky")
        self.assertEqual(fit.n_samples, 20)
        self.assertEqual(len(fit.flat()), 9)

    def test_affine(self) -> None:
        xs = self.rng.normal(size=(20, 3))
        shift = np.array([1.0, -2.0, 0.5])
        samples = [
            OperatorSample(s.point, s.x, s.value + shift, s.K, s.H, s.n)
            for s in synthetic_samples(self.lambda_matrix, xs)
        ]
        fit = fit_lambda(samples, "affine")
        np.testing.assert_allclose(fit.lambda_matrix, self.lambda_matrix, atol=1e-10)
        assert fit.translation is not None
        np.testing.assert_allclose(fit.translation, shift, atol=1e-10)
        self.assertEqual(len(fit.flat()), 12)

    def test_ill_conditioned_uses_qr(self) -> None:
        xs = self.rng.normal(size=(20, 3)) * np.array([1e3, 1.0, 1e-3])
        fit = fit_lambda(synthetic_samples(self.lambda_matrix, xs))
        self.assertEqual(fit.solver, "qr")
        self.assertGreater(fit.condition_number, 1e8)
        np.testing.assert_allclose(fit.lambda_matrix, self.lambda_matrix, atol=1e-5)

    def test_too_few_samples(self) -> None:
        with self.assertRaises(InsufficientSamples):
            fit_lambda(synthetic_samples(self.lambda_matrix, self.rng.normal(size=(5, 3))))
        with self.assertRaises(InsufficientSamples):
            fit_lambda(
                synthetic_samples(self.lambda_matrix, self.rng.normal(size=(7, 3))), "affine"
            )

    def test_rank_deficient(self) -> None:
        xs = np.outer(np.arange(1.0, 11.0), [1.0, 2.0, 3.0])
        with self.assertRaises(RankDeficient):
            fit_lambda(synthetic_samples(self.lambda_matrix, xs))


class TestClassify(TestCase):
    def test_verdicts(self) -> None:
        cases = [
            (fake_fit(np.zeros((3, 3))), VerdictKind.NULL_TYPE),
            (fake_fit(2.0 * np.eye(3)), VerdictKind.SPHERE_TYPE),
            (fake_fit(np.eye(3)), VerdictKind.GENERAL_LAMBDA),
            (fake_fit(2.0 * np.eye(3), residual=1e-3), VerdictKind.NOT_COORDINATE_FINITE_TYPE),
        ]
        for fit, expected in cases:
            with self.subTest(expected=expected.value):
                verdict = classify(fit, 1e-4)
                self.assertIs(verdict.kind, expected)
                self.assertEqual(verdict.threshold, 1e-4)

    def test_only_not_finite_type_is_negative(self) -> None:
        self.assertTrue(VerdictKind.GENERAL_LAMBDA.is_finite_type)
        self.assertFalse(VerdictKind.NOT_COORDINATE_FINITE_TYPE.is_finite_type)


class TestAnalyze(TestCase):
    def test_spheres(self) -> None:
        for r in (0.5, 1.0, 2.0, 5.0):
            with self.subTest(r=r):
                fit, verdict = analyze(Sphere(r))
                self.assertIs(verdict.kind, VerdictKind.SPHERE_TYPE)
                self.assertLess(fit.distance_to(2.0 * np.eye(3)), 1e-5)
                self.assertLess(fit.residual_max, 1e-5)

    def test_helicoids(self) -> None:
        for c5 in (0.5, 1.0, 2.0):
            for lam in (0.0, 1.0):
                with self.subTest(c5=c5, lam=lam):
                    fit, verdict = analyze(Helicoid(c5, lam))
                    self.assertIs(verdict.kind, VerdictKind.NULL_TYPE)
                    self.assertLess(fit.distance_to(np.zeros((3, 3))), 1e-5)

    def test_catenoid(self) -> None:
        _, verdict = analyze(Catenoid(1.0))
        self.assertIs(verdict.kind, VerdictKind.NULL_TYPE)

    def test_quadrics(self) -> None:
        _, verdict = analyze(Quadric1Surface(Quadric1Params(-1.0, -1.0, 1.0)))
        self.assertIs(verdict.kind, VerdictKind.SPHERE_TYPE)

        fit, verdict = analyze(Quadric2Surface(Quadric2Params(1.0, 1.0)))
        self.assertIs(verdict.kind, VerdictKind.NOT_COORDINATE_FINITE_TYPE)
        self.assertGreater(fit.residual_max, 1e-3)

    def test_off_center_sphere(self) -> None:
        center = np.array([1.0, 2.0, 3.0])
        surface = Sphere(2.0, center=tuple(center), domain=Domain(0.5, 2.5, -0.8, 0.8))

        _, verdict = analyze(surface)
        self.assertIs(verdict.kind, VerdictKind.NOT_COORDINATE_FINITE_TYPE)

        fit, verdict = analyze(surface, mode="affine")
        self.assertIs(verdict.kind, VerdictKind.SPHERE_TYPE)
        assert fit.translation is not None
        np.testing.assert_allclose(fit.translation, -2.0 * center, atol=1e-5)

    def test_rotation_equivariance(self) -> None:
        rng = np.random.default_rng(17)
        surfaces = [
            Quadric2Surface(Quadric2Params(1.0, 2.0)),
            Quadric1Surface(Quadric1Params(1.0, 2.0, -1.0)),
            Helicoid(1.5, 0.5),
        ]
        for surface in surfaces:
            with self.subTest(surface=surface.describe()):
                rotation = random_rotation(rng)
                fit, verdict = analyze(surface)
                moved_fit, moved_verdict = analyze(RigidMotion(surface, rotation))

                expected = rotation @ fit.lambda_matrix @ rotation.T
                np.testing.assert_allclose(moved_fit.lambda_matrix, expected, rtol=1e-5, atol=1e-6)
                self.assertAlmostEqual(moved_fit.residual_max, fit.residual_max, delta=1e-6)
                self.assertAlmostEqual(moved_fit.residual_rms, fit.residual_rms, delta=1e-6)
                self.assertIs(moved_verdict.kind, verdict.kind)
