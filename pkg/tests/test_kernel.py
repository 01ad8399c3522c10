from math import cosh
from unittest import TestCase

import numpy as np

from thirdform.errors import DegenerateImmersion, OutOfDomain
from thirdform.kernel import (
    cayley_hamilton_residual,
    determinant_residual,
    finite_difference_jet,
    form_bundle,
    parabolic_guard,
    principal_curvatures,
    weingarten,
)
from thirdform.model import ParamPoint
from thirdform.surfaces import (
    Catenoid,
    Cylinder,
    Domain,
    FiniteDifferenceSurface,
    Helicoid,
    Plane,
    RigidMotion,
    Sphere,
)
from thirdform.tools.numeric import central_difference
from thirdform.tools.testing_mocks import random_rotation


class TestFormBundle(TestCase):
    def test_sphere(self) -> None:
        for r in (0.5, 1.0, 2.0, 5.0):
            with self.subTest(r=r):
                bundle = form_bundle(Sphere(r).jet(ParamPoint(0.7, -0.4)))
                self.assertAlmostEqual(bundle.K, 1.0 / (r * r), places=12)
                self.assertAlmostEqual(abs(bundle.H), 1.0 / r, places=12)
                np.testing.assert_allclose(
                    bundle.e.matrix(), bundle.g.matrix() / (r * r), atol=1e-12
                )

    def test_normal_is_unit_and_orthogonal(self) -> None:
        jet = Catenoid(1.5).jet(ParamPoint(1.0, 0.3))
        bundle = form_bundle(jet)
        self.assertAlmostEqual(float(np.linalg.norm(bundle.n)), 1.0, places=14)
        self.assertAlmostEqual(float(bundle.n @ jet.x_u), 0.0, places=14)
        self.assertAlmostEqual(float(bundle.n @ jet.x_v), 0.0, places=14)

    def test_minimal_surfaces(self) -> None:
        for surface, p in [
            (Helicoid(1.0, 0.5), ParamPoint(1.0, 1.0)),
            (Catenoid(1.0), ParamPoint(2.0, 0.5)),
        ]:
            with self.subTest(surface=surface.describe()):
                bundle = form_bundle(surface.jet(p))
                self.assertAlmostEqual(bundle.H, 0.0, places=12)
                self.assertLess(bundle.K, 0.0)
                # e = −K·g on minimal surfaces
                np.testing.assert_allclose(
                    bundle.e.matrix(), -bundle.K * bundle.g.matrix(), atol=1e-12
                )

    def test_catenoid_curvature(self) -> None:
        c, v = 2.0, 0.7
        bundle = form_bundle(Catenoid(c).jet(ParamPoint(0.3, v)))
        self.assertAlmostEqual(bundle.K, -1.0 / (c * c * cosh(v / c) ** 4), places=12)

    def test_helicoid_curvature(self) -> None:
        c5, lam, t = 2.0, 1.0, 0.5
        bundle = form_bundle(Helicoid(c5, lam).jet(ParamPoint(1.0, t)))
        q = (lam + t) ** 2 + c5 * c5
        self.assertAlmostEqual(bundle.K, -c5 * c5 / (q * q), places=12)

    def test_rigid_motion_invariance(self) -> None:
        rng = np.random.default_rng(42)
        surface = Catenoid(1.0)
        p = ParamPoint(0.8, -0.3)
        reference = form_bundle(surface.jet(p))
        for _ in range(5):
            rotation = random_rotation(rng)
            moved = RigidMotion(surface, rotation, rng.normal(size=3))
            bundle = form_bundle(moved.jet(p))
            self.assertAlmostEqual(bundle.K, reference.K, places=12)
            self.assertAlmostEqual(bundle.H, reference.H, places=12)
            np.testing.assert_allclose(bundle.n, rotation @ reference.n, atol=1e-12)

    def test_degenerate_immersion(self) -> None:
        pinched = FiniteDifferenceSurface(
            "pinched", lambda u, v: (u, 0.0 * v, 0.0), Domain(-1.0, 1.0, -1.0, 1.0)
        )
        with self.assertRaises(DegenerateImmersion):
            pinched.jet(ParamPoint(0.0, 0.0))

    def test_out_of_domain(self) -> None:
        with self.assertRaises(OutOfDomain):
            Plane().jet(ParamPoint(2.0, 0.0))


class TestIdentities(TestCase):
    def test_cayley_hamilton(self) -> None:
        for surface, p in [
            (Sphere(3.0), ParamPoint(1.0, 0.5)),
            (Helicoid(0.5, 1.0), ParamPoint(0.3, 1.2)),
            (Catenoid(1.0), ParamPoint(0.3, -0.8)),
        ]:
            with self.subTest(surface=surface.describe()):
                bundle = form_bundle(surface.jet(p))
                self.assertLess(cayley_hamilton_residual(bundle), 1e-12)
                self.assertLess(determinant_residual(bundle), 1e-12)

    def test_parabolic_guard(self) -> None:
        self.assertFalse(parabolic_guard(form_bundle(Plane().jet(ParamPoint(0.0, 0.0))), 1e-6))
        cylinder = form_bundle(Cylinder().jet(ParamPoint(1.0, 0.0)))
        self.assertFalse(parabolic_guard(cylinder, 1e-6))
        self.assertTrue(parabolic_guard(form_bundle(Sphere().jet(ParamPoint(1.0, 0.0))), 1e-6))


class TestWeingarten(TestCase):
    def test_matches_differentiated_normal(self) -> None:
        surface = Helicoid(1.0, 0.5)
        p = ParamPoint(1.0, 0.8)
        jet = surface.jet(p)
        n_u, n_v = weingarten(jet, form_bundle(jet))

        def normal(u: float, v: float) -> np.ndarray:
            return form_bundle(surface.jet(ParamPoint(u, v))).n

        np.testing.assert_allclose(
            n_u, central_difference(lambda u: normal(u, p.v), p.u, 1e-4), atol=1e-9
        )
        np.testing.assert_allclose(
            n_v, central_difference(lambda v: normal(p.u, v), p.v, 1e-4), atol=1e-9
        )


class TestPrincipalCurvatures(TestCase):
    def test_sphere(self) -> None:
        k1, k2 = principal_curvatures(form_bundle(Sphere(2.0).jet(ParamPoint(0.1, 0.2))))
        self.assertAlmostEqual(abs(k1), 0.5, places=12)
        self.assertAlmostEqual(k1, k2, places=12)

    def test_product_and_mean(self) -> None:
        bundle = form_bundle(Catenoid(1.0).jet(ParamPoint(0.4, 0.6)))
        k1, k2 = principal_curvatures(bundle)
        self.assertLessEqual(k1, k2)
        self.assertAlmostEqual(k1 * k2, bundle.K, places=12)
        self.assertAlmostEqual(0.5 * (k1 + k2), bundle.H, places=12)


class TestFiniteDifferenceJet(TestCase):
    def test_matches_analytic_jet(self) -> None:
        surface = Catenoid(1.0)
        p = ParamPoint(0.5, 0.4)
        analytic = surface.jet(p)

        def position(u: float, v: float) -> np.ndarray:
            return surface.evaluate(ParamPoint(u, v)).x

        numeric = finite_difference_jet(position, p, 1e-4)
        np.testing.assert_allclose(numeric.x_u, analytic.x_u, atol=1e-9)
        np.testing.assert_allclose(numeric.x_v, analytic.x_v, atol=1e-9)
        np.testing.assert_allclose(numeric.x_uu, analytic.x_uu, atol=1e-7)
        np.testing.assert_allclose(numeric.x_uv, analytic.x_uv, atol=1e-7)
        np.testing.assert_allclose(numeric.x_vv, analytic.x_vv, atol=1e-7)
