from unittest import TestCase

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from thirdform.tools.numeric import central_difference, chebyshev_nodes

coefficient = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)


class TestCentralDifference(TestCase):
    @settings(max_examples=50, deadline=None)
    @given(st.lists(coefficient, min_size=5, max_size=5), st.floats(-2.0, 2.0))
    def test_exact_on_quartics(self, c: list[float], x: float) -> None:
        p = np.polynomial.Polynomial(c)
        got = central_difference(lambda t: float(p(t)), x, 1e-2)
        self.assertAlmostEqual(got, float(p.deriv()(x)), delta=1e-8)

    def test_vector_valued(self) -> None:
        got = central_difference(lambda t: np.array([np.sin(t), np.cos(t)]), 0.5, 1e-3)
        np.testing.assert_allclose(got, [np.cos(0.5), -np.sin(0.5)], atol=1e-11)


class TestChebyshevNodes(TestCase):
    def test_inside_interval_ascending(self) -> None:
        nodes = chebyshev_nodes(0.5, 2.0, 8)
        self.assertEqual(len(nodes), 8)
        self.assertTrue(np.all(nodes > 0.5))
        self.assertTrue(np.all(nodes < 2.0))
        self.assertTrue(np.all(np.diff(nodes) > 0.0))

    def test_symmetric(self) -> None:
        nodes = chebyshev_nodes(-1.0, 1.0, 7)
        np.testing.assert_allclose(nodes, -nodes[::-1], atol=1e-15)

    def test_no_nodes(self) -> None:
        with self.assertRaises(ValueError):
            chebyshev_nodes(0.0, 1.0, 0)
