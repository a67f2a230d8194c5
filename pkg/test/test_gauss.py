# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from qtrinom.algebra.gauss import qbinom, qbinom_modified, qbinom_modified_closed_form, qtrinom, trinom_limit
from qtrinom.algebra.identities import trinomial_coefficient
from qtrinom.algebra.laurent import ONE, ZERO, QSeries, q

from .common_utils import TestCase, poly_from_q_powers


class GaussianBinomialTester(TestCase):
    def test_small_values(self):
        self.assertEqual(qbinom(0, 0), ONE)
        self.assertEqual(qbinom(1, 1), ONE + q(1))
        self.assertEqual(qbinom(2, 2), poly_from_q_powers({0: 1, 1: 1, 2: 2, 3: 1, 4: 1}))
        self.assertEqual(qbinom(3, 1), poly_from_q_powers({0: 1, 1: 1, 2: 1, 3: 1}))

    def test_vanishes_outside_quadrant(self):
        self.assertEqual(qbinom(-1, 3), ZERO)
        self.assertEqual(qbinom(2, -1), ZERO)

    @given(st.integers(0, 12), st.integers(0, 12))
    @settings(max_examples=40, deadline=None)
    def test_symmetry_and_classical_value(self, n, m):
        self.assertEqual(qbinom(n, m), qbinom(m, n))
        # [n+m, n] at q = 1 is the ordinary binomial
        expected = 1
        for k in range(1, m + 1):
            expected = expected * (n + k) // k
        self.assertEqual(qbinom(n, m).eval_at_one(), expected)

    def test_modified_binomial(self):
        self.assertEqual(qbinom_modified(-2, 1), q(-1, -1))
        self.assertEqual(qbinom_modified(-1, 0), ONE)
        self.assertEqual(qbinom_modified(-1, 2), ZERO)
        self.assertEqual(qbinom_modified(3, -1), ZERO)
        self.assertEqual(qbinom_modified(2, 3), qbinom(2, 3))

    @given(st.integers(-10, 10), st.integers(-3, 10))
    @settings(max_examples=80, deadline=None)
    def test_modified_closed_form(self, n, m):
        self.assertEqual(qbinom_modified(n, m), qbinom_modified_closed_form(n, m))

    @given(st.integers(-10, 10), st.integers(1, 10))
    @settings(max_examples=80, deadline=None)
    def test_modified_pascal(self, n, m):
        self.assertEqual(qbinom_modified(n, m), qbinom_modified(n, m - 1) + q(m) * qbinom_modified(n - 1, m))
        self.assertEqual(qbinom_modified(n, m), q(n) * qbinom_modified(n, m - 1) + qbinom_modified(n - 1, m))


class TrinomialTester(TestCase):
    def test_small_values(self):
        self.assertEqual(qtrinom(0, 0, 0), ONE)
        self.assertEqual(qtrinom(2, 0, 0), ONE + q(1) + q(2))
        self.assertEqual(qtrinom(2, 1, 1), ONE + q(1))
        self.assertEqual(qtrinom(2, 2, 0), ONE)
        self.assertEqual(qtrinom(2, 3, 0), ZERO)
        self.assertEqual(qtrinom(1, -1, 0), ONE)

    def test_negative_degree(self):
        with self.assertRaises(ValueError):
            qtrinom(-1, 0, 0)

    def test_classical_value(self):
        for L in range(0, 7):
            for A in range(-L, L + 1):
                for n in (-1, 0, 1, 2):
                    self.assertEqual(qtrinom(L, A, n).eval_at_one(), trinomial_coefficient(L, A))
        self.assertEqual(trinomial_coefficient(3, 0), 7)
        self.assertEqual(trinomial_coefficient(3, 4), 0)

    def test_symmetry(self):
        for L in range(0, 6):
            for A in range(-L, L + 1):
                self.assertEqual(qtrinom(L, A, 0), qtrinom(L, -A, 0))
                self.assertEqual(qtrinom(L, A, 1), q(A) * qtrinom(L, -A, 1))

    def test_limit(self):
        cutoff = 20
        for L in (13, 15, 20):
            self.assertPolyEqual(QSeries(qtrinom(L, 3, 0), cutoff), trinom_limit(3, 0, cutoff))
        self.assertEqual(trinom_limit(0, 1, 8).poly, poly_from_q_powers({0: 2, 1: 2, 2: 4}))
        with self.assertRaises(ValueError):
            trinom_limit(0, 2, 8)


if __name__ == '__main__':
    unittest.main()
