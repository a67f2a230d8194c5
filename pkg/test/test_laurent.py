# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qtrinom.algebra.laurent import (
    INFINITY,
    ONE,
    ZERO,
    InexactDivisionError,
    QLaurent,
    QSeries,
    from_records,
    inverse_pochhammer,
    pochhammer,
    pochhammer_poly,
    q,
    series_from_dict,
    series_inverse,
    series_to_dict,
    to_quarters,
    to_records,
)

from .common_utils import TestCase, poly_from_q_powers

polys = st.dictionaries(st.integers(-24, 24), st.integers(-6, 6), max_size=8).map(QLaurent)


class LaurentTester(TestCase):
    def test_to_quarters(self):
        self.assertEqual(to_quarters(3), 12)
        self.assertEqual(to_quarters(Fraction(1, 2)), 2)
        self.assertEqual(to_quarters(Fraction(-3, 4)), -3)
        with self.assertRaises(ValueError):
            to_quarters(Fraction(1, 3))

    def test_zero_coefficients_are_dropped(self):
        poly = QLaurent({0: 1, 4: 0, 8: -2})
        self.assertEqual(dict(poly.terms), {0: 1, 8: -2})
        self.assertEqual(poly.min_exp, 0)
        self.assertEqual(poly.max_exp, 8)
        self.assertEqual(ZERO.min_exp, None)
        self.assertEqual(q(1) - q(1), ZERO)

    def test_integer_comparison(self):
        self.assertEqual(ONE, 1)
        self.assertEqual(ZERO, 0)
        self.assertNotEqual(q(1), 1)

    def test_arithmetic(self):
        self.assertEqual((ONE + q(1)) * (ONE - q(1)), ONE - q(2))
        self.assertEqual((ONE + q(1)) ** 2, ONE + q(1, 2) + q(2))
        self.assertEqual(1 - q(1), ONE - q(1))
        self.assertEqual(q(Fraction(1, 2)).shift(2), q(1))
        self.assertEqual(q(-1) * q(1), ONE)
        with self.assertRaises(ValueError):
            q(1) ** -1

    def test_large_products_agree_with_small_ones(self):
        x = sum((q(k, k + 1) for k in range(30)), ZERO)
        y = sum((q(2 * k, 1 - k) for k in range(20)), ZERO)
        expected = {}
        for ex, cx in x.items():
            for ey, cy in y.items():
                expected[ex + ey] = expected.get(ex + ey, 0) + cx * cy
        self.assertEqual(x * y, QLaurent(expected))

    def test_exact_div(self):
        self.assertEqual((ONE - q(2)).exact_div(ONE - q(1)), ONE + q(1))
        self.assertEqual((q(-1) - q(3)).exact_div(ONE + q(2)), q(-1) - q(1))
        with self.assertRaises(InexactDivisionError):
            (ONE + q(2)).exact_div(ONE - q(1))
        with self.assertRaises(ZeroDivisionError):
            ONE.exact_div(ZERO)

    def test_eval_at_one(self):
        self.assertEqual(pochhammer_poly(3).eval_at_one(), 0)
        self.assertEqual((ONE + q(Fraction(1, 4)) + q(5, 3)).eval_at_one(), 5)

    def test_str(self):
        self.assertEqual(str(ZERO), "0")
        self.assertEqual(str(ONE - q(1) + q(Fraction(1, 2), 3)), "1 + 3*q^(1/2) - q")
        self.assertEqual(str(q(-2, -1)), "-q^-2")

    def test_records(self):
        poly = q(-1, 2) + q(Fraction(3, 4)) - q(5)
        records = to_records(poly)
        self.assertEqual(records[0], {'exp_quarters': -4, 'coeff': '2'})
        self.assertEqual(from_records(records), poly)

    @given(polys, polys, polys)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, x, y, z):
        self.assertEqual(x + y, y + x)
        self.assertEqual(x * y, y * x)
        self.assertEqual((x + y) + z, x + (y + z))
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual(x - x, ZERO)
        self.assertEqual(x * ONE, x)

    @given(polys, st.integers(-20, 20))
    @settings(max_examples=60, deadline=None)
    def test_shift_is_monomial_product(self, x, exp):
        self.assertEqual(x.shift(exp), x * QLaurent.monomial(exp))
        self.assertEqual(x.shift(exp).eval_at_one(), x.eval_at_one())

    @given(polys, polys.filter(bool))
    @settings(max_examples=60, deadline=None)
    def test_exact_div_inverts_product(self, x, y):
        self.assertEqual((x * y).exact_div(y), x)


class SeriesTester(TestCase):
    def test_partition_numbers(self):
        series = inverse_pochhammer(INFINITY, 20)
        self.assertEqual(series.poly, poly_from_q_powers({0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7}))
        self.assertEqual(series.cutoff, 20)

    def test_euler_pentagonal(self):
        series = pochhammer(INFINITY, 28)
        self.assertEqual(series.poly, poly_from_q_powers({0: 1, 1: -1, 2: -1, 5: 1, 7: 1}))

    def test_finite_pochhammer(self):
        self.assertEqual(pochhammer(2, 40).poly, ONE - q(1) - q(2) + q(3))
        self.assertEqual(inverse_pochhammer(1, 12).poly, ONE + q(1) + q(2) + q(3))
        with self.assertRaises(ValueError):
            pochhammer(-1, 8)

    def test_truncation_on_construction(self):
        series = QSeries(ONE + q(1) + q(2), 4)
        self.assertEqual(series.poly, ONE + q(1))
        self.assertEqual(series.coeff(4), 1)
        with self.assertRaises(ValueError):
            series.coeff(8)

    def test_cutoff_rules(self):
        x = QSeries(ONE + q(1), 8)
        y = QSeries(ONE, 4)
        self.assertEqual((x + y).cutoff, 4)
        self.assertEqual((x * q(-1)).cutoff, 4)
        self.assertEqual((x * q(-1)).poly, q(-1) + ONE)
        self.assertEqual(x.shift(4).cutoff, 12)
        self.assertEqual((x + ONE).cutoff, 8)
        with self.assertRaises(ValueError):
            x.truncate(12)

    def test_agrees_with(self):
        self.assertTrue(QSeries(ONE + q(1) + q(3), 12).agrees_with(QSeries(ONE + q(1), 8)))
        self.assertFalse(QSeries(ONE + q(1), 8).agrees_with(QSeries(ONE + q(1, 2), 12)))

    def test_series_inverse(self):
        x = QSeries(ONE - q(1), 16)
        self.assertEqual((x * series_inverse(x)).poly, ONE)
        with self.assertRaises(ValueError):
            series_inverse(QSeries(q(1), 8))

    def test_series_dict(self):
        series = inverse_pochhammer(INFINITY, 12)
        data = series_to_dict(series)
        self.assertEqual(data['cutoff_quarters'], 12)
        self.assertEqual(series_from_dict(data), series)


if __name__ == '__main__':
    unittest.main()
