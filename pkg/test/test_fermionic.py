# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import unittest
from unittest import mock
from fractions import Fraction

from qtrinom.algebra.laurent import ONE, ZERO, q
from qtrinom.models.fermionic import (
    chu_vandermonde_closed_form,
    chu_vandermonde_sum,
    fermi,
    fermi_family,
    fermi_value,
    phi,
    phi_prefactor,
    phi_tilde_prefactor,
    recurrence_rhs,
    replay_fermionic,
    upper_branch,
    verify_appendix,
    verify_even_recurrences,
    verify_modified_relation,
    verify_odd_recurrences,
)
from qtrinom.models.nmsystem import Mode, ModelParams, ParameterError, build_params

from .common_utils import TestCase


class FermionicTester(TestCase):
    def test_initial_values(self):
        for a in range(1, 3):
            for b in range(1, 4):
                self.assertEqual(fermi_value(4, a, b, 0, 0), ONE if a == b else ZERO)

    def test_small_value(self):
        self.assertEqual(fermi_value(4, 2, 1, 0, 1), q(Fraction(1, 2)))
        self.assertEqual(fermi_value(4, 1, 1, 0, 1), ONE)

    def test_modified_variant(self):
        self.assertEqual(fermi_value(4, 2, 2, 1, 0), ZERO)
        self.assertEqual(fermi_value(4, 2, 2, 1, 0, Mode.MODIFIED), ONE)
        # only L = 0 differs
        self.assertEqual(fermi_value(4, 2, 2, 1, 3, Mode.MODIFIED), fermi_value(4, 2, 2, 1, 3))

    def test_fermi_wraps_params(self):
        params = ModelParams(5, 2, 3, 0, 2)
        poly = fermi(params)
        self.assertEqual(poly.params, params)
        self.assertEqual(poly.variant, Mode.STANDARD)
        self.assertEqual(poly.value, fermi_value(5, 2, 3, 0, 2))

    def test_rejects_bad_params(self):
        with self.assertRaises(ParameterError):
            fermi_value(4, 3, 1, 0, 1)
        with self.assertRaises(ParameterError):
            verify_odd_recurrences(4, 1, 2)

    def test_family_boundaries(self):
        self.assertEqual(fermi_family(5, 2, 5, 0, 3), ZERO)
        self.assertEqual(fermi_family(5, 2, 1, 0, -1), ZERO)
        self.assertEqual(fermi_family(5, 1, 2, 1, 2), fermi_value(5, 1, 2, 0, 2))

    def test_phi(self):
        system = build_params(4, 1, 1, 0, 0)
        self.assertEqual(phi((0, 0, 0), system), 0)
        # (0, 0, 2): m C m = 8, A = 0
        self.assertEqual(phi((0, 0, 2), system), 8)
        with self.assertRaises(ValueError):
            phi((0, 0), system)

    def test_prefactors(self):
        self.assertEqual(phi_prefactor(1, 2), 2)
        self.assertEqual(phi_tilde_prefactor(1, 2), 4)
        self.assertEqual(phi_prefactor(3, 3), 0)

    def test_upper_branch(self):
        self.assertTrue(upper_branch(1, 1, 0))
        self.assertTrue(upper_branch(2, 1, 0))
        self.assertFalse(upper_branch(2, 2, 1))
        self.assertTrue(upper_branch(3, 2, 1))

    def test_recurrence_step(self):
        def value(b, L):
            return fermi_family(5, 2, b, 0, L)

        for b in range(1, 5):
            self.assertEqual(value(b, 4), recurrence_rhs(5, 2, 0, b, 4, value))

    def test_even_recurrences(self):
        for p in (4, 5):
            for a in range(1, p - 1):
                self.assertReportPassed(verify_even_recurrences(p, a, 5))

    def test_odd_recurrences(self):
        for p in (4, 5):
            for a in range(2, p - 1):
                self.assertReportPassed(verify_odd_recurrences(p, a, 5))

    def test_replay(self):
        for i, a in ((0, 1), (0, 2), (1, 2)):
            self.assertReportPassed(replay_fermionic(4, a, i, 6))

    def test_modified_relation(self):
        self.assertReportPassed(verify_modified_relation(5, 2))


class VandermondeTester(TestCase):
    def test_closed_form(self):
        self.assertEqual(chu_vandermonde_closed_form(1, 1), q(-1, -1))
        self.assertEqual(chu_vandermonde_sum(1, 1, 2), q(-1, -1))
        self.assertEqual(chu_vandermonde_closed_form(2, 3), ZERO)

    def test_independent_of_b(self):
        for B in range(0, 5):
            self.assertEqual(chu_vandermonde_sum(3, 2, B), chu_vandermonde_closed_form(3, 2))

    def test_negative_arguments(self):
        with self.assertRaises(ValueError):
            chu_vandermonde_sum(1, -1, 0)

    def test_appendix(self):
        self.assertReportPassed(verify_appendix((4, 5), 3))


class MutatedRecurrenceTester(TestCase):
    def test_flipped_parity_fails(self):
        def flipped(a, b, i):
            return not upper_branch(a, b, i)

        with mock.patch('qtrinom.models.fermionic.upper_branch', side_effect=flipped):
            self.assertFalse(verify_even_recurrences(4, 2, 4).passed)
            self.assertFalse(verify_odd_recurrences(5, 2, 4).passed)
        self.assertReportPassed(verify_even_recurrences(4, 2, 4))

    def test_whole_power_for_half_power_fails(self):
        with mock.patch('qtrinom.models.fermionic.HALF', Fraction(0)):
            report = verify_even_recurrences(4, 2, 4)
        self.assertFalse(report.passed)
        first = report.sorted().failures[0]
        self.assertEqual(first.params['L'], 1)


if __name__ == '__main__':
    unittest.main()
