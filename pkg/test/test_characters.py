# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import unittest

from qtrinom.algebra.laurent import QUARTER, QSeries, to_quarters
from qtrinom.models.bosonic import BosonKind
from qtrinom.models.characters import (
    StabilizationError,
    bose_limit,
    chi,
    fermi_limit,
    fermi_truncated,
    identity_branch,
    phi13_character,
    stabilization_start,
    summed_out_character,
    verify_bosonic_limits,
    verify_character_identities,
    verify_finitized,
)
from qtrinom.models.fermionic import fermi_value, phi_tilde_prefactor
from qtrinom.models.nmsystem import ParameterError

from .common_utils import TestCase, poly_from_q_powers


class CharacterTester(TestCase):
    def test_vacuum_character(self):
        series = chi(4, 1, 1, 20).value
        self.assertEqual(series.cutoff, 20)
        self.assertEqual(series.poly, poly_from_q_powers({0: 1, 2: 1, 3: 1, 4: 2, 5: 2}))

    def test_ising_characters(self):
        # p = 3 gives the Ising model
        self.assertEqual(chi(3, 1, 1, 16).value.poly, poly_from_q_powers({0: 1, 2: 1, 3: 1, 4: 2}))

    def test_symmetry(self):
        for r in range(1, 4):
            for s in range(1, 5):
                self.assertEqual(chi(4, r, s, 24).value, chi(4, 4 - r, 5 - s, 24).value)

    def test_bad_labels(self):
        for args in ((2, 1, 1), (4, 0, 1), (4, 4, 1), (4, 1, 5)):
            with self.assertRaises(ParameterError):
                chi(*args, 8)

    def test_cartan_sum(self):
        self.assertPolyEqual(phi13_character(4, 24), chi(4, 1, 1, 24).value)
        self.assertPolyEqual(phi13_character(5, 20), chi(5, 1, 1, 20).value)

    def test_summed_out(self):
        with self.assertRaises(ParameterError):
            summed_out_character(4, 2, 2, 8)
        with self.assertRaises(ParameterError):
            summed_out_character(6, 2, 4, 8)
        self.assertIsInstance(summed_out_character(5, 2, 3, 12), QSeries)

    def test_summed_out_values(self):
        cutoff = 48
        for p, pairs in ((5, ((2, 3), (3, 2))), (6, ((2, 3), (3, 2), (3, 4), (4, 3)))):
            wide = cutoff + 2 * QUARTER * p
            for a, b in pairs:
                expected = chi(p, a, b + 2, wide).value + chi(p, a, b, wide).value.shift(to_quarters(a - b))
                expected = expected.shift(phi_tilde_prefactor(a, b)).truncate(cutoff)
                self.assertPolyEqual(summed_out_character(p, a, b, cutoff), expected)


class FermionicLimitTester(TestCase):
    def test_truncated_matches_full(self):
        full = fermi_value(5, 2, 3, 0, 4)
        truncated = fermi_truncated(5, 2, 3, 0, 4, 16)
        self.assertPolyEqual(truncated, QSeries(full, 16))

    def test_both_paths_agree(self):
        for a, b, i in ((1, 1, 0), (2, 1, 0), (2, 3, 0), (2, 2, 1)):
            direct = fermi_limit(4, i, a, b, 8, method='direct')
            self.assertPolyEqual(fermi_limit(4, i, a, b, 8), direct)

    def test_limit_is_vacuum_character(self):
        self.assertPolyEqual(fermi_limit(4, 0, 1, 1, 20, method='direct'), chi(4, 1, 1, 20).value)

    def test_bad_method(self):
        with self.assertRaises(ValueError):
            fermi_limit(4, 0, 1, 1, 8, method='guess')

    def test_stabilization_cap(self):
        with self.assertRaises(StabilizationError):
            fermi_limit(4, 0, 1, 1, 40, L_cap=3)
        self.assertPolyEqual(bose_limit(BosonKind.B, 4, 1, 1, 2, 8), chi(4, 1, 2, 8).value)

    def test_past_zero_plateau(self):
        # F^(6,0)_(1,5)(L) truncated at q^3 is 0 for L <= 3 and q^3 from L = 4
        self.assertGreater(stabilization_start(6, 12), 5)
        limit = fermi_limit(6, 0, 1, 5, 12)
        self.assertPolyEqual(limit, fermi_limit(6, 0, 1, 5, 12, method='direct'))
        self.assertEqual(limit.coeff(12), 1)
        self.assertPolyEqual(bose_limit(BosonKind.B, 5, 1, 4, 5, 12), chi(5, 1, 5, 12).value)
        self.assertNotEqual(chi(5, 1, 5, 12).value.coeff(0), 0)

    def test_both_paths_agree_to_q12(self):
        for p in (4, 5, 6):
            for a, b, i in ((1, 1, 0), (1, p - 1, 0), (2, 2, 0), (p - 2, 1, 1), (2, p - 2, 1)):
                self.assertPolyEqual(fermi_limit(p, i, a, b, 48), fermi_limit(p, i, a, b, 48, method='direct'))


class IdentityTester(TestCase):
    def test_branch(self):
        self.assertEqual(identity_branch(4, 1, 1, 0), ('even-b1-upper', 0, 'B:1'))
        self.assertEqual(identity_branch(4, 1, 2, 0), ('even-bulk-upper', 2, 'B:3'))
        self.assertEqual(identity_branch(5, 2, 3, 0), ('even-bulk-lower', 4, 'Btilde'))
        self.assertEqual(identity_branch(5, 2, 2, 0)[2], 'B:3')

    def test_finitized(self):
        for p in (4, 5):
            for i in (0, 1):
                for a in range(1, p - 1):
                    for b in range(1, p):
                        self.assertReportPassed(verify_finitized(p, a, b, i, 5))

    def test_character_identities(self):
        for p in (4, 5, 6):
            report = verify_character_identities(p, 48)
            self.assertReportPassed(report)
            equations = {inst.equation for inst in report.instances}
            self.assertIn('fermi-limit-paths', equations)
            if p > 4:
                self.assertIn('char-summed-out', equations)

    def test_bosonic_limits(self):
        for p in (4, 5):
            self.assertReportPassed(verify_bosonic_limits(p, 48))
        self.assertReportPassed(verify_bosonic_limits(6, 16))


if __name__ == '__main__':
    unittest.main()
