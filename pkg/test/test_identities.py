# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import unittest

from qtrinom.algebra.identities import (
    verify_binomial_recurrences,
    verify_trinomial_limits,
    verify_trinomial_properties,
)

from .common_utils import TestCase


class TrinomialPropertiesTester(TestCase):
    def test_properties(self):
        report = verify_trinomial_properties(6)
        self.assertReportPassed(report)
        equations = {inst.equation for inst in report.instances}
        for label in ('trinom-symmetry-0', 'trinom-pascal-twin', 'trinom-mixed-1',
                      'trinom-tautology-raised', 'trinom-depth-two-n2', 'trinom-classical'):
            self.assertIn(label, equations)

    def test_degree_zero_has_no_recurrences(self):
        report = verify_trinomial_properties(0)
        self.assertReportPassed(report)
        self.assertNotIn('trinom-pascal-0', {inst.equation for inst in report.instances})

    def test_limits(self):
        self.assertReportPassed(verify_trinomial_limits(16))


class BinomialRecurrencesTester(TestCase):
    def test_recurrences(self):
        report = verify_binomial_recurrences(-6, 8, 8)
        self.assertReportPassed(report)
        params = [inst.params for inst in report.instances if inst.equation == 'binom-standard-pascal-low']
        self.assertNotIn({'n': 0, 'm': 0}, params)
        self.assertTrue(all(p['n'] >= 0 for p in params))


if __name__ == '__main__':
    unittest.main()
