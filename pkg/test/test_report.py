# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import json
import unittest

from qtrinom.algebra.laurent import ONE, QSeries, q
from qtrinom.utils.logger import coefficient_table, totals_table
from qtrinom.utils.report import VerifyReport, first_difference

from .common_utils import TestCase


class FirstDifferenceTester(TestCase):
    def test_polynomials(self):
        self.assertIsNone(first_difference(ONE + q(1), q(1) + ONE))
        self.assertEqual(first_difference(ONE + q(1), ONE + q(1, 2)), {'exp_quarters': 4, 'lhs': '1', 'rhs': '2'})

    def test_series_use_smaller_cutoff(self):
        self.assertIsNone(first_difference(QSeries(ONE + q(3), 8), QSeries(ONE, 16)))
        self.assertIsNone(first_difference(QSeries(ONE, 4), ONE + q(2)))
        diff = first_difference(QSeries(ONE + q(1), 8), QSeries(ONE, 16))
        self.assertEqual(diff['exp_quarters'], 4)


class VerifyReportTester(TestCase):
    def _report(self):
        report = VerifyReport('demo')
        report.check('eq-b', {'p': 5, 'L': 1}, ONE, ONE)
        report.check('eq-a', {'p': 4, 'L': 2}, ONE, q(1))
        report.assert_true('eq-c', {'L': 0}, True)
        return report

    def test_totals(self):
        report = self._report()
        self.assertFalse(report.passed)
        self.assertEqual(report.totals(), {'total': 3, 'passed': 2, 'failed': 1})
        self.assertEqual(len(report.failures), 1)

    def test_sorted(self):
        report = self._report().sorted()
        self.assertEqual([inst.equation for inst in report.instances], ['eq-c', 'eq-a', 'eq-b'])

    def test_json(self):
        data = json.loads(self._report().to_json())
        self.assertEqual(data['suite'], 'demo')
        self.assertEqual(data['totals']['failed'], 1)
        failed = [inst for inst in data['instances'] if not inst['passed']]
        self.assertEqual(failed[0]['first_difference'], {'exp_quarters': 0, 'lhs': '1', 'rhs': '0'})

    def test_text(self):
        text = self._report().to_text()
        self.assertIn('suite demo: 2/3 passed', text)
        self.assertIn('first failure: eq-a', text)

    def test_extend(self):
        report = VerifyReport('demo').extend(self._report())
        self.assertEqual(len(report.instances), 3)


class TablesTester(TestCase):
    def test_totals_table(self):
        demo = VerifyReport('demo')
        demo.check('eq-a', {'p': 4}, ONE, ONE)
        demo.check('eq-b', {'p': 4}, ONE, q(1))
        table = totals_table([demo, VerifyReport('empty')])
        lines = table.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertIn('failed', lines[0])
        self.assertEqual([cell.strip() for cell in lines[2].strip('|').split('|')], ['demo', '2', '1', '1'])
        self.assertEqual([cell.strip() for cell in lines[3].strip('|').split('|')], ['empty', '0', '0', '0'])

    def test_coefficient_table(self):
        table = coefficient_table(ONE + q(1, 3))
        self.assertIn('power of q', table)
        self.assertEqual(len(table.splitlines()), 4)


if __name__ == '__main__':
    unittest.main()
