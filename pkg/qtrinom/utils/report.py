# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
import json
from dataclasses import dataclass, field

from tabulate import tabulate

from ..algebra.laurent import QLaurent, QSeries

from typing import Any, Dict, List, Optional, Tuple, Union

__all__ = ['Instance', 'VerifyReport', 'first_difference']

_ORDER_KEYS = ('p', 'a', 'b', 'i', 'L')


def first_difference(lhs: Union[QLaurent, QSeries], rhs: Union[QLaurent, QSeries]) -> Optional[Dict[str, Any]]:
    """
    The lowest exponent where the two sides disagree, ``None`` when they agree.
    Series are compared up to the smaller of their cutoffs.
    """
    if isinstance(lhs, QSeries) or isinstance(rhs, QSeries):
        cutoff = min(x.cutoff for x in (lhs, rhs) if isinstance(x, QSeries))
        lhs = (lhs.poly if isinstance(lhs, QSeries) else lhs).truncate(cutoff)
        rhs = (rhs.poly if isinstance(rhs, QSeries) else rhs).truncate(cutoff)
    diff = lhs - rhs
    if not diff:
        return None
    exp = diff.min_exp
    return {'exp_quarters': exp, 'lhs': str(lhs.coeff(exp)), 'rhs': str(rhs.coeff(exp))}


@dataclass
class Instance:
    params: Dict[str, int]
    equation: str
    passed: bool
    first_difference: Optional[Dict[str, Any]] = None

    def sort_key(self) -> Tuple:
        return tuple(self.params.get(k, -1) for k in _ORDER_KEYS) + (self.equation, sorted(self.params.items()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'params': self.params,
            'equation': self.equation,
            'passed': self.passed,
            'first_difference': self.first_difference,
        }


@dataclass
class VerifyReport:
    """
    Pass/fail record of identity instances checked by one suite.

    Instances are kept in the order ``(p, a, b, i, L, equation)`` once
    ``sorted`` is called; missing parameters sort first.
    """
    suite: str
    instances: List[Instance] = field(default_factory=list)

    def check(self, equation: str, params: Dict[str, int], lhs, rhs) -> bool:
        diff = first_difference(lhs, rhs)
        self.instances.append(Instance(dict(params), equation, diff is None, diff))
        return diff is None

    def assert_true(self, equation: str, params: Dict[str, int], condition: bool) -> bool:
        self.instances.append(Instance(dict(params), equation, bool(condition)))
        return bool(condition)

    def extend(self, other: 'VerifyReport') -> 'VerifyReport':
        self.instances.extend(other.instances)
        return self

    @property
    def failures(self) -> List[Instance]:
        return [inst for inst in self.instances if not inst.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def totals(self) -> Dict[str, int]:
        failed = len(self.failures)
        return {'total': len(self.instances), 'passed': len(self.instances) - failed, 'failed': failed}

    def sorted(self) -> 'VerifyReport':
        return VerifyReport(self.suite, sorted(self.instances, key=Instance.sort_key))

    def to_dict(self) -> Dict[str, Any]:
        report = self.sorted()
        return {
            'suite': report.suite,
            'totals': report.totals(),
            'instances': [inst.to_dict() for inst in report.instances],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(',', ':'))

    def to_text(self) -> str:
        totals = self.totals()
        lines = [f"suite {self.suite}: {totals['passed']}/{totals['total']} passed"]
        by_equation: Dict[str, List[int]] = {}
        for inst in self.instances:
            counts = by_equation.setdefault(inst.equation, [0, 0])
            counts[0 if inst.passed else 1] += 1
        rows = [[eq, ok, bad] for eq, (ok, bad) in sorted(by_equation.items())]
        if rows:
            lines.append(tabulate(rows, headers=('equation', 'passed', 'failed'), tablefmt='pipe',
                                  stralign='center', numalign='center'))
        failures = self.sorted().failures
        if failures:
            first = failures[0]
            lines.append(f"first failure: {first.equation} at {first.params}: {first.first_difference}")
        return '\n'.join(lines)
