# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Property catalogue of q-binomials and q-trinomials, checked as exact equalities.
"""
import logging
from functools import lru_cache

import numpy as np

from ..utils.report import VerifyReport
from .gauss import qbinom, qbinom_modified, qbinom_modified_closed_form, qtrinom, trinom_limit
from .laurent import ONE, QUARTER, ZERO, QLaurent, QSeries, inverse_pochhammer, q

from typing import Dict, Tuple

__all__ = [
    'trinomial_coefficient', 'verify_trinomial_properties', 'verify_binomial_recurrences',
    'verify_trinomial_limits',
]

logger = logging.getLogger(__name__)

SUPERSCRIPTS = (-1, 0, 1, 2)


@lru_cache(maxsize=None)
def _trinomial_row(L: int) -> np.ndarray:
    row = np.array([1], dtype=object)
    for _ in range(L):
        row = np.convolve(row, np.array([1, 1, 1], dtype=object))
    return row


def trinomial_coefficient(L: int, A: int) -> int:
    """The coefficient of ``x^(L+A)`` in ``(1 + x + x^2)^L``."""
    if L < 0 or abs(A) > L:
        return 0
    return int(_trinomial_row(L)[L + A])


def _T(L: int, A: int, n: int) -> QLaurent:
    return qtrinom(L, A, n) if L >= 0 else ZERO


def T0(L: int, A: int) -> QLaurent:
    return _T(L, A, 0)


def T1(L: int, A: int) -> QLaurent:
    return _T(L, A, 1)


def _identities(L: int, A: int) -> Dict[str, Tuple[QLaurent, QLaurent]]:
    """Left and right sides of every identity at ``(L, A)``; recurrences need ``L >= 1``."""
    ql = 1 - q(L)
    sides = {
        'trinom-symmetry-0': (T0(L, A), T0(L, -A)),
        'trinom-symmetry-1': (T1(L, A), q(A) * T1(L, -A)),
        'trinom-tautology-shift': (T1(L, A), T0(L, A) + q(A) * ql * T0(L - 1, A + 1)),
        'trinom-tautology-difference': (T0(L, A) - q(L - A) * T1(L, A), T0(L, A + 1) - q(L) * T1(L, A + 1)),
        'trinom-tautology-mixed': (
            T0(L, A),
            q(L) * T1(L, A) + ql * T0(L - 1, A - 1) + q(L - 1) * ql * T1(L - 1, A),
        ),
        'trinom-tautology-reflected': (
            T1(L, A + 1) - q(1 - A) * T1(L, A - 1),
            q(A + 1) * T0(L, A + 1) - q(1 - A) * T0(L, A - 1),
        ),
        'trinom-tautology-lowered': (
            T0(L, A - 1),
            q(L + 1 - A) * T1(L, A - 1) + ql * T0(L - 1, A - 1) + q(L - 1) * ql * T1(L - 1, A),
        ),
        'trinom-tautology-raised': (
            T0(L, A + 1),
            q(L) * T1(L, A + 1) + ql * T0(L - 1, A + 1) + q(L - 1 - A) * ql * T1(L - 1, A),
        ),
    }
    if L >= 1:
        step = q(L - 1) - ONE
        sides.update({
            'trinom-pascal-0': (
                T0(L, A), T0(L - 1, A + 1) + q(L - 1 - A) * T1(L - 1, A) + q(L - A) * T0(L - 1, A - 1),
            ),
            'trinom-pascal-1': (
                T1(L, A), T0(L - 1, A - 1) + q(L - 1) * T1(L - 1, A) + q(A) * T0(L - 1, A + 1),
            ),
            'trinom-pascal-twin': (
                T0(L, A), T0(L - 1, A - 1) + q(L - 1) * T1(L - 1, A) + q(L + A) * T0(L - 1, A + 1),
            ),
            'trinom-mixed-0': (
                T0(L, A),
                q(L - A) * T1(L - 1, A - 1) + T0(L - 1, A) + q(L - 1) * T1(L - 1, A + 1)
                + q(L - 1) * step * T0(L - 2, A),
            ),
            'trinom-mixed-1': (
                T1(L, A),
                (T0(L - 1, A - 1) + step * T0(L - 2, A - 1)) + T1(L - 1, A)
                + q(A) * (T0(L - 1, A + 1) + step * T0(L - 2, A + 1)) + q(L - 2) * step * T1(L - 2, A),
            ),
        })
        for n in SUPERSCRIPTS:
            sides[f'trinom-depth-two-n{n}'] = (
                _T(L, A, n),
                q(L - A) * _T(L - 1, A - 1, n) + q(L + A - n) * _T(L - 1, A + 1, n) + _T(L - 1, A, n)
                + q(L - 1 - n) * (1 - q(L - 1)) * _T(L - 2, A, n),
            )
    return sides


def verify_trinomial_properties(L_max: int) -> VerifyReport:
    """
    Symmetries, recurrences and tautologies of the q-trinomials for
    ``0 <= L <= L_max`` and ``-L-1 <= A <= L+1``, plus the value at ``q = 1``.
    """
    report = VerifyReport('trinomial-properties')
    for L in range(0, L_max + 1):
        for A in range(-L - 1, L + 2):
            params = {'L': L, 'A': A}
            for label, (lhs, rhs) in _identities(L, A).items():
                report.check(label, params, lhs, rhs)
            for n in SUPERSCRIPTS:
                report.assert_true('trinom-classical', dict(params, n=n),
                                   qtrinom(L, A, n).eval_at_one() == trinomial_coefficient(L, A))
    logger.info("trinomial properties up to L=%d: %s", L_max, report.totals())
    return report


def verify_trinomial_limits(cutoff: int) -> VerifyReport:
    """
    Trinomials and binomials against their large-L limits; a trinomial with
    ``L >= 2N + |A| + 2`` is exact through ``q^N``.
    """
    report = VerifyReport('trinomial-properties')
    N = cutoff // QUARTER
    for A in range(0, 4):
        L = 2 * N + A + 2
        for n in (0, 1):
            report.check(f'trinom-limit-n{n}', {'L': L, 'A': A, 'n': n},
                         QSeries(qtrinom(L, A, n), cutoff), trinom_limit(A, n, cutoff))
    for k in range(0, 4):
        L = N + k + 1
        report.check('binom-limit', {'L': L, 'm': k}, QSeries(qbinom(L - k, k), cutoff),
                     inverse_pochhammer(k, cutoff))
    return report


def verify_binomial_recurrences(n_min: int, n_max: int, m_max: int) -> VerifyReport:
    """
    Both Pascal recurrences of the standard binomial for ``n, m >= 0`` apart from
    ``n = m = 0``, of the modified binomial for every ``n`` in range, and the
    closed form of the modified binomial on the square ``[n_min, n_max]^2``.
    """
    report = VerifyReport('binomial-recurrences')
    for n in range(n_min, n_max + 1):
        for m in range(0, m_max + 1):
            params = {'n': n, 'm': m}
            for name, binom in (('standard', qbinom), ('modified', qbinom_modified)):
                if name == 'standard' and (n < 0 or n == m == 0):
                    continue
                report.check(f'binom-{name}-pascal-low', params, binom(n, m),
                             binom(n, m - 1) + q(m) * binom(n - 1, m))
                report.check(f'binom-{name}-pascal-high', params, binom(n, m),
                             q(n) * binom(n, m - 1) + binom(n - 1, m))
    for n in range(n_min, n_max + 1):
        for m in range(n_min, n_max + 1):
            report.check('binom-modified-closed-form', {'n': n, 'm': m},
                         qbinom_modified(n, m), qbinom_modified_closed_form(n, m))
    return report
