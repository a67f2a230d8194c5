# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Gaussian binomials, their modified extension to negative upper arguments,
and q-trinomial coefficients.
"""
import logging
from functools import lru_cache

from .laurent import INFINITY, ONE, ZERO, QLaurent, QSeries, inverse_pochhammer, pochhammer_poly, q, to_quarters

from typing import NamedTuple

__all__ = [
    'BinomArgs', 'TrinomArgs', 'qbinom', 'qbinom_modified', 'qbinom_modified_closed_form',
    'qtrinom', 'trinom_limit',
]

logger = logging.getLogger(__name__)


class BinomArgs(NamedTuple):
    n: int
    m: int


class TrinomArgs(NamedTuple):
    L: int
    A: int
    n: int


@lru_cache(maxsize=None)
def _rising_product(start: int, m: int) -> QLaurent:
    # (1 - q^start)(1 - q^(start+1))...(1 - q^(start+m-1))
    product = ONE
    for k in range(start, start + m):
        product = product * (ONE - q(k))
    return product


@lru_cache(maxsize=8192)
def qbinom(n: int, m: int) -> QLaurent:
    """
    The Gaussian binomial ``[n+m, n]_q``, zero unless both arguments are non-negative.

    Args:
        n (int): first lower index.
        m (int): second lower index.
    """
    if n < 0 or m < 0:
        return ZERO
    if n < m:
        n, m = m, n
    return _rising_product(n + 1, m).exact_div(pochhammer_poly(m))


@lru_cache(maxsize=8192)
def qbinom_modified(n: int, m: int) -> QLaurent:
    """
    ``(q^(n+1))_m / (q)_m`` for every integer ``n`` and ``m >= 0``, zero for ``m < 0``.

    Agrees with ``qbinom`` when ``n, m >= 0`` and satisfies both Pascal
    recurrences without exception.
    """
    if m < 0:
        return ZERO
    return _rising_product(n + 1, m).exact_div(pochhammer_poly(m))


def qbinom_modified_closed_form(n: int, m: int) -> QLaurent:
    """Three-branch expression of ``qbinom_modified`` through ordinary binomials."""
    if n >= 0 and m >= 0:
        return qbinom(n, m)
    if n + m < 0 and m >= 0:
        # (m + 1 + 2n) m / 2 is an integer for every integer n, m
        sign = -1 if m % 2 else 1
        return qbinom(-n - 1 - m, m).shift(to_quarters((m + 1 + 2 * n) * m // 2)) * sign
    return ZERO


@lru_cache(maxsize=16384)
def qtrinom(L: int, A: int, n: int) -> QLaurent:
    """
    The q-trinomial coefficient with superscript ``n``.

    Every term of the defining j-sum is ``(q)_L / ((q)_j (q)_(j+A) (q)_(L-2j-A))``,
    assembled as a product of two exactly divided Gaussian binomials.

    Args:
        L (int): degree, ``L >= 0``.
        A (int): the lower argument; the result vanishes for ``|A| > L``.
        n (int): superscript, any integer.
    """
    if L < 0:
        raise ValueError(f"qtrinom needs L >= 0, got L={L}")
    if abs(A) > L:
        return ZERO
    total = ZERO
    for j in range(max(0, -A), (L - A) // 2 + 1):
        # (q)_L / ((q)_j (q)_(L-j)) * (q)_(L-j) / ((q)_(j+A) (q)_(L-2j-A))
        term = qbinom(j, L - j) * qbinom(j + A, L - 2 * j - A)
        total = total + term.shift(to_quarters(j * (j + A - n)))
    return total


def trinom_limit(A: int, n: int, cutoff: int) -> QSeries:
    """
    Large-L limit of ``qtrinom(L, A, n)``: ``1/(q)_inf`` for ``n = 0`` and
    ``(1 + q^A)/(q)_inf`` for ``n = 1``, truncated at ``cutoff`` (quarter units).
    """
    if n == 0:
        return inverse_pochhammer(INFINITY, cutoff)
    if n == 1:
        numerator = ONE + q(A)
        # a negative power of q in the numerator needs extra precision
        margin = max(0, -to_quarters(A))
        return inverse_pochhammer(INFINITY, cutoff + margin) * numerator
    raise ValueError(f"trinom_limit is defined for n in (0, 1), got n={n}")
