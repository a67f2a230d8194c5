# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Bosonic alternating sums of q-trinomials.

Three kinds share one evaluator: ``B`` with superscript-0 trinomials, and
``B~`` and ``B'`` with superscript-1 trinomials. Each is a difference of two
j-sums whose trinomial arguments ``2pj + a -/+ b`` leave the support
``|A| <= L`` for large ``|j|``.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from ..algebra.gauss import qtrinom
from ..algebra.laurent import ONE, ZERO, QLaurent, q, to_quarters
from ..utils.report import VerifyReport
from .nmsystem import ParameterError

from typing import Callable, Iterator, Optional, Tuple

__all__ = [
    'BosonKind', 'BosPoly', 'bose', 'bose_value', 'bose_j_bound', 'bose_terms', 'bosonic_rhs',
    'verify_bosonic_recurrences', 'verify_bosonic_relations', 'replay_bosonic',
]

logger = logging.getLogger(__name__)


class BosonKind(str, Enum):
    B = 'B'
    BTILDE = 'Btilde'
    BPRIME = 'Bprime'


@dataclass(frozen=True)
class BosPoly:
    kind: BosonKind
    p: int
    a: int
    b: int
    s: Optional[int]
    L: int
    value: QLaurent


def _exponents(kind: BosonKind, p: int, a: int, b: int, s: int, j: int) -> Tuple[int, int]:
    # exponents of the positive and negative term, in q units
    pp = p + 1
    if kind is BosonKind.B:
        return p * pp * j * j + j * (pp * a - p * s), (p * j + a) * (pp * j + s)
    if kind is BosonKind.BTILDE:
        first = p * pp * j * j + j * (pp * a - p * s)
        second = p * pp * j * j + j * (pp * a + p * (s - 2)) + a * (s - 1) - b
        return first, second
    first = p * pp * j * j + j * (pp * a - p * (b + 1))
    second = p * pp * j * j + j * (pp * a + p * (b - 1)) + b * (a - 1)
    return first, second


def bose_j_bound(p: int, a: int, b: int, L: int) -> int:
    """Every ``j`` with a trinomial argument ``2pj + a -/+ b`` in ``[-L, L]`` has ``|j| <=`` this."""
    return (L + abs(a) + abs(b)) // (2 * p) + 1


def _in_support(p: int, a: int, b: int, L: int, j: int) -> bool:
    return abs(2 * p * j + a - b) <= L or abs(2 * p * j + a + b) <= L


def bose_terms(kind: BosonKind, p: int, a: int, b: int, s: int, L: int) -> Iterator[Tuple[int, QLaurent]]:
    """
    Yield ``(j, term)`` for every ``j`` in ``[-J, J]``, ``J = bose_j_bound(p, a, b, L)``,
    whose trinomials can be nonzero.

    Raises:
        RuntimeError: a trinomial argument at ``j = +/-(J+1)`` lies inside ``[-L, L]``.
    """
    bound = bose_j_bound(p, a, b, L)
    for j in (-bound - 1, bound + 1):
        if _in_support(p, a, b, L, j):
            raise RuntimeError(f"j={j} lies outside the range |j| <= {bound} but has a nonzero trinomial")
    superscript = 0 if kind is BosonKind.B else 1
    for j in range(-bound, bound + 1):
        if not _in_support(p, a, b, L, j):
            continue
        first, second = _exponents(kind, p, a, b, s, j)
        term = (
            qtrinom(L, 2 * p * j + a - b, superscript).shift(to_quarters(first))
            - qtrinom(L, 2 * p * j + a + b, superscript).shift(to_quarters(second))
        )
        yield j, term


@lru_cache(maxsize=8192)
def bose_value(kind: BosonKind, p: int, a: int, b: int, s: int, L: int) -> QLaurent:
    """
    Value of ``B^p_{a,b}(L, s)``, ``B~^p_{a,b}(L, s)`` or ``B'^p_{a,b}(L)``.

    Args:
        kind (BosonKind): which sum.
        p (int): ``p >= 4``; the companion index is ``p + 1``.
        a, b (int): labels, any integers.
        s (int): ignored for ``B'``.
        L (int): ``L >= 0``.
    """
    kind = BosonKind(kind)
    if p < 4:
        raise ParameterError(f"p={p} violates p >= 4")
    if L < 0:
        raise ParameterError(f"L={L} violates L >= 0")
    total = ZERO
    for _, term in bose_terms(kind, p, a, b, s, L):
        total = total + term
    return total


def bose(kind: BosonKind, p: int, a: int, b: int, s: Optional[int], L: int) -> BosPoly:
    kind = BosonKind(kind)
    if kind is not BosonKind.BPRIME and s is None:
        raise ParameterError(f"{kind.value} needs s")
    s_value = 0 if s is None else s
    return BosPoly(kind, p, a, b, s, L, bose_value(kind, p, a, b, s_value, L))


# the three chains linked by the recurrences: Z = B_{a,1}(L,1), X_b = B_{a,b}(L,b+1), Y_b = B~_{a,b}(L,b+2)
ChainValue = Callable[[str, int, int], QLaurent]


def _direct_chain(p: int, a: int) -> ChainValue:
    def value(chain: str, b: int, L: int) -> QLaurent:
        if L < 0:
            return ZERO
        if chain == 'Z':
            return bose_value(BosonKind.B, p, a, 1, 1, L)
        if chain == 'X':
            return bose_value(BosonKind.B, p, a, b, b + 1, L)
        return bose_value(BosonKind.BTILDE, p, a, b, b + 2, L)
    return value


def bosonic_rhs(p: int, a: int, chain: str, b: int, L: int, value: ChainValue) -> QLaurent:
    """
    Right side of the recurrence for chain member ``(chain, b)`` at ``L``.

    Args:
        chain (str): ``'Z'``, ``'X'`` or ``'Y'``.
        value (callable): ``value(chain, b, L)``, zero for ``L < 0``.
    """
    step = q(L - 1) - ONE
    if chain == 'Z':
        return value('Z', 1, L - 1) + q(L + 1 - a) * value('X', 2, L - 1)
    if chain == 'X' and b == 1:
        return value('X', 1, L - 1) + q(L + 1 - a) * value('Y', 2, L - 1)
    if chain == 'X' and b == 2:
        return (
            value('X', 2, L - 1)
            + q(L + a - 2) * value('Z', 1, L - 1)
            + q(L - a + 2) * value('Y', 3, L - 1)
        )
    if chain == 'Y' and b == 2:
        return q(L - 1) * value('Y', 2, L - 1) + q(a - 2) * value('X', 1, L - 1) + value('X', 3, L - 1)
    if chain == 'X':
        return (
            value('X', b, L - 1)
            + q(L - 1) * step * value('X', b, L - 2)
            + q(L - a + b) * value('Y', b + 1, L - 1)
            + q(L - 1) * value('Y', b - 1, L - 1)
        )
    return (
        value('X', b + 1, L - 1) + step * value('X', b + 1, L - 2)
        + q(a - b) * (value('X', b - 1, L - 1) + step * value('X', b - 1, L - 2))
        + value('Y', b, L - 1) + q(L - 2) * step * value('Y', b, L - 2)
    )


def _chain_members(p: int):
    yield 'Z', 1, 'bose-b1-s1'
    yield 'X', 1, 'bose-b1-s2'
    yield 'X', 2, 'bose-b2'
    yield 'Y', 2, 'bose-tilde-b2'
    for b in range(3, p):
        yield 'X', b, 'bose-bulk'
        yield 'Y', b, 'bose-tilde-bulk'


def verify_bosonic_recurrences(p: int, a: int, L_max: int) -> VerifyReport:
    """Every bosonic recurrence for ``1 <= L <= L_max`` and all ``b``."""
    if not 1 <= a <= p - 2:
        raise ParameterError(f"a={a} violates 1 <= a <= p-2 = {p - 2}")
    report = VerifyReport('bosonic-recurrences')
    value = _direct_chain(p, a)
    for L in range(1, L_max + 1):
        for chain, b, label in _chain_members(p):
            report.check(label, {'p': p, 'a': a, 'b': b, 'L': L}, value(chain, b, L),
                         bosonic_rhs(p, a, chain, b, L, value))
    logger.debug("bosonic recurrences p=%d a=%d: %s", p, a, report.totals())
    return report


def replay_bosonic(p: int, a: int, L_max: int) -> VerifyReport:
    """
    Iterate the recurrences from the ``L = 0`` data ``delta(a, b)`` and compare
    each step with direct evaluation.
    """
    table = {('Z', 1, 0): ONE if a == 1 else ZERO}
    for b in range(1, p):
        table[('X', b, 0)] = ONE if a == b else ZERO
        table[('Y', b, 0)] = ONE if a == b else ZERO

    def value(chain: str, b: int, L: int) -> QLaurent:
        if L < 0 or b == p:
            return ZERO
        return table[(chain, b, L)]

    direct = _direct_chain(p, a)
    report = VerifyReport('bosonic-recurrences')
    for L in range(1, L_max + 1):
        members = list(_chain_members(p))
        for chain, b, _ in members:
            table[(chain, b, L)] = bosonic_rhs(p, a, chain, b, L, value)
        for chain, b, _ in members:
            report.check(f"bose-replay-{chain}", {'p': p, 'a': a, 'b': b, 'L': L},
                         table[(chain, b, L)], direct(chain, b, L))
    return report


def verify_bosonic_relations(p: int, L_max: int) -> VerifyReport:
    """Reflections, duality, closings, the ``s = 2`` coincidence and the ``L = 0`` values."""
    report = VerifyReport('bosonic-relations')
    B, BT, BP = BosonKind.B, BosonKind.BTILDE, BosonKind.BPRIME
    for L in range(0, L_max + 1):
        for a in range(1, p - 1):
            params = {'p': p, 'a': a, 'L': L}
            report.check('bose-reflection', params,
                         bose_value(B, p, a, p - 1, p, L), bose_value(B, p, p - a, 1, 1, L))
            report.check('bose-tilde-reflection', params,
                         bose_value(BT, p, a, p - 1, p + 1, L),
                         bose_value(B, p, p - a, 1, 2, L).shift(to_quarters(a - p + 1)))
            report.check('bose-closing', params, bose_value(B, p, a, p, p + 1, L), ZERO)
            report.check('bose-tilde-closing', params, bose_value(BT, p, a, p, p + 2, L), ZERO)
            report.check('bose-s2-coincidence', params,
                         bose_value(B, p, a, 1, 2, L), bose_value(BT, p, a, 1, 2, L))
            for b in range(1, p):
                params = {'p': p, 'a': a, 'b': b, 'L': L}
                report.check('bose-duality', params,
                             bose_value(B, p, p - a, p - b, p - b + 1, L), bose_value(B, p, a, b, b, L))
                report.check('bose-prime-duality', params,
                             bose_value(BT, p, p - a, p - b, p - b + 2, L),
                             bose_value(BP, p, a, b, 0, L).shift(to_quarters(b - a)))
                if L == 0:
                    delta = ONE if a == b else ZERO
                    report.check('bose-initial', params, bose_value(B, p, a, b, b + 1, 0), delta)
                    report.check('bose-tilde-initial', params, bose_value(BT, p, a, b, b + 2, 0), delta)
                    report.check('bose-prime-initial', params, bose_value(BP, p, a, b, 0, 0), delta)
    return report
