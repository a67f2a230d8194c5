# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Fermionic polynomials ``F^{p,i}_{a,b}(L)``, their modified variants and the
recurrences that link neighbouring ``b``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..algebra.gauss import qbinom, qbinom_modified
from ..algebra.laurent import ONE, QUARTER, ZERO, QLaurent, q, to_quarters
from ..utils.report import VerifyReport
from .nmsystem import (
    FermionicSystem,
    Mode,
    ModelParams,
    NMSolution,
    ParameterError,
    build_params,
    check_consequences,
    enumerate_solutions,
    kronecker,
    negative_n0_solution,
    theta,
)

from typing import Callable, Sequence

__all__ = [
    'FermPoly', 'phi', 'phi_prefactor', 'phi_tilde_prefactor', 'upper_branch', 'solution_weight',
    'fermi', 'fermi_value', 'fermi_family', 'recurrence_rhs', 'verify_even_recurrences',
    'verify_odd_recurrences', 'replay_fermionic', 'verify_modified_relation', 'chu_vandermonde_sum',
    'chu_vandermonde_closed_form', 'verify_appendix',
]

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

FamilyValue = Callable[[int, int], QLaurent]


@dataclass(frozen=True)
class FermPoly:
    params: ModelParams
    value: QLaurent
    variant: Mode = Mode.STANDARD


def phi(m: Sequence[int], system: FermionicSystem) -> int:
    """
    The quadratic form ``m C m / 4 - A m / 2`` in quarter units.

    Args:
        m (sequence of int): vector of length ``p - 1``.
        system (FermionicSystem): supplies ``C`` and ``A``.
    """
    vec = np.asarray(m, dtype=np.int64)
    if vec.shape != (system.params.p - 1,):
        raise ValueError(f"m must have length {system.params.p - 1}, got {len(vec)}")
    quadratic = int(vec @ system.matrices.C_tilde @ vec)
    linear = int(np.dot(system.vectors.A, vec))
    return quadratic - 2 * linear


def phi_prefactor(a: int, b: int) -> int:
    """Exponent ``(b-a)(b-a+1)/4`` in quarter units."""
    return (b - a) * (b - a + 1)


def phi_tilde_prefactor(a: int, b: int) -> int:
    """Exponent ``(b-a)(b-a+3)/4`` in quarter units."""
    return (b - a) * (b - a + 3)


def upper_branch(a: int, b: int, i: int) -> bool:
    """
    Selects which of the two forms an identity or recurrence takes.

    For ``i = 0`` the test is ``a + delta(a,1) + b + delta(b,1)`` even; for the
    odd family the ``delta(a,1)`` shift is replaced by ``i = 1``.
    """
    shift_a = kronecker(a, 1) if i == 0 else 0
    return (a + shift_a + b + kronecker(b, 1) + i) % 2 == 0


def solution_weight(sol: NMSolution, system: FermionicSystem, mode: Mode = Mode.STANDARD) -> QLaurent:
    """``q^Phi(m)`` times the product of binomials attached to one solution."""
    binom = qbinom_modified if Mode(mode) is Mode.MODIFIED else qbinom
    weight = ONE
    for n_j, m_j in zip(sol.n, sol.m):
        weight = weight * binom(n_j, m_j)
        if not weight:
            return ZERO
    return weight.shift(phi(sol.m, system))


@lru_cache(maxsize=4096)
def _fermi_cached(p: int, a: int, b: int, i: int, L: int, mode: Mode) -> QLaurent:
    system = build_params(p, a, b, i, L)
    total = ZERO
    for sol in enumerate_solutions(system, mode):
        total = total + solution_weight(sol, system, mode)
    # exponents stay above -pL
    assert not total or total.min_exp >= -QUARTER * p * L, f"runaway exponent in F for {system.params}"
    return total


def fermi_value(p: int, a: int, b: int, i: int, L: int, variant: Mode = Mode.STANDARD) -> QLaurent:
    ModelParams(p, a, b, i, L)
    return _fermi_cached(p, a, b, i, L, Mode(variant))


def fermi(params: ModelParams, variant: Mode = Mode.STANDARD) -> FermPoly:
    """
    The fermionic polynomial for ``params``.

    The modified variant admits ``n_0 < 0`` and uses the modified binomial, so it
    differs from the standard sum only at ``L = 0``.
    """
    variant = Mode(variant)
    value = _fermi_cached(params.p, params.a, params.b, params.i, params.L, variant)
    return FermPoly(params, value, variant)


def fermi_family(p: int, a: int, b: int, i: int, L: int) -> QLaurent:
    """
    The member ``b`` of the family closed under the fermionic recurrences.

    ``i = 0``: ``F^{p,0}_{a,b}``. ``i = 1``: the modified ``F^{p,1}_{p-a,b}``,
    which for ``a = 1`` is ``F^{p,0}_{1,b}``. Vanishes for ``b = p`` and ``L < 0``.
    """
    if L < 0 or b == p:
        return ZERO
    if i == 0 or a == 1:
        return fermi_value(p, a, b, 0, L)
    return fermi_value(p, p - a, b, 1, L, Mode.MODIFIED)


def recurrence_rhs(p: int, a: int, i: int, b: int, L: int, value: FamilyValue) -> QLaurent:
    """
    Right side of the recurrence expressing member ``b`` at ``L`` through
    ``L - 1`` and ``L - 2``.

    Args:
        value (callable): ``value(b, L)`` returning the family member, zero for
            ``b = p`` or ``L < 0``.
    """
    upper = upper_branch(a, b, i)
    step = q(L - 1) - ONE
    if b == 1:
        return value(1, L - 1) + q(L - HALF if upper else L - 1) * value(2, L - 1)
    if b == 2:
        if upper:
            return q(L - 1) * value(3, L - 1) + q(L - HALF) * value(1, L - 1) + value(2, L - 1)
        return q(-HALF) * value(3, L - 1) + value(1, L - 1) + q(L - 1) * value(2, L - 1)
    if upper:
        return (
            q(L - 1) * value(b + 1, L - 1)
            + q(L - HALF) * value(b - 1, L - 1)
            + value(b, L - 1)
            + q(L - 1) * step * value(b, L - 2)
        )
    return (
        q(-HALF) * (value(b + 1, L - 1) + step * value(b + 1, L - 2))
        + (value(b - 1, L - 1) + step * value(b - 1, L - 2))
        + (value(b, L - 1) + q(L - 2) * step * value(b, L - 2))
    )


def _recurrence_label(i: int, b: int, upper: bool) -> str:
    row = 'b1' if b == 1 else 'b2' if b == 2 else 'bulk'
    return f"fermi{i}-{row}-{'upper' if upper else 'lower'}"


def _verify_recurrences(p: int, a: int, i: int, L_max: int, suite: str) -> VerifyReport:
    report = VerifyReport(suite)

    def value(b: int, L: int) -> QLaurent:
        return fermi_family(p, a, b, i, L)

    for b in range(1, p):
        report.check(f"fermi{i}-initial", {'p': p, 'a': a, 'b': b, 'i': i, 'L': 0}, value(b, 0),
                     ONE if a == b else ZERO)
        for L in range(1, L_max + 1):
            label = _recurrence_label(i, b, upper_branch(a, b, i))
            report.check(label, {'p': p, 'a': a, 'b': b, 'i': i, 'L': L}, value(b, L),
                         recurrence_rhs(p, a, i, b, L, value))
    logger.debug("%s p=%d a=%d: %s", suite, p, a, report.totals())
    return report


def verify_even_recurrences(p: int, a: int, L_max: int) -> VerifyReport:
    """Check the recurrences of ``F^{p,0}_{a,b}`` for every ``b`` and ``1 <= L <= L_max``."""
    ModelParams(p, a, 1, 0, 0)
    return _verify_recurrences(p, a, 0, L_max, 'fermionic-recurrences')


def verify_odd_recurrences(p: int, a: int, L_max: int) -> VerifyReport:
    """
    Check the recurrences of the modified ``F^{p,1}_{p-a,b}`` for ``2 <= a <= p-2``,
    together with ``F^{p,1}_{p-a,1} = F^{p,0}_{p-a,p-1}``.
    """
    if not 2 <= a <= p - 2:
        raise ParameterError(f"a={a} violates 2 <= a <= p-2 = {p - 2}")
    report = _verify_recurrences(p, a, 1, L_max, 'fermionic-recurrences')
    for L in range(0, L_max + 1):
        report.check('fermi1-b1-definition', {'p': p, 'a': a, 'b': 1, 'i': 1, 'L': L},
                     fermi_value(p, p - a, 1, 1, L), fermi_value(p, p - a, p - 1, 0, L))
    return report


def replay_fermionic(p: int, a: int, i: int, L_max: int) -> VerifyReport:
    """
    Rebuild the family from its ``L = 0`` data ``delta(a, b)`` with the
    recurrences alone and compare with the direct sums.
    """
    table = {(b, 0): ONE if a == b else ZERO for b in range(1, p)}

    def value(b: int, L: int) -> QLaurent:
        if L < 0 or b == p:
            return ZERO
        return table[(b, L)]

    report = VerifyReport('fermionic-recurrences')
    for L in range(1, L_max + 1):
        for b in range(1, p):
            table[(b, L)] = recurrence_rhs(p, a, i, b, L, value)
        for b in range(1, p):
            report.check(f"fermi{i}-replay", {'p': p, 'a': a, 'b': b, 'i': i, 'L': L},
                         table[(b, L)], fermi_family(p, a, b, i, L))
    return report


def verify_modified_relation(p: int, L_max: int) -> VerifyReport:
    """
    Modified minus standard is ``delta(L,0) delta(a,p-b) theta(1<b<p-1)`` for
    ``i = 1`` and zero for ``i = 0``.
    """
    report = VerifyReport('appendix-a')
    for a in range(1, p - 1):
        for b in range(1, p):
            for i in (0, 1):
                for L in range(0, L_max + 1):
                    correction = i * kronecker(L, 0) * kronecker(a, p - b) * theta(1 < b < p - 1)
                    report.check(f"modified-i{i}", {'p': p, 'a': a, 'b': b, 'i': i, 'L': L},
                                 fermi_value(p, a, b, i, L, Mode.MODIFIED),
                                 fermi_value(p, a, b, i, L) + correction)
    return report


def chu_vandermonde_sum(L: int, C0: int, B: int) -> QLaurent:
    """
    The alternating sum over ``m_1`` left after fixing ``C_0 = m_0 + m_1``:

        sum_{m1} (-1)^m1 q^{m1(m1-1)/2 - L m1} [B + C0 - m1, B] [B + 1 + L, m1]
    """
    if min(L, C0, B) < 0:
        raise ValueError(f"L, C0 and B must be non-negative, got L={L}, C0={C0}, B={B}")
    total = ZERO
    for m1 in range(0, C0 + 1):
        term = qbinom(B, C0 - m1) * qbinom(B + 1 + L - m1, m1)
        sign = -1 if m1 % 2 else 1
        total = total + term.shift(to_quarters(m1 * (m1 - 1) // 2 - L * m1)) * sign
    return total


def chu_vandermonde_closed_form(L: int, C0: int) -> QLaurent:
    """``(-1)^C0 q^{C0(C0-1)/2 - C0 L} [L, C0]``; zero for ``C0 > L``."""
    sign = -1 if C0 % 2 else 1
    return qbinom(C0, L - C0).shift(to_quarters(C0 * (C0 - 1) // 2 - C0 * L)) * sign


def verify_appendix(ps: Sequence[int], L_max: int) -> VerifyReport:
    """
    The closed form of the ``m_1`` sum, its independence of ``B``, the special
    ``L = 0`` solution of the modified system and the modified/standard relation.
    """
    report = VerifyReport('appendix-a')
    for L in range(0, L_max + 1):
        for C0 in range(0, L_max + 1):
            closed = chu_vandermonde_closed_form(L, C0)
            if C0 > L:
                report.check('vandermonde-vanishing', {'L': L, 'C0': C0}, closed, ZERO)
            for B in range(0, L_max + 1):
                report.check('vandermonde-closed-form', {'L': L, 'C0': C0, 'B': B},
                             chu_vandermonde_sum(L, C0, B), closed)

    for p in ps:
        for b in range(2, p - 1):
            system = build_params(p, p - b, b, 1, 0)
            special = negative_n0_solution(p, b)
            solutions = enumerate_solutions(system, Mode.MODIFIED)
            params = {'p': p, 'a': p - b, 'b': b, 'i': 1, 'L': 0}
            report.assert_true('negative-n0-solution-enumerated', params, special in solutions)
            report.assert_true('negative-n0-solution-consequences', params, check_consequences(special, system))
            report.check('negative-n0-solution-weight', params, solution_weight(special, system, Mode.MODIFIED), ONE)
        report.extend(verify_modified_relation(p, min(L_max, 3)))
    return report
