# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Large-L limits: Virasoro characters of the ``(p, p+1)`` minimal models, the
limits of the fermionic and bosonic polynomials, and the identities between them.

Cutoffs are inclusive and counted in quarter units, like every exponent.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..algebra.gauss import qbinom
from ..algebra.laurent import INFINITY, QUARTER, ZERO, QLaurent, QSeries, inverse_pochhammer, to_quarters
from ..utils.report import VerifyReport
from .bosonic import BosonKind, bose_value
from .fermionic import fermi_value, phi, phi_prefactor, phi_tilde_prefactor, upper_branch
from .nmsystem import (
    Mode,
    ModelParams,
    ParameterError,
    build_matrices,
    build_params,
    enumerate_solutions,
    kronecker,
    theta,
)

from typing import Callable, Optional, Tuple

__all__ = [
    'StabilizationError', 'CharSeries', 'chi', 'fermi_limit', 'fermi_truncated', 'bose_limit', 'stabilization_start',
    'phi13_character', 'summed_out_character', 'identity_branch', 'verify_finitized',
    'verify_character_identities', 'verify_bosonic_limits',
]

logger = logging.getLogger(__name__)

# identities are compared on characters computed this far above the requested cutoff
_CHI_MARGIN_Q = 2


class StabilizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class CharSeries:
    p: int
    r: int
    s: int
    cutoff: int
    value: QSeries


def _rocha_caridy(p: int, r: int, s: int, cutoff: int) -> QSeries:
    # alternating theta sum over 1/(q)_inf; s = p + 1 gives zero
    pp = p + 1
    limit = cutoff / QUARTER
    numerator = {}
    for direction in (1, -1):
        j = 0 if direction == 1 else -1
        while True:
            first = p * pp * j * j + j * (pp * r - p * s)
            second = (p * j + r) * (pp * j + s)
            if j != 0 and first > limit and second > limit:
                break
            for exp, sign in ((first, 1), (second, -1)):
                if exp <= limit:
                    key = to_quarters(exp)
                    numerator[key] = numerator.get(key, 0) + sign
            j += direction
    return QSeries(QLaurent(numerator), cutoff) * inverse_pochhammer(INFINITY, cutoff)


def chi(p: int, r: int, s: int, cutoff: int) -> CharSeries:
    """
    The character with labels ``(r, s)`` truncated at ``cutoff``.

    Args:
        p (int): ``p >= 3``; the second model index is ``p + 1``.
        r (int): ``1 <= r <= p-1``.
        s (int): ``1 <= s <= p``.
        cutoff (int): inclusive, quarter units.
    """
    if p < 3:
        raise ParameterError(f"p={p} violates p >= 3")
    if not 1 <= r <= p - 1:
        raise ParameterError(f"r={r} violates 1 <= r <= p-1 = {p - 1}")
    if not 1 <= s <= p:
        raise ParameterError(f"s={s} violates 1 <= s <= p = {p}")
    return CharSeries(p, r, s, cutoff, _rocha_caridy(p, r, s, cutoff))


def _box_bound(form: np.ndarray, linear: np.ndarray, cutoff: int) -> int:
    # form m.F.m - linear.m >= lam |m|^2 - |linear| |m|, which must stay <= cutoff
    lam = float(np.linalg.eigvalsh((form + form.T) / 2.0).min())
    norm = float(np.linalg.norm(linear))
    return int(math.floor((norm + math.sqrt(norm * norm + 4.0 * lam * max(cutoff, 0))) / (2.0 * lam)))


def _lattice_sum(
    form: np.ndarray,
    linear: np.ndarray,
    incidence: np.ndarray,
    shift: np.ndarray,
    parity: int,
    cutoff: int,
    constrain_first: bool,
) -> QSeries:
    """
    Sum over ``m >= 0`` with ``m[-1] = parity (mod 2)`` of

        q^{(m.F.m - linear.m)/4} / (q)_{m[0]} * prod_{j >= 1} [top_j, m_j],
        top = (incidence.m + shift) / 2,

    restricted to even ``incidence.m + shift`` (row 0 only if ``constrain_first``).
    """
    size = form.shape[0]
    bound = _box_bound(form, linear, cutoff)
    rest = np.indices((bound + 1,) * (size - 1)).reshape(size - 1, -1).T
    rest = rest[np.sum(rest * rest, axis=1) <= bound * bound]
    total = QSeries(ZERO, cutoff)
    hits = 0
    for m0 in range(bound + 1):
        m = np.column_stack([np.full(len(rest), m0, dtype=np.int64), rest])
        exps = np.einsum('ij,jk,ik->i', m, form, m) - m @ linear
        twice_top = m @ incidence.T + shift
        rows = twice_top if constrain_first else twice_top[:, 1:]
        keep = (
            (exps <= cutoff)
            & (m[:, -1] % 2 == parity)
            & np.all(rows % 2 == 0, axis=1)
            & np.all(twice_top[:, 1:] // 2 - m[:, 1:] >= 0, axis=1)
        )
        for vec, exp, top in zip(m[keep], exps[keep], twice_top[keep] // 2):
            exp = int(exp)
            term = inverse_pochhammer(int(vec[0]), cutoff - exp)
            for j in range(1, size):
                term = term * qbinom(int(top[j] - vec[j]), int(vec[j]))
            total = total + term.shift(exp)
            hits += 1
    logger.debug("lattice sum of size %d, bound %d: %d terms", size, bound, hits)
    return total


def _fermi_direct(p: int, i: int, a: int, b: int, cutoff: int) -> QSeries:
    system = build_params(p, a, b, i, 0)
    return _lattice_sum(
        form=np.asarray(system.matrices.C_tilde, dtype=np.int64),
        linear=2 * np.asarray(system.vectors.A, dtype=np.int64),
        incidence=np.asarray(system.matrices.I_tilde, dtype=np.int64),
        shift=np.asarray(system.vectors.u, dtype=np.int64),
        parity=system.parity,
        cutoff=cutoff,
        constrain_first=True,
    )


def fermi_truncated(p: int, a: int, b: int, i: int, L: int, cutoff: int) -> QSeries:
    """``F^{p,i}_{a,b}(L)`` known up to ``cutoff``, skipping terms that start above it."""
    system = build_params(p, a, b, i, L)
    total = QSeries(ZERO, cutoff)
    for sol in enumerate_solutions(system, Mode.STANDARD):
        exp = phi(sol.m, system)
        if exp > cutoff:
            continue
        term = QSeries(QLaurent.monomial(0), cutoff - exp)
        for n_j, m_j in zip(sol.n, sol.m):
            term = term * qbinom(n_j, m_j)
        total = total + term.shift(exp)
    return total


def _stabilize(value: Callable[[int], QSeries], L_start: int, L_cap: int, what: str) -> QSeries:
    # accepted once three consecutive L from L_start on give the same truncation
    previous, unchanged = None, 0
    for L in range(L_start, L_cap + 1):
        current = value(L)
        unchanged = unchanged + 1 if current == previous else 0
        if unchanged == 2:
            logger.debug("%s stabilized at L=%d", what, L)
            return current
        previous = current
    raise StabilizationError(f"{what} did not stabilize for {L_start} <= L <= {L_cap}")


def stabilization_start(p: int, cutoff: int, kind: Optional[BosonKind] = None) -> int:
    """
    First L at which stabilization may start.

    Below it a truncation can sit on a plateau that is not the limit, such as the
    zero polynomials of small L. Fermionic sums start past ``p`` and past the
    cutoff, where ``[n_0 + m_0, m_0]`` with ``n_0`` near L is exact through it.
    Bosonic sums (``kind`` given) start where every central trinomial
    ``T(L, A)``, ``|A| <= 2p``, is exact through the cutoff.
    """
    if kind is None:
        return max(cutoff // (2 * QUARTER) + p, cutoff // QUARTER + 1)
    return cutoff // QUARTER + 2 * p


def fermi_limit(p: int, i: int, a: int, b: int, cutoff: int, method: str = 'stabilize',
                L_cap: Optional[int] = None) -> QSeries:
    """
    The large-L limit of ``F^{p,i}_{a,b}(L)`` truncated at ``cutoff``.

    Args:
        method (str): ``'stabilize'`` evaluates the polynomials for growing L from
            ``stabilization_start`` on until the truncation is unchanged on two
            consecutive steps; ``'direct'`` sums the limiting series with
            ``1/(q)_{m_0}`` over a bounded box.
        L_cap (int): largest L tried by ``'stabilize'``.
    """
    ModelParams(p, a, b, i, 0)
    if method == 'direct':
        return _fermi_direct(p, i, a, b, cutoff)
    if method != 'stabilize':
        raise ValueError(f"unknown method {method!r}, expected 'stabilize' or 'direct'")
    L_start = stabilization_start(p, cutoff)
    L_cap = L_cap if L_cap is not None else L_start + cutoff // QUARTER + 2 * p + 4
    return _stabilize(lambda L: fermi_truncated(p, a, b, i, L, cutoff), L_start, L_cap,
                      f"F^({p},{i})_({a},{b})")


def bose_limit(kind: BosonKind, p: int, a: int, b: int, s: int, cutoff: int, L_cap: Optional[int] = None) -> QSeries:
    """Large-L limit of a bosonic sum by L-stabilization."""
    kind = BosonKind(kind)
    L_start = stabilization_start(p, cutoff, kind)
    L_cap = L_cap if L_cap is not None else L_start + cutoff // QUARTER + 2 * p + 4
    return _stabilize(lambda L: QSeries(bose_value(kind, p, a, b, s, L), cutoff), L_start, L_cap,
                      f"{kind.value}^{p}_({a},{b})(L,{s})")


def phi13_character(p: int, cutoff: int) -> QSeries:
    """
    The fermionic sum over ``m_1 .. m_(p-2)`` built on the ``A_(p-2)`` Cartan
    matrix with even ``m_(p-2)``; equals ``chi_(1,1)``.
    """
    matrices = build_matrices(p)
    rank = p - 2
    return _lattice_sum(
        form=np.asarray(matrices.C_cartan, dtype=np.int64),
        linear=np.zeros(rank, dtype=np.int64),
        incidence=np.asarray(matrices.I_cartanless, dtype=np.int64),
        shift=np.zeros(rank, dtype=np.int64),
        parity=0,
        cutoff=cutoff,
        constrain_first=False,
    )


def summed_out_character(p: int, a: int, b: int, cutoff: int) -> QSeries:
    """
    The Cartan-matrix sum with linear term ``(m_1 + m_b)/2`` and Gaussian tops
    shifted by ``(delta(a,j) + delta(b,j))/2``, for ``2 <= a, b <= p-2`` with
    ``a + b`` odd.
    """
    if not (2 <= a <= p - 2 and 2 <= b <= p - 2):
        raise ParameterError(f"a={a}, b={b} violate 2 <= a, b <= p-2 = {p - 2}")
    if (a + b) % 2 == 0:
        raise ParameterError(f"a + b = {a + b} must be odd")
    matrices = build_matrices(p)
    rank = p - 2
    linear = np.zeros(rank, dtype=np.int64)
    linear[0] += 2
    linear[b - 1] += 2
    shift = np.array([kronecker(a, j) + kronecker(b, j) for j in range(1, rank + 1)], dtype=np.int64)
    return _lattice_sum(
        form=np.asarray(matrices.C_cartan, dtype=np.int64),
        linear=linear,
        incidence=np.asarray(matrices.I_cartanless, dtype=np.int64),
        shift=shift,
        parity=0,
        cutoff=cutoff,
        constrain_first=False,
    )


def identity_branch(p: int, a: int, b: int, i: int) -> Tuple[str, int, str]:
    """
    The bosonic side of the polynomial identity for ``(a, b, i)``.

    Returns:
        (label, exponent, term): ``term`` is ``'B:s'`` for ``B_{a,b}(L, s)`` or
        ``'Btilde'`` for ``B~_{a,b}(L, b+2)``; ``exponent`` is the prefactor in
        quarter units.
    """
    upper = upper_branch(a, b, i)
    parity = 'even' if i == 0 else 'odd'
    branch = 'upper' if upper else 'lower'
    if b == 1:
        label = f"{parity}-b1-{branch}"
        if upper:
            return label, a * (a - 1), 'B:1'
        if i == 0:
            return label, (a - 1) * (a - 2), 'B:2'
        return label, phi_tilde_prefactor(p - a, p - 1) + QUARTER * (1 - a), 'B:2'
    label = f"{parity}-bulk-{branch}"
    if i == 0:
        return (label, phi_prefactor(a, b), f'B:{b + 1}') if upper else (label, phi_tilde_prefactor(a, b), 'Btilde')
    if upper:
        return label, phi_prefactor(p - a, p - 1) + phi_prefactor(a, b) - a * (a - 1), f'B:{b + 1}'
    return label, phi_tilde_prefactor(p - a, p - 1) + phi_tilde_prefactor(a, b) - (a - 1) * (a + 2), 'Btilde'


def _finitized_lhs(p: int, a: int, b: int, i: int, L: int) -> QLaurent:
    if i == 0:
        return fermi_value(p, a, b, 0, L)
    if a == 1:
        return fermi_value(p, 1, b, 0, L)
    correction = kronecker(L, 0) * kronecker(a, b) * theta(b >= 2)
    return fermi_value(p, p - a, b, 1, L) + correction


def verify_finitized(p: int, a: int, b: int, i: int, L_max: int) -> VerifyReport:
    """
    Fermionic polynomial against the shifted bosonic sum for ``0 <= L <= L_max``.

    The odd side uses ``F^{p,1}_{p-a,b} + delta(L,0) delta(a,b)`` (``b >= 2``),
    with ``F^{p,0}_{1,b}`` in place of ``F^{p,1}_{p-1,b}``.
    """
    ModelParams(p, a, b, i, 0)
    report = VerifyReport('even-identities' if i == 0 else 'odd-identities')
    label, exponent, term = identity_branch(p, a, b, i)
    for L in range(0, L_max + 1):
        if term == 'Btilde':
            boson = bose_value(BosonKind.BTILDE, p, a, b, b + 2, L)
        else:
            boson = bose_value(BosonKind.B, p, a, b, int(term.split(':')[1]), L)
        rhs = boson.shift(exponent)
        params = {'p': p, 'a': a, 'b': b, 'i': i, 'L': L}
        report.check(label, params, _finitized_lhs(p, a, b, i, L), rhs)
        report.assert_true('bose-nonnegative', params, all(c >= 0 for _, c in rhs.items()))
        if i == 1 and b == 1:
            # the same right side reached through the reflections
            if term == 'B:1':
                reflected = bose_value(BosonKind.B, p, p - a, p - 1, p, L)
            else:
                reflected = bose_value(BosonKind.BTILDE, p, p - a, p - 1, p + 1, L).shift(to_quarters(a - 1))
            report.check('odd-b1-reflected', params, rhs, reflected.shift(exponent))
    return report


def _limit_of(term: str, p: int, a: int, b: int, cutoff: int) -> QSeries:
    # B_{a,b}(L, s) -> chi_{a,s}; B~_{a,b}(L, b+2) -> chi_{a,b+2} + q^{a-b} chi_{a,b}
    if term == 'Btilde':
        base = _rocha_caridy(p, a, b, cutoff).shift(to_quarters(a - b))
        if b != p - 1:
            base = base + _rocha_caridy(p, a, b + 2, cutoff)
        return base
    return _rocha_caridy(p, a, int(term.split(':')[1]), cutoff)


def verify_bosonic_limits(p: int, cutoff: int) -> VerifyReport:
    """Bosonic sums against their character limits by L-stabilization."""
    report = VerifyReport('character-identities')
    for a in range(1, p - 1):
        for b in range(1, p):
            params = {'p': p, 'a': a, 'b': b}
            report.check('bose-limit', params, bose_limit(BosonKind.B, p, a, b, b + 1, cutoff),
                         _limit_of(f'B:{b + 1}', p, a, b, cutoff))
            report.check('bose-tilde-limit', params, bose_limit(BosonKind.BTILDE, p, a, b, b + 2, cutoff),
                         _limit_of('Btilde', p, a, b, cutoff))
    return report


def verify_character_identities(p: int, cutoff: int, path_cutoff: Optional[int] = None) -> VerifyReport:
    """
    Fermionic limits against characters for every ``(a, b, i)``, the summed-out
    sums, the Cartan-matrix sum for ``chi_(1,1)``, and the agreement of both
    ``fermi_limit`` paths up to ``path_cutoff``.
    """
    report = VerifyReport('character-identities')
    wide = cutoff + _CHI_MARGIN_Q * QUARTER * p
    path_cutoff = cutoff if path_cutoff is None else path_cutoff

    for i in (0, 1):
        for a in range(1 if i == 0 else 2, p - 1):
            for b in range(1, p):
                params = {'p': p, 'a': a, 'b': b, 'i': i}
                fer_a = a if i == 0 else p - a
                lhs = fermi_limit(p, i, fer_a, b, cutoff, method='direct')
                label, exponent, term = identity_branch(p, a, b, i)
                rhs = _limit_of(term, p, a, b, wide).shift(exponent).truncate(cutoff)
                report.check(f"char-{label}", params, lhs, rhs)
                if path_cutoff > 0:
                    report.check('fermi-limit-paths', params,
                                 fermi_limit(p, i, fer_a, b, path_cutoff, method='stabilize'),
                                 lhs.truncate(path_cutoff))

    for a in range(2, p - 1):
        for b in range(2, p - 1):
            if (a + b) % 2 == 1:
                rhs = (_rocha_caridy(p, a, b + 2, wide) + _rocha_caridy(p, a, b, wide).shift(to_quarters(a - b)))
                rhs = rhs.shift(phi_tilde_prefactor(a, b)).truncate(cutoff)
                report.check('char-summed-out', {'p': p, 'a': a, 'b': b},
                             summed_out_character(p, a, b, cutoff), rhs)

    report.check('char-cartan-sum', {'p': p}, phi13_character(p, cutoff), _rocha_caridy(p, 1, 1, cutoff))
    for r in range(1, p):
        for s in range(1, p + 1):
            series = _rocha_caridy(p, r, s, cutoff)
            params = {'p': p, 'a': r, 'b': s}
            report.assert_true('chi-leading-one', params, series.poly.min_exp == 0 and series.coeff(0) == 1)
            report.assert_true('chi-nonnegative', params, all(c >= 0 for _, c in series.items()))
            report.check('chi-symmetry', params, series, _rocha_caridy(p, p - r, p + 1 - s, cutoff))
    logger.info("character identities p=%d: %s", p, report.totals())
    return report
