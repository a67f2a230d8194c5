# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
The (n, m) constraint system behind the fermionic sums.

Vectors have length ``p - 1`` and are indexed ``0 .. p-2``. Half-integer
quantities such as ``u / 2`` and ``I m / 2`` are handled on the doubled
integer lattice.
"""
import json
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from ..utils.report import VerifyReport

from typing import Dict, List, Optional, Tuple

__all__ = [
    'ParameterError', 'Mode', 'ModelParams', 'FermMatrices', 'UAVectors', 'FermionicSystem', 'NMSolution',
    'kronecker', 'parity_indicator', 'theta', 'build_matrices', 'build_vectors', 'build_params',
    'modified_m2_cap', 'enumerate_solutions', 'brute_force_solutions', 'satisfies_system', 'check_consequences',
    'negative_n0_solution', 'dump_solutions', 'verify_nm_oracle',
]

logger = logging.getLogger(__name__)


class ParameterError(ValueError):
    """Raised when a parameter tuple leaves its admissible range."""


class Mode(str, Enum):
    STANDARD = 'standard'
    MODIFIED = 'modified'


def kronecker(a: int, b: int) -> int:
    return int(a == b)


def parity_indicator(x: int) -> int:
    """1 for odd ``x``, 0 for even ``x``."""
    return x % 2


def theta(statement: bool) -> int:
    return int(bool(statement))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


@dataclass(frozen=True)
class ModelParams:
    """
    Validated parameters ``(p, a, b, i, L)`` of a fermionic polynomial.

    Args:
        p (int): model index, ``p >= 4``.
        a (int): ``1 <= a <= p-2``.
        b (int): ``1 <= b <= p-1``.
        i (int): 0 or 1.
        L (int): degree, ``L >= 0``.
    """
    p: int
    a: int
    b: int
    i: int
    L: int

    def __post_init__(self):
        p, a, b, i, L = self.p, self.a, self.b, self.i, self.L
        _require(p >= 4, f"p={p} violates p >= 4")
        _require(1 <= a <= p - 2, f"a={a} violates 1 <= a <= p-2 = {p - 2}")
        _require(1 <= b <= p - 1, f"b={b} violates 1 <= b <= p-1 = {p - 1}")
        _require(i in (0, 1), f"i={i} violates i in (0, 1)")
        _require(L >= 0, f"L={L} violates L >= 0")

    def as_dict(self) -> Dict[str, int]:
        return {'p': self.p, 'a': self.a, 'b': self.b, 'i': self.i, 'L': self.L}


@dataclass(frozen=True)
class FermMatrices:
    I_tilde: np.ndarray
    C_tilde: np.ndarray
    I_cartanless: np.ndarray
    C_cartan: np.ndarray


@dataclass(frozen=True)
class UAVectors:
    # u and A are integral; the half of u entering the constraints is taken on the doubled lattice
    u: Tuple[int, ...]
    A: Tuple[int, ...]


@dataclass(frozen=True)
class FermionicSystem:
    params: ModelParams
    matrices: FermMatrices
    vectors: UAVectors

    @property
    def parity(self) -> int:
        """Required parity of ``m_(p-2)``; flipped when ``b = p-1``."""
        p, b, i = self.params.p, self.params.b, self.params.i
        return 1 - i if b == p - 1 else i


@dataclass(frozen=True)
class NMSolution:
    n: Tuple[int, ...]
    m: Tuple[int, ...]

    def to_json(self) -> Dict[str, List[int]]:
        return {'n': list(self.n), 'm': list(self.m)}


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=None)
def build_matrices(p: int) -> FermMatrices:
    """
    The ``(p-1) x (p-1)`` incidence matrix with its antisymmetric coupling
    between rows 0 and 2, its Cartan-like companion ``2 - I``, and the
    ``A_(p-2)`` incidence and Cartan matrices.
    """
    size = p - 1
    I_tilde = np.zeros((size, size), dtype=np.int64)
    for i in range(1, size):
        for j in range(1, size):
            I_tilde[i, j] = kronecker(i, j + 1) + kronecker(i, j - 1)
    I_tilde[0, 2] = -1
    I_tilde[2, 0] = 1
    C_tilde = 2 * np.eye(size, dtype=np.int64) - I_tilde

    rank = p - 2
    I_cartanless = np.zeros((rank, rank), dtype=np.int64)
    for i in range(rank):
        for j in range(rank):
            I_cartanless[i, j] = kronecker(i, j + 1) + kronecker(i, j - 1)
    C_cartan = 2 * np.eye(rank, dtype=np.int64) - I_cartanless
    return FermMatrices(*(_frozen(mat) for mat in (I_tilde, C_tilde, I_cartanless, C_cartan)))


def _unit(p: int, k: int) -> List[int]:
    # e_k vanishes outside 0 .. p-2
    vec = [0] * (p - 1)
    if 0 <= k <= p - 2:
        vec[k] = 1
    return vec


def build_vectors(p: int, a: int, b: int, i: int) -> UAVectors:
    flip = parity_indicator(a + kronecker(a, 1) + b + kronecker(b, 1) + kronecker(i, 1) * (p - 1))
    e_a, e_b, e_0, e_1 = _unit(p, a), _unit(p, b), _unit(p, 0), _unit(p, 1)
    u = tuple(
        theta(a > 1) * e_a[k] + theta(b > 1) * e_b[k] + flip * (e_1[k] - e_0[k])
        for k in range(p - 1)
    )
    A = tuple(theta(b > 1) * e_b[k] + flip * e_1[k] for k in range(p - 1))
    return UAVectors(u=u, A=A)


def build_params(p: int, a: int, b: int, i: int, L: int) -> FermionicSystem:
    params = ModelParams(p, a, b, i, L)
    return FermionicSystem(params, build_matrices(p), build_vectors(p, a, b, i))


def modified_m2_cap(p: int, L: int) -> int:
    """Largest ``m_2`` a modified-mode solution may carry: ``2L + 2 + 2pL``."""
    return 2 * L + 2 + 2 * p * L


def enumerate_solutions(
    system: FermionicSystem,
    mode: Mode = Mode.STANDARD,
    m2_cap: Optional[int] = None,
) -> List[NMSolution]:
    """
    All solutions of the (n, m) system, ordered by ``(m_(p-2), n_(p-2), ..., n_1)``.

    The free variables are ``n_2 .. n_(p-2)`` and ``m_(p-2)``; their weighted sum is
    bounded by ``L + sum_k (k-1) u_k``, the remaining entries follow row by row.
    In modified mode, solutions with ``n_0 < 0`` and ``n_0 + m_0 < 0`` are kept as
    well. The bound restricts them to ``m_0 + m_1 <= L``; the ones beyond that
    cancel in groups of fixed ``m_0 + m_1``.
    Every enumerated solution has ``m_2 <= L + 2``.

    Args:
        system (FermionicSystem): built by ``build_params``.
        mode (Mode): ``Mode.STANDARD`` or ``Mode.MODIFIED``.
        m2_cap (int): modified mode only, defaults to ``modified_m2_cap(p, L)``.

    Raises:
        RuntimeError: a modified-mode solution has ``m_2`` above the cap.
    """
    mode = Mode(mode)
    p, L = system.params.p, system.params.L
    u = system.vectors.u
    top = p - 2
    budget = L + sum((k - 1) * u[k] for k in range(2, p - 1))
    cap = modified_m2_cap(p, L) if m2_cap is None else m2_cap
    solutions: List[NMSolution] = []
    if budget < 0:
        return solutions

    def finish(m: Dict[int, int], n: Dict[int, int], c0: int) -> None:
        # rows 1 and 0 of the doubled system
        twice_s1 = m[2] + u[1]
        twice_s0 = 2 * L - m[2] + u[0]
        if twice_s1 % 2 or twice_s0 % 2:
            return
        s1, s0 = twice_s1 // 2, twice_s0 // 2
        for n1 in range(0, s1 + 1):
            m1 = s1 - n1
            m0 = c0 - m1
            if m0 < 0:
                continue
            n0 = s0 - m0
            if n0 < 0 and (mode is Mode.STANDARD or n0 + m0 >= 0):
                continue
            if mode is Mode.MODIFIED and m[2] > cap:
                raise RuntimeError(f"modified solution with m_2={m[2]} exceeds the cap {cap} at {system.params}")
            n_vec = (n0, n1) + tuple(n[k] for k in range(2, p - 1))
            m_vec = (m0, m1) + tuple(m[k] for k in range(2, p - 1))
            solutions.append(NMSolution(n_vec, m_vec))

    def descend(k: int, m: Dict[int, int], n: Dict[int, int], remaining: int) -> None:
        weight = 2 * (k - 1)
        for n_k in range(0, remaining // weight + 1):
            n[k] = n_k
            # row k: 2 (n_k + m_k) = m_(k-1) + m_(k+1) + u_k, with m_(p-1) = 0
            below = 2 * n_k + 2 * m[k] - u[k] - m.get(k + 1, 0)
            if below < 0:
                continue
            if k == 2:
                finish(m, n, below)
            else:
                m[k - 1] = below
                descend(k - 1, m, n, remaining - weight * n_k)
                del m[k - 1]
        n.pop(k, None)

    for m_top in range(system.parity, budget // (p - 2) + 1, 2):
        descend(top, {top: m_top}, {}, budget - (p - 2) * m_top)

    logger.debug("%s %s: %d solutions", system.params, mode.value, len(solutions))
    return solutions


def brute_force_solutions(system: FermionicSystem, bound: Optional[int] = None) -> List[NMSolution]:
    """
    Standard-mode solutions found by scanning the box ``0 <= m_j <= bound``
    (default ``2L + p``) and solving each row for ``n``.
    """
    p, L = system.params.p, system.params.L
    size = p - 1
    bound = 2 * L + p if bound is None else bound
    grid = np.indices((bound + 1,) * size).reshape(size, -1).T
    shift = np.array(system.vectors.u, dtype=np.int64)
    shift[0] += 2 * L
    twice_n = grid @ system.matrices.I_tilde.T + shift - 2 * grid
    keep = (
        np.all(twice_n % 2 == 0, axis=1)
        & np.all(twice_n >= 0, axis=1)
        & (grid[:, -1] % 2 == system.parity)
    )
    solutions = [
        NMSolution(tuple(int(x) for x in n_row // 2), tuple(int(x) for x in m_row))
        for n_row, m_row in zip(twice_n[keep], grid[keep])
    ]
    return sorted(solutions, key=_solution_key)


def _solution_key(sol: NMSolution) -> Tuple[int, ...]:
    return (sol.m[-1],) + tuple(reversed(sol.n[1:])) + (sol.n[0],)


def satisfies_system(sol: NMSolution, system: FermionicSystem) -> bool:
    """Row-by-row check of the constraint system together with the parity rule."""
    L = system.params.L
    m = np.array(sol.m, dtype=np.int64)
    rhs = system.matrices.I_tilde @ m + np.array(system.vectors.u, dtype=np.int64)
    rhs[0] += 2 * L
    lhs = 2 * (np.array(sol.n, dtype=np.int64) + m)
    return bool(np.array_equal(lhs, rhs)) and sol.m[-1] % 2 == system.parity and min(sol.m) >= 0


def check_consequences(sol: NMSolution, system: FermionicSystem) -> bool:
    """
    True iff the five linear relations implied by the system hold for ``sol``.

    Each relation is multiplied by two so that ``n - u/2`` stays integral.
    """
    p, L = system.params.p, system.params.L
    n, m, u = sol.n, sol.m, system.vectors.u
    d = [2 * n[j] - u[j] for j in range(p - 1)]  # 2 (n - u/2)

    weighted = 2 * (n[0] + n[1]) + sum(2 * j * d[j + 1] for j in range(1, p - 2)) + 2 * (p - 2) * m[p - 2]
    if weighted != 2 * L:
        return False
    if n[0] + n[1] + m[0] + m[1] != L:
        return False
    flat = 2 * (n[0] + n[1]) + 2 * m[2] + 2 * sum(d[j] for j in range(2, p - 1)) + 2 * m[p - 2]
    if flat != 2 * L:
        return False
    if 2 * m[0] != sum(j * d[j] for j in range(1, p - 1)) + (p - 1) * m[p - 2]:
        return False
    for k in range(2, p - 1):
        if m[k] != sum(j * d[k + j] for j in range(1, p - 1 - k)) + (p - 1 - k) * m[p - 2]:
            return False
    return True


def negative_n0_solution(p: int, b: int) -> NMSolution:
    """
    The solution with ``n_0 = -n_1 = -1`` that survives in modified mode at
    ``L = 0`` for ``i = 1`` and ``a = p - b``.
    """
    if not 1 < b < p - 1:
        raise ParameterError(f"b={b} violates 1 < b < p-1 = {p - 1}")
    low, high = min(b, p - b), max(b, p - b)
    m = [0, 0]
    for k in range(2, p - 1):
        if k <= low:
            m.append(k - 1)
        elif k >= high:
            m.append(p - 1 - k)
        else:
            m.append(low - 1)
    n = [-1, 1] + [0] * (p - 3)
    return NMSolution(tuple(n), tuple(m))


def dump_solutions(solutions: List[NMSolution]) -> str:
    return json.dumps([sol.to_json() for sol in solutions])


def verify_nm_oracle(p: int, L_max: int) -> VerifyReport:
    """
    Pruned enumeration against the box search for every ``(a, b, i)`` and
    ``0 <= L <= L_max``, with the row checks and the derived relations.
    """
    report = VerifyReport('nm-oracle')
    for a in range(1, p - 1):
        for b in range(1, p):
            for i in (0, 1):
                for L in range(0, L_max + 1):
                    system = build_params(p, a, b, i, L)
                    params = system.params.as_dict()
                    solutions = enumerate_solutions(system)
                    report.assert_true('nm-box-search', params, solutions == brute_force_solutions(system))
                    report.assert_true('nm-rows', params, all(satisfies_system(s, system) for s in solutions))
                    report.assert_true('nm-consequences', params,
                                       all(check_consequences(s, system) for s in solutions))
                    if L == 0 and i == 0:
                        report.assert_true('nm-initial-count', params, len(solutions) == kronecker(a, b))
    return report
