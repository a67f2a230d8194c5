# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
"""
Exact Laurent polynomials and truncated power series in ``q^(1/4)``.

Exponents are stored as plain integers counting quarter powers of q, so
``q^(1/2)`` has exponent 2 and ``q^-1`` has exponent -4. Coefficients are
Python integers and never overflow.
"""
import math
from fractions import Fraction
from functools import lru_cache, reduce
from numbers import Integral
from types import MappingProxyType

import numpy as np

from typing import Any, Dict, Iterator, List, Mapping, Optional, Union

__all__ = [
    'QUARTER', 'INFINITY', 'InexactDivisionError', 'QLaurent', 'QSeries', 'ZERO', 'ONE',
    'to_quarters', 'q', 'add', 'mul', 'shift', 'eval_at_one', 'pochhammer', 'pochhammer_poly',
    'series_inverse', 'inverse_pochhammer', 'to_records', 'from_records', 'series_to_dict',
    'series_from_dict',
]

QUARTER = 4
INFINITY = math.inf

# products with fewer term pairs are convolved term by term
_DENSE_PAIRS = 256


class InexactDivisionError(ArithmeticError):
    pass


def to_quarters(power: Union[int, Fraction]) -> int:
    """
    Convert a power of q to quarter units.

    Args:
        power (int or Fraction): the exponent of q, e.g. ``Fraction(1, 2)`` for ``q^(1/2)``.

    Returns:
        int: the same exponent counted in quarters.
    """
    if isinstance(power, Integral):
        return int(power) * QUARTER
    value = Fraction(power) * QUARTER
    if value.denominator != 1:
        raise ValueError(f"q^({power}) is not on the quarter lattice")
    return int(value)


def _format_exponent(exp: int) -> str:
    power = Fraction(exp, QUARTER)
    if power.denominator == 1:
        return str(power.numerator)
    return f"({power})"


def _dense(terms: Mapping[int, int], lo: int, stride: int) -> List[int]:
    top = next(reversed(terms))
    values = [0] * ((top - lo) // stride + 1)
    for exp, coeff in terms.items():
        values[(exp - lo) // stride] = coeff
    return values


def _common_stride(*term_maps: Mapping[int, int]) -> int:
    stride = 0
    for terms in term_maps:
        lo = next(iter(terms))
        stride = reduce(math.gcd, (exp - lo for exp in terms), stride)
    return stride or 1


def _convolve(x: Dict[int, int], y: Dict[int, int], cutoff: Optional[int] = None) -> Dict[int, int]:
    if not x or not y:
        return {}
    lo_x, lo_y = next(iter(x)), next(iter(y))
    if cutoff is not None and lo_x + lo_y > cutoff:
        return {}

    if len(x) * len(y) < _DENSE_PAIRS:
        out: Dict[int, int] = {}
        for ex, cx in x.items():
            for ey, cy in y.items():
                exp = ex + ey
                if cutoff is not None and exp > cutoff:
                    break
                out[exp] = out.get(exp, 0) + cx * cy
        return {exp: c for exp, c in sorted(out.items()) if c}

    stride = _common_stride(x, y)
    dense_x = np.array(_dense(x, lo_x, stride), dtype=object)
    dense_y = np.array(_dense(y, lo_y, stride), dtype=object)
    if cutoff is not None:
        limit = (cutoff - lo_x - lo_y) // stride + 1
        dense_x, dense_y = dense_x[:limit], dense_y[:limit]
    product = np.convolve(dense_x, dense_y)
    if cutoff is not None:
        product = product[:limit]
    lo = lo_x + lo_y
    return {lo + k * stride: int(c) for k, c in enumerate(product) if c}


class QLaurent:
    """
    Sparse Laurent polynomial on the quarter lattice, immutable.

    Args:
        terms (Mapping[int, int]): exponent in quarter units -> integer coefficient.
            Zero coefficients are dropped, so equal polynomials have equal term maps.
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        terms = terms or {}
        self._terms = {int(exp): int(c) for exp, c in sorted(terms.items()) if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[int, int]) -> 'QLaurent':
        # terms must already be sorted and free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> 'QLaurent':
        return cls._wrap({int(exp): int(coeff)} if coeff else {})

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def min_exp(self) -> Optional[int]:
        return next(iter(self._terms)) if self._terms else None

    @property
    def max_exp(self) -> Optional[int]:
        return next(reversed(self._terms)) if self._terms else None

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, QLaurent):
            return self._terms == other._terms
        if isinstance(other, Integral):
            return self._terms == ({0: int(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: Union['QLaurent', int]) -> 'QLaurent':
        if isinstance(other, Integral):
            other = QLaurent.monomial(0, other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            value = terms.get(exp, 0) + c
            if value:
                terms[exp] = value
            else:
                del terms[exp]
        return QLaurent._wrap(dict(sorted(terms.items())))

    __radd__ = __add__

    def __neg__(self) -> 'QLaurent':
        return QLaurent._wrap({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: Union['QLaurent', int]) -> 'QLaurent':
        if isinstance(other, Integral):
            other = QLaurent.monomial(0, other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> 'QLaurent':
        return (-self) + other

    def __mul__(self, other: Union['QLaurent', int]) -> 'QLaurent':
        if isinstance(other, Integral):
            if not other:
                return ZERO
            return QLaurent._wrap({exp: c * int(other) for exp, c in self._terms.items()})
        if not isinstance(other, QLaurent):
            return NotImplemented
        return QLaurent._wrap(_convolve(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'QLaurent':
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp: int) -> 'QLaurent':
        if not exp:
            return self
        return QLaurent._wrap({e + exp: c for e, c in self._terms.items()})

    def truncate(self, cutoff: int) -> 'QLaurent':
        if self._terms and self.max_exp <= cutoff:
            return self
        return QLaurent._wrap({exp: c for exp, c in self._terms.items() if exp <= cutoff})

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def exact_div(self, divisor: 'QLaurent') -> 'QLaurent':
        """
        Divide by ``divisor`` and raise ``InexactDivisionError`` unless the remainder is zero.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ZERO
        stride = _common_stride(self._terms, divisor._terms)
        lo_num, lo_den = self.min_exp, divisor.min_exp
        if (lo_num - lo_den) % stride:
            stride = math.gcd(stride, lo_num - lo_den)
        num = _dense(self._terms, lo_num, stride)
        den = _dense(divisor._terms, lo_den, stride)
        size = len(num) - len(den) + 1
        if size <= 0:
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")

        lead = den[0]
        tail = [(j, c) for j, c in enumerate(den) if j and c]
        quotient = [0] * size
        for k in range(size):
            c = num[k]
            if not c:
                continue
            t, r = divmod(c, lead)
            if r:
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            quotient[k] = t
            for j, d in tail:
                num[k + j] -= t * d
        if any(num[size:]):
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")
        lo = lo_num - lo_den
        return QLaurent._wrap({lo + k * stride: c for k, c in enumerate(quotient) if c})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self._terms.items():
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                power = 'q' if exp == QUARTER else f"q^{_format_exponent(exp)}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"QLaurent({self})"


ZERO = QLaurent()
ONE = QLaurent.monomial(0)


def q(power: Union[int, Fraction] = 1, coeff: int = 1) -> QLaurent:
    """The monomial ``coeff * q^power``."""
    return QLaurent.monomial(to_quarters(power), coeff)


def add(x: QLaurent, y: QLaurent) -> QLaurent:
    return x + y


def mul(x: QLaurent, y: QLaurent) -> QLaurent:
    return x * y


def shift(x: QLaurent, exp: int) -> QLaurent:
    """Multiply by ``q^(exp/4)``; ``exp`` is in quarter units."""
    return x.shift(exp)


def eval_at_one(x: QLaurent) -> int:
    return x.eval_at_one()


def _valuation(poly: QLaurent) -> int:
    return min(0, poly.min_exp) if poly else 0


class QSeries:
    """
    Power series in ``q^(1/4)`` known exactly for every exponent up to ``cutoff``.

    Args:
        terms (QLaurent or Mapping[int, int]): coefficients; anything above the cutoff is dropped.
        cutoff (int): inclusive cutoff in quarter units.
    """
    __slots__ = ('_poly', '_cutoff')

    def __init__(self, terms: Union[QLaurent, Mapping[int, int], None], cutoff: int):
        poly = terms if isinstance(terms, QLaurent) else QLaurent(terms)
        self._cutoff = int(cutoff)
        self._poly = poly.truncate(self._cutoff)

    @property
    def cutoff(self) -> int:
        return self._cutoff

    @property
    def poly(self) -> QLaurent:
        return self._poly

    @property
    def terms(self) -> Mapping[int, int]:
        return self._poly.terms

    def items(self):
        return self._poly.items()

    def coeff(self, exp: int) -> int:
        if exp > self._cutoff:
            raise ValueError(f"coefficient of exponent {exp} is beyond the cutoff {self._cutoff}")
        return self._poly.coeff(exp)

    def __len__(self) -> int:
        return len(self._poly)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._cutoff == other._cutoff and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self._cutoff, self._poly))

    def _coerce(self, other: Any) -> Optional['QSeries']:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, Integral):
            other = QLaurent.monomial(0, other)
        if isinstance(other, QLaurent):
            # exact operands never lower the cutoff of a sum
            return QSeries(other, self._cutoff)
        return None

    def __add__(self, other: Union['QSeries', QLaurent, int]) -> 'QSeries':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        cutoff = min(self._cutoff, other._cutoff)
        return QSeries(self._poly.truncate(cutoff) + other._poly.truncate(cutoff), cutoff)

    __radd__ = __add__

    def __neg__(self) -> 'QSeries':
        return QSeries(-self._poly, self._cutoff)

    def __sub__(self, other: Union['QSeries', QLaurent, int]) -> 'QSeries':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Union[QLaurent, int]) -> 'QSeries':
        return (-self) + other

    def __mul__(self, other: Union['QSeries', QLaurent, int]) -> 'QSeries':
        if isinstance(other, Integral):
            return QSeries(self._poly * other, self._cutoff)
        if isinstance(other, QLaurent):
            cutoff = self._cutoff + _valuation(other)
        elif isinstance(other, QSeries):
            # negative valuations eat into the known range of the other factor
            cutoff = min(self._cutoff + _valuation(other._poly), other._cutoff + _valuation(self._poly))
            other = other._poly
        else:
            return NotImplemented
        return QSeries(QLaurent._wrap(_convolve(self._poly._terms, other._terms, cutoff)), cutoff)

    __rmul__ = __mul__

    def shift(self, exp: int) -> 'QSeries':
        return QSeries(self._poly.shift(exp), self._cutoff + exp)

    def truncate(self, cutoff: int) -> 'QSeries':
        if cutoff > self._cutoff:
            raise ValueError(f"cannot extend a series known up to {self._cutoff} to {cutoff}")
        return QSeries(self._poly, cutoff)

    def agrees_with(self, other: 'QSeries') -> bool:
        cutoff = min(self._cutoff, other._cutoff)
        return self._poly.truncate(cutoff) == other._poly.truncate(cutoff)

    def __str__(self) -> str:
        return f"{self._poly} + O(q^{_format_exponent(self._cutoff + 1)})"

    def __repr__(self) -> str:
        return f"QSeries({self})"


@lru_cache(maxsize=None)
def pochhammer_poly(k: int) -> QLaurent:
    """The finite product ``(q)_k = (1-q)(1-q^2)...(1-q^k)`` as a polynomial."""
    if k < 0:
        raise ValueError(f"(q)_k is a polynomial only for k >= 0, got k={k}")
    if k == 0:
        return ONE
    return pochhammer_poly(k - 1) * (ONE - q(k))


def pochhammer(k: Union[int, float], cutoff: int) -> QSeries:
    """
    ``(q)_k`` as a series truncated at ``cutoff`` (quarter units).

    Args:
        k (int or INFINITY): number of factors; ``INFINITY`` gives the truncated infinite product.
        cutoff (int): inclusive cutoff in quarter units.
    """
    if k == INFINITY:
        # factors 1 - q^j with 4j > cutoff are invisible below the cutoff
        result = QSeries(ONE, cutoff)
        for j in range(1, cutoff // QUARTER + 1):
            result = result * (ONE - q(j))
        return result
    if isinstance(k, float) or k < 0:
        raise ValueError(f"pochhammer needs k >= 0 or INFINITY, got k={k}")
    return QSeries(pochhammer_poly(k), cutoff)


def series_inverse(x: QSeries) -> QSeries:
    """
    The series ``y`` with ``x * y = 1`` up to the cutoff of ``x``.
    """
    lead = x.poly.coeff(0)
    if lead not in (1, -1) or (x.poly and x.poly.min_exp < 0):
        raise ValueError(f"series_inverse needs constant term +1 or -1, got {x}")
    tail = [(exp, c) for exp, c in x.items() if exp > 0]
    inverse = {0: lead}
    for exp in range(1, x.cutoff + 1):
        acc = 0
        for k, c in tail:
            if k > exp:
                break
            acc += c * inverse.get(exp - k, 0)
        if acc:
            inverse[exp] = -lead * acc
    return QSeries(QLaurent._wrap(inverse), x.cutoff)


@lru_cache(maxsize=1024)
def inverse_pochhammer(k: Union[int, float], cutoff: int) -> QSeries:
    """``1/(q)_k`` truncated at ``cutoff``."""
    return series_inverse(pochhammer(k, cutoff))


def to_records(x: QLaurent) -> List[Dict[str, Any]]:
    """Serialize as ``[{"exp_quarters": int, "coeff": str}, ...]`` in ascending exponent order."""
    return [{'exp_quarters': exp, 'coeff': str(c)} for exp, c in x.items()]


def from_records(records: List[Mapping[str, Any]]) -> QLaurent:
    return QLaurent({int(r['exp_quarters']): int(r['coeff']) for r in records})


def series_to_dict(x: QSeries) -> Dict[str, Any]:
    return {'cutoff_quarters': x.cutoff, 'terms': to_records(x.poly)}


def series_from_dict(data: Mapping[str, Any]) -> QSeries:
    return QSeries(from_records(data['terms']), int(data['cutoff_quarters']))
