"""Exact truncated power series in q, symbolic q-products, Gaussian binomials.

A :class:`QSeries` tracks the coefficients of q^0 .. q^order exactly.  Every
binary operation returns a result at the smaller of the two operand orders,
so agreement is never claimed past what both sides actually know.

Coefficients are Python ints or :class:`fractions.Fraction`.  Internally they
live in a read-only numpy array: int64 when every value (and every
intermediate the next kernel would produce) provably fits, object dtype
otherwise.  The int64 path runs through :mod:`rrcauchy._kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Union

import numpy as np

from . import _kernels
from ._kernels import INT64_LIMIT
from .errors import NegativeShift, ZeroConstantTerm

Coefficient = Union[int, Fraction]

__all__ = [
    "QSeries",
    "FactoredProduct",
    "XYSeries",
    "series_add",
    "series_mul",
    "series_invert",
    "poch_finite",
    "poch_infinite",
    "gauss_binomial",
    "normalize",
    "expand",
    "xy_from_pochhammer",
    "poly_mul",
]


def _coerce(value) -> Coefficient:
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return _coerce(Fraction(value.numerator, value.denominator))
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def _pack(values: Iterable) -> np.ndarray:
    vals = [_coerce(v) for v in values]
    if all(type(v) is int and -INT64_LIMIT < v < INT64_LIMIT for v in vals):
        arr = np.array(vals, dtype=np.int64)
    else:
        arr = np.empty(len(vals), dtype=object)
        arr[:] = vals
    return arr


def _compact(arr: np.ndarray) -> np.ndarray:
    """Return int64 storage when an object array holds only small ints."""
    if arr.dtype != object:
        return arr
    return _pack(arr)


def _maxabs(arr: np.ndarray) -> int:
    if len(arr) == 0:
        return 0
    if arr.dtype == object:
        return max(abs(v) for v in arr)
    return int(np.abs(arr).max())


def _fits(arr: np.ndarray, factor: int = 1) -> bool:
    return arr.dtype == np.int64 and _maxabs(arr) * factor < INT64_LIMIT


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class QSeries:
    """Power series in q known exactly up to and including q^order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        arr = _pack(coeffs)
        if order is None:
            if len(arr) == 0:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(arr) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(arr) > order + 1:
            arr = arr[: order + 1]
        elif len(arr) < order + 1:
            pad = np.zeros(order + 1 - len(arr), dtype=arr.dtype)
            if arr.dtype == object:
                pad = np.array([0] * len(pad), dtype=object)
            arr = np.concatenate([arr, pad])
        self._c = _freeze(arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> QSeries:
        obj = cls.__new__(cls)
        obj._c = _freeze(_compact(arr))
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls._wrap(np.zeros(order + 1, dtype=np.int64))

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Coefficient = 1) -> QSeries:
        """``coeff * q**exponent``; vanishes when exponent > order."""
        if exponent < 0:
            raise NegativeShift(f"q^{exponent} is not a power series")
        coeffs = [0] * (order + 1)
        if exponent <= order:
            coeffs[exponent] = coeff
        return cls(coeffs, order)

    @classmethod
    def polynomial(cls, coeffs: Iterable, order: int | None = None) -> QSeries:
        """Exact polynomial, zero-padded (or truncated) to ``order``."""
        return cls(coeffs, order)

    # -- access ---------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Coefficient, ...]:
        if self._c.dtype == object:
            return tuple(self._c)
        return tuple(int(v) for v in self._c)

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the coefficient buffer."""
        return self._c

    def __getitem__(self, exponent: int) -> Coefficient:
        if not 0 <= exponent <= self.order:
            raise IndexError(f"exponent {exponent} outside 0..{self.order}")
        v = self._c[exponent]
        return v if self._c.dtype == object else int(v)

    def __iter__(self) -> Iterator[Coefficient]:
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    # -- comparison -----------------------------------------------------------

    def first_mismatch(self, other: QSeries) -> tuple[int, Coefficient, Coefficient] | None:
        """First (exponent, self coeff, other coeff) that differs up to the common order."""
        n = min(self.order, other.order)
        for e, (a, b) in enumerate(zip(self.coeffs[: n + 1], other.coeffs[: n + 1])):
            if a != b:
                return e, a, b
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    # -- arithmetic -----------------------------------------------------------

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return QSeries._wrap(self._c[: order + 1].copy())

    def __neg__(self) -> QSeries:
        return QSeries._wrap(-self._c)

    def __add__(self, other) -> QSeries:
        if not isinstance(other, QSeries):
            try:
                other = QSeries.monomial(0, self.order, _coerce(other))
            except TypeError:
                return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c[: n + 1], other._c[: n + 1]
        if _fits(a, 2) and _fits(b, 2):
            return QSeries._wrap(a + b)
        return QSeries._wrap(a.astype(object) + b.astype(object))

    __radd__ = __add__

    def __sub__(self, other) -> QSeries:
        if not isinstance(other, QSeries):
            try:
                other = QSeries.monomial(0, self.order, _coerce(other))
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return _mul(self, other)
        try:
            c = _coerce(other)
        except TypeError:
            return NotImplemented
        if type(c) is int and _fits(self._c, abs(c) + 1):
            return QSeries._wrap(self._c * c)
        return QSeries._wrap(self._c.astype(object) * c)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return self * other.invert()
        return self * (Fraction(1) / _coerce(other))

    def __pow__(self, n: int) -> QSeries:
        if n < 0:
            return self.invert() ** (-n)
        result = QSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, s: int) -> QSeries:
        """Multiply by q^s (s >= 0), keeping the order."""
        if s < 0:
            raise NegativeShift(f"q^{s} is not a power series")
        out = np.zeros_like(self._c)
        if self._c.dtype == object:
            out[:] = 0
        if s <= self.order:
            out[s:] = self._c[: self.order + 1 - s]
        return QSeries._wrap(out)

    def mul_one_minus(self, e: int) -> QSeries:
        """Multiply by (1 - q^e), e >= 1."""
        if e < 1:
            raise ValueError("factor exponent must be positive")
        if _fits(self._c, 2):
            return QSeries._wrap(_kernels.multiply_one_minus(self._c, e))
        return QSeries._wrap(_kernels.multiply_one_minus_numpy(self._c.astype(object), e))

    def div_one_minus(self, e: int) -> QSeries:
        """Multiply by 1/(1 - q^e) = sum_j q^{je}, e >= 1."""
        if e < 1:
            raise ValueError("factor exponent must be positive")
        c = self._c
        if c.dtype == np.int64 and int(np.abs(c).sum()) < INT64_LIMIT:
            return QSeries._wrap(_kernels.divide_one_minus(c, e))
        return QSeries._wrap(_kernels.divide_one_minus_numpy(c.astype(object), e))

    def invert(self) -> QSeries:
        """Multiplicative inverse; the constant term must be nonzero."""
        f = self.coeffs
        if f[0] == 0:
            raise ZeroConstantTerm("series has zero constant term")
        n = self.order
        unit = f[0] in (1, -1)
        inv0 = f[0] if unit else Fraction(1) / f[0]
        fa = np.empty(n + 1, dtype=object)
        fa[:] = f
        g = np.empty(n + 1, dtype=object)
        g[0] = inv0
        for k in range(1, n + 1):
            s = fa[1 : k + 1].dot(g[k - 1 :: -1][:k])
            g[k] = -s * inv0
        return QSeries._wrap(_compact_fractions(g))

    # -- display --------------------------------------------------------------

    def __repr__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"


def _compact_fractions(arr: np.ndarray) -> np.ndarray:
    out = np.empty(len(arr), dtype=object)
    out[:] = [_coerce(v) for v in arr]
    return out


def _mul(f: QSeries, g: QSeries) -> QSeries:
    n = min(f.order, g.order)
    a, b = f._c[: n + 1], g._c[: n + 1]
    if a.dtype == np.int64 and b.dtype == np.int64:
        if _maxabs(a) * _maxabs(b) * (n + 1) < INT64_LIMIT:
            return QSeries._wrap(_kernels.convolve_trunc(a, b, n))
    return QSeries._wrap(_kernels.convolve_object(a, b, n))


def series_add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def series_invert(f: QSeries) -> QSeries:
    return f.invert()


def poly_mul(a: Iterable, b: Iterable) -> list[Coefficient]:
    """Exact product of two coefficient lists (full length, no truncation)."""
    a = list(a)
    b = list(b)
    if not a or not b:
        return []
    out = np.convolve(np.array(a, dtype=object), np.array(b, dtype=object))
    return [_coerce(v) for v in out]


def poch_finite(a: int, m: int, n: int, order: int) -> QSeries:
    """(q^a; q^m)_n truncated at ``order``."""
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    return FactoredProduct.poch(a, m, n).expand(order)


def poch_infinite(a: int, m: int, order: int) -> QSeries:
    """(q^a; q^m)_oo truncated at ``order``."""
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    return FactoredProduct.poch_inf(a, m).expand(order)


@lru_cache(maxsize=None)
def _gauss_coeffs(N: int, M: int) -> tuple[int, ...]:
    if M < 0 or M > N:
        return ()
    if M == 0 or M == N:
        return (1,)
    # [N, M] = [N-1, M-1] + q^M [N-1, M]
    left = _gauss_coeffs(N - 1, M - 1)
    right = _gauss_coeffs(N - 1, M)
    out = [0] * (M * (N - M) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + M] += c
    return tuple(out)


def gauss_binomial(N: int, M: int, order: int | None = None) -> QSeries:
    """Gaussian binomial [N, M]_q as an exact polynomial.

    With ``order=None`` the result is returned at order equal to its degree
    (order 0 for the zero polynomial).
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    coeffs = _gauss_coeffs(N, M) or (0,)
    return QSeries.polynomial(coeffs, len(coeffs) - 1 if order is None else order)


# ---------------------------------------------------------------------------
# Symbolic products
# ---------------------------------------------------------------------------


def _merge(pairs: Iterable[tuple]) -> tuple:
    acc: dict = {}
    for *key, mult in pairs:
        acc[tuple(key)] = acc.get(tuple(key), 0) + mult
    return tuple(sorted((*k, v) for k, v in acc.items() if v))


@dataclass(frozen=True)
class FactoredProduct:
    """``sign * q^shift * prod (1-q^e)^mult * prod (q^a; q^m)_oo^mult``.

    Finite factors may carry negative exponents until :meth:`normalize`
    rewrites them with 1 - q^{-e} = -q^{-e} (1 - q^e).
    """

    sign: int = 1
    shift: int = 0
    finite_factors: tuple[tuple[int, int], ...] = ()
    infinite_families: tuple[tuple[int, int, int], ...] = field(default=())

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        for e, _ in self.finite_factors:
            if e == 0:
                raise ValueError("factor (1 - q^0) vanishes identically")
        for a, m, _ in self.infinite_families:
            if a < 1 or m < 1:
                raise ValueError("infinite families need base >= 1 and step >= 1")

    @classmethod
    def poch(cls, a: int, m: int, n: int) -> FactoredProduct:
        """(q^a; q^m)_n; ``a`` may be nonpositive as long as no factor is 1 - q^0."""
        return cls(finite_factors=_merge((a + i * m, 1) for i in range(n)))

    @classmethod
    def poch_inf(cls, a: int, m: int) -> FactoredProduct:
        return cls(infinite_families=((a, m, 1),))

    @classmethod
    def monomial(cls, shift: int, sign: int = 1) -> FactoredProduct:
        return cls(sign=sign, shift=shift)

    def __mul__(self, other: FactoredProduct) -> FactoredProduct:
        if not isinstance(other, FactoredProduct):
            return NotImplemented
        return FactoredProduct(
            self.sign * other.sign,
            self.shift + other.shift,
            self.finite_factors + other.finite_factors,
            self.infinite_families + other.infinite_families,
        )

    def inverse(self) -> FactoredProduct:
        return FactoredProduct(
            self.sign,
            -self.shift,
            tuple((e, -k) for e, k in self.finite_factors),
            tuple((a, m, -k) for a, m, k in self.infinite_families),
        )

    def __truediv__(self, other: FactoredProduct) -> FactoredProduct:
        return self * other.inverse()

    def __pow__(self, n: int) -> FactoredProduct:
        base = self if n >= 0 else self.inverse()
        out = FactoredProduct()
        for _ in range(abs(n)):
            out = out * base
        return out

    @property
    def is_normalized(self) -> bool:
        return self == self.normalize()

    def normalize(self) -> FactoredProduct:
        sign, shift = self.sign, self.shift
        factors = []
        for e, k in self.finite_factors:
            if e < 0:
                # (1 - q^e)^k = (-1)^k q^{ek} (1 - q^{-e})^k
                sign *= -1 if k % 2 else 1
                shift += e * k
                e = -e
            factors.append((e, k))
        return FactoredProduct(sign, shift, _merge(factors), _merge(self.infinite_families))

    def expand(self, order: int) -> QSeries:
        p = self.normalize()
        if p.shift < 0:
            raise NegativeShift(f"net power q^{p.shift} leaves the power-series ring")
        out = QSeries.monomial(p.shift, order, p.sign)
        if p.shift > order:
            return out
        for e, k in p.finite_factors:
            out = _apply(out, e, k)
        for a, m, k in p.infinite_families:
            e = a
            while e <= order:
                out = _apply(out, e, k)
                e += m
        return out

    def as_fraction(self) -> tuple[list[int], list[int]]:
        """(numerator, denominator) integer coefficient lists of a finite product."""
        if self.infinite_families:
            raise ValueError("infinite products are not rational functions")
        p = self.normalize()
        num = [0] * max(p.shift, 0) + [p.sign]
        den = [0] * max(-p.shift, 0) + [1]
        for e, k in p.finite_factors:
            factor = [1] + [0] * (e - 1) + [-1]
            for _ in range(abs(k)):
                if k > 0:
                    num = poly_mul(num, factor)
                else:
                    den = poly_mul(den, factor)
        return num, den

    def __str__(self) -> str:
        p = self
        lead = ("-" if p.sign < 0 else "") + (f"q^{p.shift}" if p.shift else "1")
        ups, downs = [], []
        for e, k in p.finite_factors:
            term = f"(1-q^{e})" + (f"^{abs(k)}" if abs(k) > 1 else "")
            (ups if k > 0 else downs).append(term)
        for a, m, k in p.infinite_families:
            term = f"(q^{a};q^{m})_inf" + (f"^{abs(k)}" if abs(k) > 1 else "")
            (ups if k > 0 else downs).append(term)
        text = lead + "".join("*" + u for u in ups)
        if len(downs) == 1:
            text += " / " + downs[0]
        elif downs:
            text += " / (" + "*".join(downs) + ")"
        return text


def _apply(s: QSeries, e: int, k: int) -> QSeries:
    if e > s.order:
        return s
    for _ in range(abs(k)):
        s = s.mul_one_minus(e) if k > 0 else s.div_one_minus(e)
    return s


def normalize(p: FactoredProduct) -> FactoredProduct:
    return p.normalize()


def expand(p: FactoredProduct, order: int) -> QSeries:
    return p.expand(order)


# ---------------------------------------------------------------------------
# Series in q with two extra markers x, y
# ---------------------------------------------------------------------------


class XYSeries:
    """Sum of x^alpha y^beta * QSeries with alpha + beta <= degree_cap."""

    __slots__ = ("degree_cap", "order", "_terms")

    def __init__(self, terms: dict[tuple[int, int], QSeries], degree_cap: int, order: int):
        self.degree_cap = degree_cap
        self.order = order
        clean = {}
        for (alpha, beta), s in terms.items():
            if alpha < 0 or beta < 0:
                raise ValueError("marker degrees must be nonnegative")
            if alpha + beta > degree_cap:
                continue
            s = s.truncate(order) if s.order > order else s
            if s.order < order:
                raise ValueError("all coefficients must carry the series order")
            if not s.is_zero():
                clean[(alpha, beta)] = s
        self._terms = clean

    @classmethod
    def one(cls, degree_cap: int, order: int) -> XYSeries:
        return cls({(0, 0): QSeries.one(order)}, degree_cap, order)

    @property
    def terms(self) -> dict[tuple[int, int], QSeries]:
        return dict(self._terms)

    def coefficient(self, alpha: int, beta: int) -> QSeries:
        return self._terms.get((alpha, beta), QSeries.zero(self.order))

    def _common(self, other: XYSeries) -> tuple[int, int]:
        return min(self.degree_cap, other.degree_cap), min(self.order, other.order)

    def __add__(self, other: XYSeries) -> XYSeries:
        cap, order = self._common(other)
        out: dict = {}
        for src in (self._terms, other._terms):
            for key, s in src.items():
                s = s.truncate(order)
                out[key] = out[key] + s if key in out else s
        return XYSeries(out, cap, order)

    def __mul__(self, other: XYSeries) -> XYSeries:
        cap, order = self._common(other)
        out: dict = {}
        for (a1, b1), s1 in self._terms.items():
            for (a2, b2), s2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                if key[0] + key[1] > cap:
                    continue
                prod = s1.truncate(order) * s2.truncate(order)
                out[key] = out[key] + prod if key in out else prod
        return XYSeries(out, cap, order)

    def collapse(self) -> QSeries:
        """Set x = y = 1.  Complete only if no dropped term reaches q^order."""
        total = QSeries.zero(self.order)
        for s in self._terms.values():
            total = total + s
        return total

    def first_mismatch(self, other: XYSeries) -> tuple[int, int, int, Coefficient, Coefficient] | None:
        """(alpha, beta, exponent, lhs, rhs) with the smallest q-exponent that differs."""
        cap, order = self._common(other)
        best = None
        keys = sorted(set(self._terms) | set(other._terms))
        for alpha, beta in keys:
            if alpha + beta > cap:
                continue
            mm = self.coefficient(alpha, beta).truncate(order).first_mismatch(
                other.coefficient(alpha, beta).truncate(order)
            )
            if mm is not None and (best is None or mm[0] < best[2]):
                best = (alpha, beta, *mm)
        return best

    def __eq__(self, other) -> bool:
        if not isinstance(other, XYSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return f"XYSeries({len(self._terms)} terms, degree_cap={self.degree_cap}, order={self.order})"


def xy_from_pochhammer(marker: str, a: int, m: int, order: int, degree_cap: int) -> XYSeries:
    """Expand 1/(marker * q^a; q^m)_oo, one geometric factor at a time."""
    if marker not in ("x", "y"):
        raise ValueError("marker must be 'x' or 'y'")
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    # coefficient of marker^j, as a QSeries
    slices = [QSeries.one(order)] + [QSeries.zero(order) for _ in range(degree_cap)]
    e = a
    while e <= order:
        # multiply by sum_t (marker q^e)^t
        new = []
        for j in range(degree_cap + 1):
            acc = slices[j]
            t = 1
            while t <= j and e * t <= order:
                acc = acc + slices[j - t].shift(e * t)
                t += 1
            new.append(acc)
        slices = new
        e += m
    key = (lambda j: (j, 0)) if marker == "x" else (lambda j: (0, j))
    return XYSeries({key(j): s for j, s in enumerate(slices)}, degree_cap, order)
