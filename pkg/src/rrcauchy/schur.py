"""Schur functions at the specializations used by the Rogers-Ramanujan checks.

Three strategies are kept deliberately independent:

* ``ssyt``: sum over explicitly enumerated column-strict tableaux.
* ``jacobi_trudi``: det(h_{lambda_i - i + j}) over truncated series.
* ``closed_form``: product formulas (hook-content principal specializations
  and the two-row formulas for x = (1, q^5, ...) and y = (q, q^4)).

:func:`schur_table` evaluates every shape at once for a finite alphabet by
adding one letter at a time as a horizontal strip; the harness uses it for
large row-restricted sums.
"""
from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from ._kernels import INT64_LIMIT
from .errors import UnsupportedClosedForm
from .partitions import Partition, conjugate
from .qseries import FactoredProduct, QSeries
from .tableaux import Alphabet, FiniteAlphabet, GeometricAlphabet, weight_genfun


class Strategy(str, Enum):
    SSYT = "ssyt"
    JACOBI_TRUDI = "jacobi_trudi"
    CLOSED_FORM = "closed_form"


RR5_X = GeometricAlphabet(0, 5)
RR5_Y = FiniteAlphabet.of_exponents((1, 4))


def schur(shape: Partition, alphabet: Alphabet, order: int, strategy: Strategy | str = Strategy.SSYT) -> QSeries:
    """s_shape evaluated at ``alphabet``, truncated at ``order``."""
    shape = tuple(x for x in shape if x)
    strategy = Strategy(strategy)
    if isinstance(alphabet, FiniteAlphabet) and len(shape) > alphabet.size:
        return QSeries.zero(order)
    if strategy is Strategy.SSYT:
        return weight_genfun(shape, alphabet, order)
    if strategy is Strategy.JACOBI_TRUDI:
        return schur_jacobi_trudi(shape, alphabet, order)
    return schur_closed_form(shape, alphabet, order)


# -- complete homogeneous functions -------------------------------------------

@lru_cache(maxsize=256)
def _h_finite(alphabet: FiniteAlphabet, order: int, mmax: int) -> tuple[QSeries, ...]:
    # coefficient of t^m in prod_j 1/(1 - sign_j q^{e_j} t), one letter at a time
    h = [QSeries.one(order)] + [QSeries.zero(order) for _ in range(mmax)]
    for e, s in zip(alphabet.exponents, alphabet.signs):
        new = []
        for m in range(mmax + 1):
            acc = h[m]
            for t in range(1, m + 1):
                if e * t > order:
                    break
                term = h[m - t].shift(e * t)
                acc = acc + (term if s == 1 or t % 2 == 0 else -term)
            new.append(acc)
        h = new
    return tuple(h)


def h_complete(m: int, alphabet: Alphabet, order: int) -> QSeries:
    """Complete homogeneous symmetric function h_m at ``alphabet``."""
    if m < 0:
        return QSeries.zero(order)
    if isinstance(alphabet, GeometricAlphabet):
        # h_m(q^b, q^{b+s}, ...) = q^{bm} / (q^s; q^s)_m
        p = FactoredProduct.monomial(alphabet.base * m) / FactoredProduct.poch(alphabet.step, alphabet.step, m)
        return p.expand(order)
    return _h_finite(alphabet, order, m)[m]


def _determinant(matrix: list[list[QSeries]], order: int) -> QSeries:
    n = len(matrix)
    memo: dict = {}

    def minor(row: int, cols: int) -> QSeries:
        # expansion along ``row`` using the still-unused column set ``cols``
        if row == n:
            return QSeries.one(order)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = QSeries.zero(order)
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            entry = matrix[row][j]
            if not entry.is_zero():
                term = entry * minor(row + 1, cols & ~(1 << j))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def schur_jacobi_trudi(shape: Partition, alphabet: Alphabet, order: int) -> QSeries:
    shape = tuple(x for x in shape if x)
    r = len(shape)
    if r == 0:
        return QSeries.one(order)
    top = shape[0] + r
    if isinstance(alphabet, FiniteAlphabet):
        hs = _h_finite(alphabet, order, top)
        h = lambda m: hs[m] if 0 <= m <= top else QSeries.zero(order)  # noqa: E731
    else:
        cache = {}

        def h(m):
            if m not in cache:
                cache[m] = h_complete(m, alphabet, order)
            return cache[m]

    matrix = [[h(shape[i] - i + j) for j in range(r)] for i in range(r)]
    return _determinant(matrix, order)


# -- closed forms ------------------------------------------------------------

def _hooks_and_contents(shape: Partition) -> list[tuple[int, int]]:
    conj = conjugate(shape)
    return [
        (shape[r] - c + conj[c] - r - 1, c - r)
        for r in range(len(shape))
        for c in range(shape[r])
    ]


def _n_stat(shape: Partition) -> int:
    return sum(i * part for i, part in enumerate(shape))


def _arithmetic_step(alphabet: FiniteAlphabet) -> int | None:
    e = alphabet.exponents
    if len(set(alphabet.signs)) > 1:
        return None
    if len(e) == 1:
        return 1
    d = e[1] - e[0]
    if d < 1 or any(b - a != d for a, b in zip(e, e[1:])):
        return None
    return d


def principal_product(shape: Partition, alphabet: Alphabet) -> FactoredProduct | None:
    """Hook-content product for a geometric or arithmetic-progression alphabet.

    Returns None when the Schur function vanishes (too many rows).
    """
    shape = tuple(x for x in shape if x)
    size = sum(shape)
    hc = _hooks_and_contents(shape)
    if isinstance(alphabet, GeometricAlphabet):
        t = alphabet.step
        factors = tuple((t * h, -1) for h, _ in hc)
        return FactoredProduct(1, alphabet.base * size + t * _n_stat(shape), factors)
    d = _arithmetic_step(alphabet)
    if d is None:
        raise UnsupportedClosedForm("finite alphabet is not a uniformly signed arithmetic progression")
    n = alphabet.size
    if len(shape) > n:
        return None
    sign = alphabet.signs[0] ** size
    factors = tuple((d * (n + c), 1) for _, c in hc) + tuple((d * h, -1) for h, _ in hc)
    return FactoredProduct(sign, alphabet.exponents[0] * size + d * _n_stat(shape), factors)


def schur_principal_2row(a: int, b: int, order: int) -> QSeries:
    """s_{(a+b, a)}(1, q^5, q^10, ...) by the two-row product formula."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    den = FactoredProduct.poch(5, 5, a) * FactoredProduct.poch(5, 5, b) * FactoredProduct.poch(5 * (b + 2), 5, a)
    return (FactoredProduct.monomial(5 * a) / den).expand(order)


def schur_y_2row(a: int, b: int, order: int | None = None) -> QSeries:
    """s_{(a+b, a)}(q, q^4) = q^{5a+b} (1 + q^3 + ... + q^{3b})."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    degree = 5 * a + 4 * b
    coeffs = [0] * (degree + 1)
    for k in range(b + 1):
        coeffs[5 * a + b + 3 * k] = 1
    return QSeries.polynomial(coeffs, degree if order is None else order)


def schur_closed_form(shape: Partition, alphabet: Alphabet, order: int) -> QSeries:
    shape = tuple(x for x in shape if x)
    if len(shape) <= 2:
        a = shape[1] if len(shape) == 2 else 0
        b = (shape[0] if shape else 0) - a
        if alphabet == RR5_X:
            return schur_principal_2row(a, b, order)
        if alphabet == RR5_Y:
            return schur_y_2row(a, b, order)
    if isinstance(alphabet, FiniteAlphabet) and _arithmetic_step(alphabet) is None:
        raise UnsupportedClosedForm(f"no product formula for shape {shape} over {alphabet}")
    p = principal_product(shape, alphabet)
    return QSeries.zero(order) if p is None else p.expand(order)


# -- all shapes at once --------------------------------------------------------

def _strips(mu: Partition, max_rows: int, budget: int):
    """Shapes lambda with lambda/mu a horizontal strip of size <= budget."""
    rows = list(mu) + ([0] if len(mu) < max_rows else [])
    out = []

    def rec(i: int, used: int, acc: list[int]):
        if i == len(rows):
            out.append((tuple(x for x in acc if x), used))
            return
        room = budget - used
        cap = room if i == 0 else min(room, rows[i - 1] - rows[i])
        for extra in range(cap + 1):
            acc.append(rows[i] + extra)
            rec(i + 1, used + extra, acc)
            acc.pop()

    rec(0, 0, [])
    return out


def _accumulate(dst: np.ndarray | None, src: np.ndarray, shift: int, sign: int) -> np.ndarray:
    n = len(src)
    moved = np.zeros_like(src)
    moved[shift:] = src[: n - shift]
    if sign < 0:
        moved = -moved
    if dst is None:
        return moved
    if dst.dtype == np.int64 and moved.dtype == np.int64:
        if int(np.abs(dst).max()) + int(np.abs(moved).max()) < INT64_LIMIT:
            return dst + moved
    return dst.astype(object) + moved.astype(object)


def schur_table(
    alphabet: FiniteAlphabet,
    order: int,
    max_rows: int | None = None,
    floor: Callable[[Partition], int] | None = None,
    max_size: int | None = None,
) -> dict[Partition, QSeries]:
    """s_lambda(alphabet) up to ``order`` for every lambda with <= max_rows rows.

    ``floor(lambda)`` is an extra weight the caller will add to the shape (a
    partner factor's minimum degree); states whose total minimum passes
    ``order`` are dropped.  It must be monotone under adding cells.
    """
    max_rows = alphabet.size if max_rows is None else min(max_rows, alphabet.size)
    floor = floor or (lambda lam: 0)
    if max_size is None and 0 in alphabet.exponents:
        raise ValueError("a weight-zero letter needs an explicit max_size")
    states: dict[Partition, np.ndarray] = {(): np.eye(1, order + 1, dtype=np.int64)[0]}
    for e, s in zip(alphabet.exponents, alphabet.signs):
        new: dict[Partition, np.ndarray] = {}
        for mu, arr in states.items():
            nz = np.flatnonzero(arr)
            if len(nz) == 0:
                continue
            low = int(nz[0])
            budget = (order - low) // e if e else max_size - sum(mu)
            if max_size is not None:
                budget = min(budget, max_size - sum(mu))
            for lam, t in _strips(mu, max_rows, budget):
                if low + e * t + floor(lam) > order:
                    continue
                new[lam] = _accumulate(new.get(lam), arr, e * t, s ** t)
        states = new
    return {lam: QSeries._wrap(arr) for lam, arr in sorted(states.items()) if np.any(arr != 0)}
