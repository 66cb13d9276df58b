"""Weighted alphabets and column-strict tableaux.

Letters are integer labels.  Each label carries a weight exponent (the tableau
weight is q to the sum of entry exponents) and a sign.  A geometric alphabet
b, b+m, b+2m, ... is infinite, but a bound on the total weight keeps every
enumeration finite.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .partitions import Partition
from .qseries import QSeries


@dataclass(frozen=True)
class FiniteAlphabet:
    labels: tuple[int, ...]
    exponents: tuple[int, ...] = ()
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        labels = tuple(self.labels)
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise ValueError("finite alphabet labels must be strictly increasing")
        exps = tuple(self.exponents) or labels
        signs = tuple(self.signs) or (1,) * len(labels)
        if len(exps) != len(labels) or len(signs) != len(labels):
            raise ValueError("exponents and signs must match the labels")
        if any(e < 0 for e in exps):
            raise ValueError("weight exponents must be nonnegative")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def of_exponents(cls, exponents: Sequence[int], sign: int = 1) -> FiniteAlphabet:
        """Letters q^e for each e (labels equal exponents, sorted)."""
        exps = tuple(sorted(exponents))
        return cls(exps, exps, (sign,) * len(exps))

    @property
    def size(self) -> int:
        return len(self.labels)

    def exponent_at(self, index: int) -> int:
        return self.exponents[index]

    def sign_at(self, index: int) -> int:
        return self.signs[index]


@dataclass(frozen=True)
class GeometricAlphabet:
    """Letters b, b+m, b+2m, ... each weighted q^letter."""

    base: int
    step: int

    def __post_init__(self):
        if self.base < 0 or self.step < 1:
            raise ValueError("geometric alphabet needs base >= 0 and step >= 1")

    size = None

    def label_at(self, index: int) -> int:
        return self.base + index * self.step

    def exponent_at(self, index: int) -> int:
        return self.base + index * self.step

    def sign_at(self, index: int) -> int:
        return 1


Alphabet = Union[FiniteAlphabet, GeometricAlphabet]


def rr_alphabet(k: int, i: int) -> FiniteAlphabet:
    """q^1 .. q^{2k+2} with q^i and q^{2k+3-i} deleted."""
    if k < 1 or not 1 <= i <= 2 * k + 2:
        raise ValueError("need k >= 1 and 1 <= i <= 2k+2")
    skip = {i, 2 * k + 3 - i}
    return FiniteAlphabet.of_exponents([j for j in range(1, 2 * k + 3) if j not in skip])


def _label(a: Alphabet, index: int) -> int:
    return a.labels[index] if isinstance(a, FiniteAlphabet) else a.label_at(index)


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if len(r)))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> Iterator[int]:
        for row in self.rows:
            yield from row

    def total(self) -> int:
        return sum(self.entries())

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows if len(row) > j)

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows) or "()"


def validate(t: Tableau) -> bool:
    """True iff ``t`` is column-strict on a partition shape."""
    shape = t.shape
    if any(shape[r] < shape[r + 1] for r in range(len(shape) - 1)):
        return False
    for row in t.rows:
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
    for r in range(1, len(t.rows)):
        above = t.rows[r - 1]
        if any(t.rows[r][c] <= above[c] for c in range(len(t.rows[r]))):
            return False
    return True


def _cells(shape: Partition) -> list[tuple[int, int]]:
    return [(r, c) for r, length in enumerate(shape) for c in range(length)]


def _enumerate_indices(shape: Partition, a: Alphabet, max_weight: int):
    """Yield (index grid, weight, sign) for each tableau within the weight bound."""
    cells = _cells(shape)
    nrows = len(shape)
    finite = isinstance(a, FiniteAlphabet)
    if finite and nrows > a.size:
        return
    if finite:
        # cheapest exponent usable at or after each index
        suffix = [0] * (a.size + 1)
        suffix[a.size] = None
        best = None
        for j in range(a.size - 1, -1, -1):
            e = a.exponent_at(j)
            best = e if best is None else min(best, e)
            suffix[j] = best

        def floor_weight(idx):
            return suffix[idx]
    else:
        def floor_weight(idx):
            return a.exponent_at(idx)

    rest = [0] * (len(cells) + 1)
    for pos in range(len(cells) - 1, -1, -1):
        rest[pos] = rest[pos + 1] + floor_weight(cells[pos][0])
    if rest[0] > max_weight:
        return

    grid = [[0] * length for length in shape]

    def fill(pos: int, wt: int, sgn: int):
        if pos == len(cells):
            yield [row[:] for row in grid], wt, sgn
            return
        r, c = cells[pos]
        lo = r
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        idx = lo
        while True:
            if finite and idx >= a.size:
                return
            e = a.exponent_at(idx)
            if wt + e + rest[pos + 1] > max_weight:
                if not finite:
                    return
            else:
                grid[r][c] = idx
                yield from fill(pos + 1, wt + e, sgn * a.sign_at(idx))
            idx += 1

    yield from fill(0, 0, 1)


def enumerate_ssyt(shape: Partition, a: Alphabet, max_weight: int) -> list[Tableau]:
    """Every column-strict filling of ``shape`` over ``a`` with weight <= max_weight."""
    out = []
    for grid, _, _ in _enumerate_indices(tuple(shape), a, max_weight):
        out.append(Tableau(tuple(tuple(_label(a, j) for j in row) for row in grid)))
    return out


def weight_genfun(shape: Partition, a: Alphabet, order: int) -> QSeries:
    """Signed weight generating function of the tableaux, truncated at ``order``."""
    coeffs = [0] * (order + 1)
    for _, wt, sgn in _enumerate_indices(tuple(shape), a, order):
        coeffs[wt] += sgn
    return QSeries(coeffs, order)


def tableau_weight(t: Tableau, a: Alphabet) -> tuple[int, int]:
    """(weight exponent, sign) of ``t`` read through alphabet ``a``."""
    wt, sgn = 0, 1
    for label in t.entries():
        if isinstance(a, FiniteAlphabet):
            j = a.labels.index(label)
        else:
            j, rem = divmod(label - a.base, a.step)
            if rem or j < 0:
                raise ValueError(f"{label} is not a letter of {a}")
        wt += a.exponent_at(j)
        sgn *= a.sign_at(j)
    return wt, sgn
