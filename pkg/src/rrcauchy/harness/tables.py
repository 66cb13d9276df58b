"""Classes of tableau pairs for the n = 1 and n = 2 sum-side terms.

Each class fixes a shape, a recording tableau Q (entries 1 and 4) and a
pattern on P (entries multiples of 5).  A one-row pattern forces the first
``zeros`` entries of P to be 0 and, optionally, the next entry to be at least
``y_min``; the remaining entries are free subject to column strictness.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..qseries import FactoredProduct, QSeries
from ..tableaux import FiniteAlphabet, GeometricAlphabet, Tableau, enumerate_ssyt, validate
from .checks import _timed
from .report import IdentityReport, Status, first_of

MULTIPLES_OF_5 = GeometricAlphabet(0, 5)
ONE_FOUR = FiniteAlphabet.of_exponents((1, 4))


@dataclass(frozen=True)
class PairClass:
    label: str
    shape: tuple[int, ...]
    q_rows: tuple[tuple[int, ...], ...]
    zeros: int = 0
    y_min: int = 0
    pattern: str = ""

    @property
    def Q(self) -> Tableau:
        return Tableau(self.q_rows)

    def admits(self, p: Tableau) -> bool:
        if len(self.shape) > 1:
            return True
        row = p.rows[0]
        if any(v != 0 for v in row[: self.zeros]):
            return False
        return len(row) <= self.zeros or row[self.zeros] >= self.y_min

    def genfun(self, order: int) -> QSeries:
        """Generating function of all (P, Q) in the class, by enumeration."""
        wq = self.Q.total()
        coeffs = [0] * (order + 1)
        if wq <= order:
            for p in enumerate_ssyt(self.shape, MULTIPLES_OF_5, order - wq):
                if self.admits(p):
                    coeffs[p.total() + wq] += 1
        return QSeries(coeffs, order)


def _row(*entries: int) -> tuple[tuple[int, ...], ...]:
    return (tuple(entries),)


def _one_row(length: int, zeros: int, fillings, y_min: int = 0, label: str | None = None):
    pattern = "(" + ",".join(["0"] * zeros + (["y", "x"] if length - zeros == 2 else ["x"])) + ")"
    if y_min:
        pattern += f", y>={y_min}"
    return [
        PairClass(label or str(length), (length,), _row(*q), zeros, y_min, pattern) for q in fillings
    ]


# (class, numerator exponent it contributes over 1 - q^5)
TABLE1: list[tuple[PairClass, int]] = list(
    zip(
        _one_row(1, 0, [(1,), (4,)]) + _one_row(2, 1, [(1, 1), (1, 4)]) + _one_row(3, 2, [(1, 1, 1)]),
        [1, 4, 2, 5, 3],
    )
)

_ONES_FOURS = {
    3: [(1, 1, 4), (1, 4, 4), (4, 4, 4)],
    4: [(1, 1, 1, 1), (1, 1, 1, 4), (1, 1, 4, 4), (1, 4, 4, 4), (4, 4, 4, 4)],
    5: [(1, 1, 1, 1, 1), (1, 1, 1, 1, 4), (1, 1, 1, 4, 4), (1, 1, 4, 4, 4)],
    6: [(1,) * 6, (1,) * 5 + (4,), (1,) * 4 + (4, 4)],
    7: [(1,) * 7, (1,) * 6 + (4,), (1,) * 5 + (4, 4)],
    8: [(1,) * 8, (1,) * 7 + (4,), (1,) * 6 + (4, 4)],
}

# (class, A) with generating function q^A / ((1 - q^5)(1 - q^10))
TABLE2: list[tuple[PairClass, int]] = list(
    zip(
        _one_row(2, 0, [(1, 1), (1, 4)], y_min=5)
        + _one_row(2, 0, [(4, 4)])
        + [c for length in range(3, 9) for c in _one_row(length, length - 2, _ONES_FOURS[length])]
        + [PairClass("(1,1)", (1, 1), ((1,), (4,)), pattern="transpose(y,x), x>y")],
        [12, 15, 8, 6, 9, 12, 4, 7, 10, 13, 16, 5, 8, 11, 14, 6, 9, 12, 7, 10, 13, 8, 11, 14, 10],
    )
)

NUMERATOR_N2 = (0, 0, 0, 0, 1, 1, 2, 2, 3, 2, 3, 2, 3, 2, 2, 1, 1)


def _table_line(cls: PairClass, a: int, wt: int | None) -> str:
    q = ",".join(map(str, (v for r in cls.q_rows for v in r)))
    q = f"({q})" if len(cls.shape) == 1 else f"transpose({q})"
    got = "none" if wt is None else str(wt)
    return f"lambda={cls.label:5s} P={cls.pattern:20s} Q={q:18s} A={a:<3d} enumerated A={got}"


def _q_ok(cls: PairClass) -> bool:
    return cls.Q.shape == cls.shape and validate(cls.Q) and all(v in (1, 4) for v in cls.Q.entries())


@_timed
def verify_table1(order: int = 60, mutate: bool = False) -> IdentityReport:
    """Each n = 1 class matches its table row and the rows sum to q/(1-q).

    Mutation: the lambda = 3 row is left out of the sum.
    """
    mismatches, details = [], []
    total = QSeries.zero(order)
    for idx, (cls, e) in enumerate(TABLE1):
        gf = cls.genfun(order)
        row = (FactoredProduct.monomial(e) / FactoredProduct.poch(5, 5, 1)).expand(order)
        mm = gf.first_mismatch(row) if _q_ok(cls) else (e, "invalid Q", str(cls.Q))
        mismatches.append(mm)
        details.append(_table_line(cls, e, gf.valuation()))
        if not (mutate and cls.shape == (3,)):
            total = total + gf
    target = (FactoredProduct.monomial(1) / FactoredProduct.poch(1, 1, 1)).expand(order)
    mismatches.append(total.first_mismatch(target))
    mm = first_of(mismatches)
    return IdentityReport("table1", {"classes": len(TABLE1)}, order, Status.PASS if mm is None else Status.FAIL, mm, details=details)


@_timed
def verify_table2(order: int = 80, mutate: bool = False) -> IdentityReport:
    """Each of the 25 n = 2 classes equals q^A/((1-q^5)(1-q^10)) with the tabulated A.

    Also checks that the A-values reproduce the displayed numerator, that the
    numerator equals q^4 (1+q+...+q^4)(1+q^2+...+q^8), and that the whole sum
    is q^4/((1-q)(1-q^2)).  Mutation: the (1,1) class is listed with A = 11.
    """
    den = FactoredProduct.poch(5, 5, 2)
    mismatches, details = [], []
    total = QSeries.zero(order)
    numerator = [0] * 17
    for cls, a in TABLE2:
        if mutate and cls.shape == (1, 1):
            a = 11
        gf = cls.genfun(order)
        row = (FactoredProduct.monomial(a) / den).expand(order)
        mismatches.append(gf.first_mismatch(row) if _q_ok(cls) else (a, "invalid Q", str(cls.Q)))
        details.append(_table_line(cls, a, gf.valuation()))
        total = total + gf
        if a < len(numerator):
            numerator[a] += 1
    if tuple(numerator) != NUMERATOR_N2:
        e = next(i for i, (u, v) in enumerate(zip(numerator, NUMERATOR_N2)) if u != v)
        mismatches.append((e, numerator[e], NUMERATOR_N2[e]))
    # q^4 (1 + q + ... + q^4)(1 + q^2 + ... + q^8)
    mod5 = QSeries.monomial(4, 16) * QSeries([1] * 5, 16) * QSeries([1, 0] * 4 + [1], 16)
    mismatches.append(mod5.first_mismatch(QSeries(NUMERATOR_N2, 16)))
    target = (FactoredProduct.monomial(4) / FactoredProduct.poch(1, 1, 2)).expand(order)
    mismatches.append(total.first_mismatch(target))
    mismatches.append((QSeries(NUMERATOR_N2, order) * (FactoredProduct() / den).expand(order)).first_mismatch(target))
    mm = first_of(mismatches)
    return IdentityReport("table2", {"classes": len(TABLE2)}, order, Status.PASS if mm is None else Status.FAIL, mm, details=details)
