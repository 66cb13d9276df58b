"""Exact ansatz fitting for row-restricted Cauchy sums at modulus 2k+3.

The sum over shapes with at most R rows is matched against

    sum_T  c_T(q) * prod_{j in T} 1 / (q^j; q^{2k+3})_oo

where T runs over R-element subsets of the allowed residues and every c_T is
an unknown numerator polynomial over a fixed trial denominator
prod_{d <= D} (1 - q^d).  The numerator coefficients are solved for exactly
on the low coefficients and the fit is then checked on a withheld top slice.
Failing to fit is reported as inconclusive: the ansatz family may simply be
too small.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import InvalidParams
from ..qseries import FactoredProduct, QSeries, poly_mul
from ..tableaux import GeometricAlphabet, rr_alphabet
from .checks import _check_ki, _poly_trim, _timed, cauchy_sum, genthm_coefficients, same_rational
from .report import IdentityReport, Status


@dataclass
class SpeculationSolution:
    k: int
    i: int
    R: int
    subsets: list[tuple[tuple[int, ...], list[Fraction], list[int]]]
    residual_order: int

    def coefficient(self, subset: tuple[int, ...]) -> tuple[list[Fraction], list[int]]:
        for t, num, den in self.subsets:
            if t == subset:
                return num, den
        raise KeyError(subset)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "R": self.R,
            "residual_order": self.residual_order,
            "subsets": [
                {
                    "residues": list(t),
                    "numerator": [str(c) for c in num],
                    "denominator": [str(c) for c in den],
                }
                for t, num, den in self.subsets
            ],
        }


def row_restricted_sum(k: int, i: int, R: int, order: int) -> QSeries:
    return cauchy_sum(GeometricAlphabet(0, 2 * k + 3), rr_alphabet(k, i), order, R)


def trial_denominator(D: int) -> list[int]:
    den = [1]
    for d in range(1, D + 1):
        den = poly_mul(den, [1] + [0] * (d - 1) + [-1])
    return den


def _solve(rows: list[list[int]], rhs: list[int], ncols: int):
    """Unique exact solution, or a reason string."""
    if len(rows) < ncols:
        return f"underdetermined: {len(rows)} equations for {ncols} unknowns"
    aug = DomainMatrix([[QQ(v) for v in row] + [QQ(b)] for row, b in zip(rows, rhs)], (len(rows), ncols + 1), QQ)
    reduced, pivots = aug.rref()
    if ncols in pivots:
        return "no solution in the ansatz family"
    if len(pivots) < ncols:
        return f"underdetermined: rank {len(pivots)} for {ncols} unknowns"
    dense = reduced.to_Matrix()
    return [Fraction(int(dense[r, ncols].p), int(dense[r, ncols].q)) for r in range(ncols)]


def _polynomial_tail(coeffs: list) -> list:
    return _poly_trim(coeffs) or [0]


def fit_ansatz(
    target: QSeries,
    subsets: list[tuple[int, ...]],
    modulus: int,
    denominator: list[int],
    numerator_degree: int,
    margin: int,
):
    """Solve denominator * target == sum_T n_T * P_T on exponents 0..order-margin."""
    order = target.order
    fit_top = order - margin
    lhs = QSeries(poly_mul(denominator, target.coeffs)[: order + 1], order)
    products = [
        FactoredProduct(infinite_families=tuple((j, modulus, -1) for j in t)).normalize().expand(order)
        for t in subsets
    ]
    width = numerator_degree + 1
    ncols = len(subsets) * width
    rows = []
    for e in range(fit_top + 1):
        row = []
        for prod in products:
            row.extend(prod[e - s] if e >= s else 0 for s in range(width))
        rows.append(row)
    sol = _solve(rows, list(lhs.coeffs[: fit_top + 1]), ncols)
    if isinstance(sol, str):
        return sol
    numerators = [sol[n * width : (n + 1) * width] for n in range(len(subsets))]
    fitted = QSeries.zero(order)
    for num, prod in zip(numerators, products):
        fitted = fitted + QSeries(num, order) * prod
    mm = fitted.first_mismatch(lhs)
    if mm is not None:
        return f"fit breaks on withheld coefficient q^{mm[0]}"
    return numerators


@_timed
def probe_speculation(
    k: int,
    i: int,
    R: int,
    order: int = 120,
    denominator_degree: int | None = None,
    numerator_degree: int | None = None,
    margin: int | None = None,
    allow_repeats: bool = False,
) -> IdentityReport:
    """Try to write the at-most-R-rows Cauchy sum as rational combinations of R-fold products."""
    _check_ki(k, i)
    if not 1 <= R <= 2 * k:
        raise InvalidParams(f"R must lie in 1..{2 * k}")
    D = 2 * k + 1 if denominator_degree is None else denominator_degree
    if D < 0:
        raise InvalidParams("denominator degree must be nonnegative")
    den = trial_denominator(D)
    E = len(den) - 1 if numerator_degree is None else numerator_degree
    margin = max(1, math.ceil(0.2 * order)) if margin is None else margin
    if not 0 < margin <= order:
        raise InvalidParams("margin must lie in 1..order")
    m = 2 * k + 3
    allowed = rr_alphabet(k, i).exponents
    pick = combinations_with_replacement if allow_repeats else combinations
    subsets = list(pick(allowed, R))
    params = {"k": k, "i": i, "R": R, "D": D, "E": E}
    details = [f"{len(subsets)} subsets x {E + 1} numerator coefficients, fit on q^0..q^{order - margin}"]
    target = row_restricted_sum(k, i, R, order)
    result = fit_ansatz(target, subsets, m, den, E, margin)
    if isinstance(result, str):
        details.append(result)
        return IdentityReport("speculation", params, order, Status.INCONCLUSIVE, details=details)
    solution = SpeculationSolution(
        k, i, R, [(t, _polynomial_tail(num), den) for t, num in zip(subsets, result)], order
    )
    for t, num, _ in solution.subsets:
        details.append(f"T={t}: numerator [{', '.join(map(str, num))}] over prod_(d<={D}) (1-q^d)")
    return IdentityReport("speculation", params, order, Status.PASS, solution=solution.to_dict(), details=details)


def solution_from_report(report: IdentityReport) -> SpeculationSolution:
    s = report.solution
    subsets = [
        (tuple(item["residues"]), [Fraction(c) for c in item["numerator"]], [int(c) for c in item["denominator"]])
        for item in s["subsets"]
    ]
    return SpeculationSolution(s["k"], s["i"], s["R"], subsets, s["residual_order"])


def matches_genthm(solution: SpeculationSolution) -> bool:
    """R = 1 coefficients equal the partial-fraction A_p as rational functions."""
    coeffs = genthm_coefficients(solution.k, solution.i)
    for (p,), num, den in solution.subsets:
        if not same_rational(coeffs[p], num, den):
            return False
    return len(solution.subsets) == len(coeffs)


def is_full_product(solution: SpeculationSolution) -> bool:
    """R = 2k: one subset, coefficient exactly 1."""
    if len(solution.subsets) != 1:
        return False
    _, num, den = solution.subsets[0]
    return _poly_trim(list(num)) == _poly_trim(list(den))
