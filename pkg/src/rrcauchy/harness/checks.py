"""Named identity checks.

Each check returns an :class:`IdentityReport`.  Passing ``mutate=True``
perturbs exactly one exponent in the identity (documented per check) so the
failure path of the harness itself can be exercised.
"""
from __future__ import annotations

import functools
from bisect import bisect_left

from ..errors import InvalidParams, UnsupportedClosedForm
from ..partitions import (
    RR_FIRST_GAP,
    RR_FIRST_RESIDUES,
    RR_SECOND_GAP,
    RR_SECOND_RESIDUES,
    Partition,
    PartitionConstraint,
    conjugate,
    count,
    generate,
    mod5_decompose,
)
from ..qseries import FactoredProduct, QSeries, XYSeries, gauss_binomial, poly_mul, xy_from_pochhammer
from ..rsk import TableauPair, enumerate_pq_pairs, partition_to_pq, pq_to_partition
from ..schur import (
    Strategy,
    h_complete,
    principal_product,
    schur,
    schur_principal_2row,
    schur_table,
)
from ..tableaux import Alphabet, FiniteAlphabet, GeometricAlphabet, Tableau, rr_alphabet, validate
from .report import IdentityReport, Status, compare_series, first_of, stopwatch


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        with stopwatch() as sw:
            report = fn(*args, **kwargs)
        report.elapsed_ms = sw["ms"]
        return report

    return wrapper


def _product_side(residues: tuple[int, int], modulus: int, order: int) -> QSeries:
    den = QSeries.one(order)
    for a in residues:
        den = den * FactoredProduct.poch_inf(a, modulus).expand(order)
    return den.invert()


@_timed
def verify_rr(which: str = "first", order: int = 200, mutate: bool = False) -> IdentityReport:
    """Sum side against inverted product side of either Rogers-Ramanujan identity.

    Mutation: the product's residue 4 (first) or 3 (second) is replaced by
    3 (first) or 4 (second).
    """
    which = which.lower()
    if which not in ("first", "second"):
        raise InvalidParams("which must be 'first' or 'second'")
    linear = 0 if which == "first" else 1
    residues = (1, 4) if which == "first" else (2, 3)
    if mutate:
        residues = (1, 3) if which == "first" else (2, 4)
    lhs = QSeries.zero(order)
    n = 0
    while n * n + linear * n <= order:
        term = FactoredProduct.monomial(n * n + linear * n) / FactoredProduct.poch(1, 1, n)
        lhs = lhs + term.expand(order)
        n += 1
    rhs = _product_side(residues, 5, order)
    return compare_series("rr", {"which": 1 if which == "first" else 2}, lhs, rhs)


def rewritten_term(n: int, order: int, top: int = 4) -> QSeries:
    """q^{n^2} prod_{j<=n} (sum_{p<=top} q^{jp}) / (q^5; q^5)_n."""
    out = (FactoredProduct.monomial(n * n) / FactoredProduct.poch(5, 5, n)).expand(order)
    for j in range(1, n + 1):
        if j > order:
            break
        poly = [0] * (order + 1)
        for p in range(top + 1):
            if j * p <= order:
                poly[j * p] = 1
        out = out * QSeries(poly, order)
    return out


@_timed
def verify_rr_sum_rewrite(order: int = 100, mutate: bool = False) -> IdentityReport:
    """Termwise q^{n^2}/(q;q)_n == F_n(q) for every n with n^2 <= order.

    Mutation: the inner geometric sums stop at p = 3 instead of p = 4.
    """
    mismatches, details = [], []
    n = 0
    while n * n <= order:
        lhs = (FactoredProduct.monomial(n * n) / FactoredProduct.poch(1, 1, n)).expand(order)
        rhs = rewritten_term(n, order, 3 if mutate else 4)
        mm = lhs.first_mismatch(rhs)
        if mm is not None:
            details.append(f"n={n}: first mismatch at q^{mm[0]}")
        mismatches.append(mm)
        n += 1
    mm = first_of(mismatches)
    return IdentityReport(
        "rr-rewrite", {"terms": n}, order, Status.PASS if mm is None else Status.FAIL, mm, details=details
    )


# -- Cauchy sums ------------------------------------------------------------------

def _min_weight_fn(x: Alphabet):
    """Smallest weight of a tableau of a given shape over ``x``."""
    if isinstance(x, GeometricAlphabet):
        return lambda lam: sum(part * (x.base + r * x.step) for r, part in enumerate(lam))

    def floor(lam):
        if len(lam) > x.size:
            return 10**18
        # row r uses letters from index r onwards; the cheapest is the suffix minimum
        return sum(part * min(x.exponents[r:]) for r, part in enumerate(lam))

    return floor


def _schur_x(shape: Partition, x: Alphabet, order: int) -> QSeries:
    try:
        p = principal_product(shape, x)
    except UnsupportedClosedForm:
        return schur(shape, x, order, Strategy.JACOBI_TRUDI)
    return QSeries.zero(order) if p is None else p.expand(order)


def cauchy_sum(x: Alphabet, y: FiniteAlphabet, order: int, max_rows: int) -> QSeries:
    """sum over shapes with <= max_rows rows of s(x) s(y), truncated at ``order``.

    A shape is visited only if its minimum weight over both alphabets is at
    most ``order``; every skipped shape contributes nothing below q^{order+1}.
    """
    floor = _min_weight_fn(x)
    table = schur_table(y, order, max_rows, floor=floor)
    total = QSeries.zero(order)
    for lam, sy in table.items():
        if floor(lam) > order:
            continue
        total = total + _schur_x(lam, x, order) * sy
    return total


def cauchy_product(x: Alphabet, y: FiniteAlphabet, order: int) -> QSeries:
    """prod_{i,j} 1/(1 - x_i y_j) for unsigned alphabets."""
    if any(s != 1 for s in y.signs) or (isinstance(x, FiniteAlphabet) and any(s != 1 for s in x.signs)):
        raise InvalidParams("the Cauchy product is only formed for unsigned alphabets")
    if isinstance(x, GeometricAlphabet):
        fams = tuple((x.base + e, x.step, -1) for e in y.exponents)
        p = FactoredProduct(infinite_families=fams)
    else:
        p = FactoredProduct(finite_factors=tuple((ex + ey, -1) for ex in x.exponents for ey in y.exponents))
    return p.expand(order)


@_timed
def verify_cauchy_restricted(
    x: Alphabet,
    y: FiniteAlphabet,
    order: int,
    max_rows: int,
    mutate: bool = False,
    params: dict[str, int] | None = None,
) -> IdentityReport:
    """Row-restricted Cauchy sum against the full product (needs |y| <= max_rows).

    Mutation: the sum keeps one row fewer than requested.
    """
    if y.size > max_rows:
        raise InvalidParams(f"row bound {max_rows} is below the alphabet size {y.size}")
    rows = max_rows - 1 if mutate else max_rows
    lhs = cauchy_sum(x, y, order, rows)
    rhs = cauchy_product(x, y, order)
    return compare_series("cauchy", dict(params or {"rows": max_rows}), lhs, rhs)


def verify_cauchy_mod(k: int = 1, i: int = 2, order: int = 100, mutate: bool = False) -> IdentityReport:
    """Cauchy check at x = (1, q^M, q^2M, ...), y = rr_alphabet(k, i), M = 2k+3."""
    _check_ki(k, i)
    m = 2 * k + 3
    return verify_cauchy_restricted(
        GeometricAlphabet(0, m), rr_alphabet(k, i), order, 2 * k, mutate, {"k": k, "i": i, "rows": 2 * k}
    )


def _check_ki(k: int, i: int) -> None:
    if k < 1:
        raise InvalidParams("k must be at least 1")
    if not 1 <= i <= 2 * k + 2:
        raise InvalidParams(f"i must lie in 1..{2 * k + 2}")
    if (2 * i) % (2 * k + 3) == 0:  # pragma: no cover - impossible for odd moduli
        raise InvalidParams("i and 2k+3-i coincide")


# -- RSK ---------------------------------------------------------------------------

def _weak_bump_forward(w) -> TableauPair:
    # negative control: bumps the leftmost entry >= z instead of > z
    p, q = [], []
    for record, z in w.pairs:
        r = 0
        while True:
            if r == len(p):
                p.append([z])
                break
            j = bisect_left(p[r], z)
            if j == len(p[r]):
                p[r].append(z)
                break
            p[r][j], z = z, p[r][j]
            r += 1
        if r == len(q):
            q.append([])
        q[r].append(record)
    return TableauPair(Tableau(tuple(map(tuple, p))), Tableau(tuple(map(tuple, q))))


def _pq_ok(pq: TableauPair, n: int) -> bool:
    return (
        pq.P.shape == pq.Q.shape
        and len(pq.Q.shape) <= 2
        and validate(pq.P)
        and validate(pq.Q)
        and all(v % 5 == 0 and v >= 0 for v in pq.P.entries())
        and all(v in (1, 4) for v in pq.Q.entries())
        and pq.total() == n
    )


@_timed
def verify_proposition_rsk(n_max: int = 40, mutate: bool = False) -> IdentityReport:
    """RSK maps partitions into parts 1, 4 mod 5 bijectively onto tableau pairs.

    For each n the image set must consist of valid pairs of total n, be
    injective, invert back, and equal the independently enumerated set of
    all such pairs.  Mutation: row insertion bumps on ties.
    """
    if n_max < 0:
        raise InvalidParams("n_max must be nonnegative")
    forward = (lambda p: _weak_bump_forward(mod5_decompose(p))) if mutate else partition_to_pq
    codomain = enumerate_pq_pairs(n_max)
    mismatch, details = None, []
    for n in range(n_max + 1):
        source = generate(n, RR_FIRST_RESIDUES)
        images = [forward(p) for p in source]
        good = [pq for pq in images if _pq_ok(pq, n)]
        distinct = set(good)
        ok = len(distinct) == len(source) == count(n, RR_FIRST_RESIDUES)
        ok = ok and distinct == codomain.get(n, set())
        if ok:
            ok = all(pq_to_partition(pq) == p for p, pq in zip(source, images))
        if not ok:
            mismatch = (n, len(distinct), len(source))
            details.append(f"n={n}: {len(distinct)} valid distinct images for {len(source)} partitions")
            break
    return IdentityReport(
        "rsk", {"n_max": n_max}, n_max, Status.PASS if mismatch is None else Status.FAIL, mismatch, details=details
    )


# -- x, y weighted identity -----------------------------------------------------------

def xyrr_sides(order: int, degree_cap: int, k_step: int = 3) -> tuple[XYSeries, XYSeries]:
    lhs = xy_from_pochhammer("x", 1, 5, order, degree_cap) * xy_from_pochhammer("y", 4, 5, order, degree_cap)
    terms: dict[tuple[int, int], QSeries] = {}
    a = 0
    while 2 * a <= degree_cap and 10 * a <= order:
        b = 0
        while 2 * a + b <= degree_cap and 10 * a + b <= order:
            base = schur_principal_2row(a, b, order).shift(5 * a + b)
            for k in range(b + 1):
                key = (a + b - k, a + k)
                term = base.shift(k_step * k) if k_step * k <= order else QSeries.zero(order)
                terms[key] = terms[key] + term if key in terms else term
            b += 1
        a += 1
    return lhs, XYSeries(terms, degree_cap, order)


@_timed
def verify_xyrr(order: int = 60, degree_cap: int = 8, mutate: bool = False) -> IdentityReport:
    """x, y refinement of the first identity's Cauchy form, coefficient by coefficient.

    Mutation: the inner weight q^{3k} becomes q^{2k}.
    """
    lhs, rhs = xyrr_sides(order, degree_cap, 2 if mutate else 3)
    mm = lhs.first_mismatch(rhs)
    details = []
    if mm is not None:
        details.append(f"coefficient x^{mm[0]} y^{mm[1]} differs first at q^{mm[2]}")
        mm = mm[2:]
    elif degree_cap >= order:
        # every term of q-degree <= order is present, so x = y = 1 is exact
        collapse = lhs.collapse().first_mismatch(_product_side((1, 4), 5, order))
        if collapse is not None:
            details.append("x = y = 1 collapse disagrees with the product side")
            mm = collapse
    return IdentityReport(
        "xyrr", {"degree_cap": degree_cap}, order, Status.PASS if mm is None else Status.FAIL, mm, details=details
    )


# -- finite identity -------------------------------------------------------------------

@_timed
def verify_finite_identity(n_max: int = 30, mutate: bool = False) -> IdentityReport:
    """sum_{a<=M} [N,a](q^a - q^{N-a}) == (q;q)_N / ((q;q)_M (q;q)_{N-M-1}).

    Both sides are polynomials of degree at most N(N+1)/2, so comparing at that
    order is exact polynomial equality.  Mutation: (q;q)_{N-M-1} -> (q;q)_{N-M}.
    """
    if n_max < 1:
        raise InvalidParams("n_max must be at least 1")
    mismatch, details = None, []
    for N in range(1, n_max + 1):
        deg = N * (N + 1) // 2
        for M in range(N):
            lhs = QSeries.zero(deg)
            for a in range(M + 1):
                g = gauss_binomial(N, a, deg)
                lhs = lhs + g.shift(a) - g.shift(N - a)
            tail = N - M if mutate else N - M - 1
            rhs = (FactoredProduct.poch(1, 1, N) / (FactoredProduct.poch(1, 1, M) * FactoredProduct.poch(1, 1, tail))).expand(deg)
            mm = lhs.first_mismatch(rhs)
            if mm is not None:
                mismatch = mm
                details.append(f"N={N}, M={M}: first mismatch at q^{mm[0]}")
                break
        if mismatch is not None:
            break
    return IdentityReport(
        "finite",
        {"n_max": n_max},
        n_max * (n_max + 1) // 2,
        Status.PASS if mismatch is None else Status.FAIL,
        mismatch,
        details=details,
    )


# -- one-row sums for general modulus ----------------------------------------------------

def genthm_coefficients(k: int, i: int, mutate: bool = False) -> dict[int, FactoredProduct]:
    """Partial-fraction coefficients A_p, p in the allowed residue set, normalized.

    Mutation: 1/(1 - q^{-e}) is taken as 1/(1 - q^e), dropping the sign and shift.
    """
    _check_ki(k, i)
    allowed = rr_alphabet(k, i).exponents
    out = {}
    for p in allowed:
        diffs = [j - p for j in allowed if j != p]
        if mutate:
            diffs = [abs(d) for d in diffs]
        out[p] = FactoredProduct(finite_factors=tuple((d, -1) for d in diffs)).normalize()
    return out


def one_row_sum(k: int, i: int, order: int) -> QSeries:
    m = 2 * k + 3
    y = rr_alphabet(k, i)
    total = QSeries.zero(order)
    for lam, sy in schur_table(y, order, 1).items():
        sx = schur(lam, GeometricAlphabet(0, m), order, Strategy.CLOSED_FORM)
        total = total + sx * sy
    return total


def partial_fraction_holds(k: int, i: int, N: int, coeffs: dict[int, FactoredProduct]) -> bool:
    """sum_p A_p q^{pN} == h_N(y) as exact rational functions."""
    y = rr_alphabet(k, i)
    fracs = {p: a.as_fraction() for p, a in coeffs.items()}
    common = [1]
    for _, den in fracs.values():
        common = poly_mul(common, den)
    numer: list = [0]
    for p, (num, den) in fracs.items():
        others = [1]
        for p2, (_, d2) in fracs.items():
            if p2 != p:
                others = poly_mul(others, d2)
        term = poly_mul([0] * (p * N) + num, others)
        numer = _poly_add(numer, term)
    deg = N * max(y.exponents)
    h = list(h_complete(N, y, deg).coeffs)
    return _poly_trim(numer) == _poly_trim(poly_mul(h, common))


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [u + v for u, v in zip(a, b)]


def _poly_trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def same_rational(p: FactoredProduct, num: list, den: list) -> bool:
    n1, d1 = p.as_fraction()
    return _poly_trim(poly_mul(n1, den)) == _poly_trim(poly_mul(num, d1))


@_timed
def verify_genthm(k: int = 1, i: int = 2, order: int = 80, mutate: bool = False) -> IdentityReport:
    """One-row Cauchy sum as a sum of A_p / (q^p; q^{2k+3})_oo."""
    _check_ki(k, i)
    m = 2 * k + 3
    coeffs = genthm_coefficients(k, i, mutate)
    lhs = one_row_sum(k, i, order)
    rhs = QSeries.zero(order)
    for p, a in coeffs.items():
        rhs = rhs + (a / FactoredProduct.poch_inf(p, m)).expand(order)
    details = [f"A_{p} = {a}" for p, a in coeffs.items()]
    mm = lhs.first_mismatch(rhs)
    if mm is None:
        for N in range(11):
            if not partial_fraction_holds(k, i, N, coeffs):
                details.append(f"partial fractions fail at N={N}")
                mm = (N, "sum A_p q^pN", "h_N(y)")
                break
    if mm is None and sorted(rr_alphabet(k, i).exponents) == [1, 4]:
        expected = {1: ([1], [1, 0, 0, -1]), 4: ([0, 0, 0, -1], [1, 0, 0, -1])}
        for p, (num, den) in expected.items():
            if not same_rational(coeffs[p], num, den):
                details.append(f"A_{p} differs from the one-row product formula")
                mm = (p, str(coeffs[p]), f"{num}/{den}")
    return IdentityReport(
        "genthm", {"k": k, "i": i}, order, Status.PASS if mm is None else Status.FAIL, mm, details=details
    )


# -- dual Cauchy / Borwein -------------------------------------------------------------

BORWEIN_Y = FiniteAlphabet.of_exponents((1, 2), sign=-1)
BORWEIN_Y_UNSIGNED = FiniteAlphabet.of_exponents((1, 2))


def borwein_sum(n: int, order: int) -> QSeries:
    total = QSeries.one(order)
    if n == 0:
        return total
    x = FiniteAlphabet.of_exponents([3 * j for j in range(n)])
    for twos in range(n + 1):
        for ones in range(n - twos + 1):
            lam = (2,) * twos + (1,) * ones
            if not lam:
                continue
            sx = schur(lam, x, order, Strategy.CLOSED_FORM)
            sy = schur(conjugate(lam), BORWEIN_Y, order, Strategy.SSYT)
            unsigned = schur(conjugate(lam), BORWEIN_Y_UNSIGNED, order, Strategy.SSYT)
            if sy != unsigned * (-1) ** sum(lam):
                raise AssertionError(f"signed evaluation disagrees for {lam}")
            total = total + sx * sy
    return total


@_timed
def verify_borwein(n_max: int = 12, order: int = 60, mutate: bool = False) -> IdentityReport:
    """Dual Cauchy sum with y = (-q, -q^2) against (q; q^3)_n (q^2; q^3)_n.

    Mutation: the second factor becomes (q^3; q^3)_n.
    """
    if n_max < 0:
        raise InvalidParams("n_max must be nonnegative")
    mismatch, details = None, []
    second = 3 if mutate else 2
    for n in range(n_max + 1):
        lhs = borwein_sum(n, order)
        rhs = (FactoredProduct.poch(1, 3, n) * FactoredProduct.poch(second, 3, n)).expand(order)
        mm = lhs.first_mismatch(rhs)
        if mm is not None:
            mismatch = mm
            details.append(f"n={n}: first mismatch at q^{mm[0]}")
            break
    return IdentityReport(
        "borwein", {"n_max": n_max}, order, Status.PASS if mismatch is None else Status.FAIL, mismatch, details=details
    )


# -- MacMahon ----------------------------------------------------------------------------

@_timed
def verify_macmahon(n_max: int = 100, mutate: bool = False) -> IdentityReport:
    """Residue-class partitions and gap partitions are equinumerous for both identities.

    Mutation: the first identity's gap condition weakens to distinct parts.
    """
    if n_max < 0:
        raise InvalidParams("n_max must be nonnegative")
    first_gap = PartitionConstraint(min_gap=1) if mutate else RR_FIRST_GAP
    mismatch = None
    for n in range(n_max + 1):
        for residues, gap in ((RR_FIRST_RESIDUES, first_gap), (RR_SECOND_RESIDUES, RR_SECOND_GAP)):
            a, b = count(n, residues), count(n, gap)
            if a != b:
                mismatch = (n, a, b)
                break
        if mismatch is not None:
            break
    return IdentityReport(
        "macmahon", {"n_max": n_max}, n_max, Status.PASS if mismatch is None else Status.FAIL, mismatch
    )
