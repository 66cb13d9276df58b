import json

import pytest

from rrcauchy import FactoredProduct, InvalidParams, QSeries
from rrcauchy.harness import Status, cauchy_product, probe_speculation, row_restricted_sum
from rrcauchy.harness.speculation import (
    is_full_product,
    matches_genthm,
    solution_from_report,
    trial_denominator,
)
from rrcauchy.tableaux import GeometricAlphabet, rr_alphabet


def test_trial_denominator():
    assert trial_denominator(0) == [1]
    assert trial_denominator(2) == [1, -1, -1, 1]


def test_row_restricted_full_is_product():
    order = 40
    assert row_restricted_sum(1, 2, 2, order) == cauchy_product(GeometricAlphabet(0, 5), rr_alphabet(1, 2), order)


@pytest.mark.parametrize("k,i,order", [(1, 1, 80), (1, 2, 80), (2, 2, 120), (2, 5, 120), (3, 2, 240)])
def test_one_row_recovers_partial_fractions(k, i, order):
    r = probe_speculation(k, i, 1, order)
    assert r.status is Status.PASS
    assert matches_genthm(solution_from_report(r))


@pytest.mark.parametrize("k,i", [(1, 2), (1, 1), (2, 2)])
def test_full_rows_give_coefficient_one(k, i):
    r = probe_speculation(k, i, 2 * k, 120)
    assert r.status is Status.PASS
    sol = solution_from_report(r)
    assert is_full_product(sol)
    assert sol.subsets[0][0] == rr_alphabet(k, i).exponents


def test_middle_rows_reported():
    r = probe_speculation(2, 2, 2, 120)
    assert r.status in (Status.PASS, Status.INCONCLUSIVE)
    assert r.first_mismatch is None
    assert r.details


def test_too_few_equations_is_inconclusive():
    r = probe_speculation(2, 2, 1, 20)
    assert r.status is Status.INCONCLUSIVE
    assert any("underdetermined" in d for d in r.details)


def test_repeats_widen_the_family():
    plain = probe_speculation(1, 2, 2, 60, numerator_degree=4)
    wide = probe_speculation(1, 2, 2, 60, numerator_degree=4, allow_repeats=True)
    assert plain.params == wide.params
    assert "3 subsets" in wide.details[0] and "1 subsets" in plain.details[0]


def test_solution_json_round_trip():
    r = probe_speculation(1, 2, 1, 80)
    blob = json.loads(r.to_json())
    assert blob["solution"]["R"] == 1
    assert [s["residues"] for s in blob["solution"]["subsets"]] == [[1], [4]]
    assert all(isinstance(c, str) for s in blob["solution"]["subsets"] for c in s["numerator"])


def test_solution_reproduces_sum():
    r = probe_speculation(1, 2, 1, 80)
    sol = solution_from_report(r)
    order = 80
    total = QSeries.zero(order)
    for (p,), num, den in sol.subsets:
        total = total + QSeries(num, order) * QSeries(den, order).invert() * FactoredProduct.poch_inf(p, 5).inverse().expand(order)
    assert total == row_restricted_sum(1, 2, 1, order)


@pytest.mark.parametrize("kw", [dict(k=1, i=2, R=3), dict(k=1, i=2, R=0), dict(k=1, i=5, R=1), dict(k=1, i=2, R=1, margin=0)])
def test_invalid_params(kw):
    with pytest.raises(InvalidParams):
        probe_speculation(order=40, **kw)
