import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_partitions
from rrcauchy import BadResidue, FactoredProduct, PartitionConstraint, conjugate, count, expand, generate, mod5_decompose
from rrcauchy.partitions import (
    RR_FIRST_GAP,
    RR_FIRST_RESIDUES,
    RR_SECOND_GAP,
    RR_SECOND_RESIDUES,
    UNRESTRICTED,
    weight,
)


def test_generate_empty():
    assert list(generate(0, RR_FIRST_RESIDUES)) == [()]


def test_generate_residues_n4():
    assert list(generate(4, RR_FIRST_RESIDUES)) == [(4,), (1, 1, 1, 1)]


def test_generate_gap_n6():
    assert list(generate(6, RR_FIRST_GAP)) == [(6,), (5, 1), (4, 2)]


def test_count_examples():
    assert count(6, RR_FIRST_RESIDUES) == 3
    assert set(generate(6, RR_FIRST_RESIDUES)) == {(6,), (4, 1, 1), (1,) * 6}
    for c in (UNRESTRICTED, RR_FIRST_RESIDUES, RR_SECOND_GAP, PartitionConstraint(max_part=2)):
        assert count(0, c) == 1


def test_second_identity_classes_small():
    assert list(generate(5, RR_SECOND_RESIDUES)) == [(3, 2)]
    assert set(generate(7, RR_SECOND_RESIDUES)) == {(7,), (3, 2, 2)}
    assert set(generate(7, RR_SECOND_GAP)) == {(7,), (5, 2)}


def test_macmahon_counts_to_100():
    for n in range(101):
        assert count(n, RR_FIRST_RESIDUES) == count(n, RR_FIRST_GAP)
        assert count(n, RR_SECOND_RESIDUES) == count(n, RR_SECOND_GAP)


CONSTRAINTS = [
    UNRESTRICTED,
    RR_FIRST_RESIDUES,
    RR_SECOND_RESIDUES,
    RR_FIRST_GAP,
    RR_SECOND_GAP,
    PartitionConstraint(max_length=3, max_part=4),
    PartitionConstraint(min_gap=1, min_part=3),
    PartitionConstraint.residue_classes(3, (0,)),
]


@pytest.mark.parametrize("c", CONSTRAINTS)
def test_generate_matches_brute_force(c):
    for n in range(16):
        got = list(generate(n, c))
        assert len(got) == len(set(got)) == count(n, c)
        assert all(c.accepts(p) and weight(p) == n for p in got)
        want = [p for p in brute_partitions(n) if c.accepts(p)]
        assert sorted(got) == sorted(want)
        assert got == sorted(got, reverse=True)


def test_accepts_is_independent_of_generate():
    assert RR_FIRST_GAP.accepts((6, 4, 1))
    assert not RR_FIRST_GAP.accepts((6, 5))
    assert not RR_SECOND_GAP.accepts((3, 1))
    assert RR_FIRST_RESIDUES.accepts((11, 9, 6, 4, 1))
    assert not RR_FIRST_RESIDUES.accepts((5,))


@pytest.mark.parametrize(
    "c,fams",
    [
        (RR_FIRST_RESIDUES, ((1, 5, -1), (4, 5, -1))),
        (RR_SECOND_RESIDUES, ((2, 5, -1), (3, 5, -1))),
        (UNRESTRICTED, ((1, 1, -1),)),
    ],
)
def test_count_series_matches_product(c, fams):
    order = 60
    gf = expand(FactoredProduct(infinite_families=fams), order)
    assert list(gf.coeffs) == [count(n, c) for n in range(order + 1)]


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


partitions = st.lists(st.integers(1, 9), max_size=9).map(lambda xs: tuple(sorted(xs, reverse=True)))


@given(partitions)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert weight(conjugate(p)) == weight(p)


def test_mod5_decompose_examples():
    assert mod5_decompose((4,)).pairs == ((4, 0),)
    assert mod5_decompose((6, 1)).pairs == ((1, 0), (1, 5))
    assert mod5_decompose(()).pairs == ()


def test_mod5_bad_residue():
    with pytest.raises(BadResidue):
        mod5_decompose((6, 3))


def test_mod5_injective_and_weight_preserving():
    for n in range(31):
        seen = set()
        for p in generate(n, RR_FIRST_RESIDUES):
            w = mod5_decompose(p)
            assert w.is_sorted() and w.total() == n
            assert w.pairs not in seen
            seen.add(w.pairs)
