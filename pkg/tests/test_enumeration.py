import pytest

from diagcat import (EMPTY, Family, closed_form_count, closure_check, count, enumerate_diagrams,
                     multiplication_table, sharp, star)

from oracles import all_partitions, family_oracle


def test_empty_type():
    for f in Family:
        assert enumerate_diagrams(f, 0, 0) == [EMPTY]


def test_counts():
    assert count(Family.PLANAR_ROOK, 2, 2) == 6
    assert enumerate_diagrams(Family.BRAUER, 2, 1) == []
    assert count(Family.ROOK, 3, 3) == 34
    assert count(Family.MOTZKIN, 2, 2) == 9
    assert count(Family.PARTITION, 2, 2) == 15
    dims = {Family.PARTITION: 15, Family.ROOK_BRAUER: 10, Family.MOTZKIN: 9, Family.ROOK: 7,
            Family.PLANAR_ROOK: 6, Family.BRAUER: 3, Family.TEMPERLEY_LIEB: 2}
    for f, n in dims.items():
        assert count(f, 2, 2) == n


@pytest.mark.parametrize("family", list(Family))
def test_generators_agree(family):
    limit = 3 if family in (Family.PARTITION, Family.PLANAR_PARTITION) else 4
    for k in range(limit + 1):
        for l in range(limit + 1):
            direct = enumerate_diagrams(family, k, l)
            assert direct == enumerate_diagrams(family, k, l, method="filter")
            assert len(direct) == closed_form_count(family, k, l)
            assert all(a < b for a, b in zip(direct, direct[1:]))
            assert count(family, k, l) == count(family, l, k)
            assert sorted(sharp(D) for D in direct) == direct
            assert sorted(star(D) for D in direct) == enumerate_diagrams(family, l, k)


def test_filter_matches_brute_force_oracle():
    for k in range(3):
        for l in range(3):
            everything = all_partitions(k, l)
            for f in Family:
                want = [D for D in everything if family_oracle(D, f.value)]
                assert enumerate_diagrams(f, k, l, method="filter") == want


def test_closure_examples():
    rep = closure_check(Family.PLANAR_ROOK, 2, 2, 2)
    assert rep.pairs == 36 and rep.ok
    rep = closure_check(Family.MOTZKIN, 1, 1, 1)
    assert rep.pairs == 4 and rep.ok
    rep = closure_check(Family.PARTITION, 0, 0, 0)
    assert rep.pairs == 1 and rep.alpha_histogram == {0: 1}


def test_closure_counts_loops():
    rep = closure_check(Family.TEMPERLEY_LIEB, 2, 2, 2)
    assert rep.ok and rep.pairs == 4
    assert rep.alpha_histogram == {0: 3, 1: 1}


def test_multiplication_table():
    basis, table = multiplication_table(Family.TEMPERLEY_LIEB, 2)
    assert len(basis) == 2
    cap_cup = [i for i, D in enumerate(basis) if D.labels == (0, 0, 1, 1)][0]
    assert table[cap_cup][cap_cup] == (1, cap_cup)


def test_unknown_method():
    with pytest.raises(ValueError):
        enumerate_diagrams(Family.ROOK, 1, 1, method="magic")
