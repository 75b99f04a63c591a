import itertools

import pytest

from diagcat import (Diagram, Family, FamilyMismatch, NoFactorization, NotARookBrauerDiagram,
                     NotARookDiagram, compose, decompose_rook, decompose_rook_brauer,
                     decompose_skeleton, decompose_via_skeleton_family, identity, is_family,
                     make_diagram, recompose, skeleton)
from diagcat.enumeration import enumerate_diagrams
from diagcat.presentations import GeneratorAtom, atom_diagram

FIG1 = make_diagram(7, 5, [[1, 3, "1'"], [2, 4], [5, "3'", "5'"], [7, "2'"], [6], ["4'"]])
ROOK = make_diagram(5, 4, [[2, "1'"], [5, "2'"], [3, "4'"], [1], [4], ["3'"]])
# worked Brauer o planar rook example
BP_EXAMPLE = make_diagram(8, 5, [[1], [2, "5'"], [3, 5], [4, "3'"], [6], [7, 8],
                                 ["1'", "2'"], ["4'"]])
# a bottom cap around a strand and a top cup around it: no S o M or M o S form
NO_SM = make_diagram(3, 3, [[1, 3], [2, "2'"], ["1'", "3'"]])


def test_skeleton_decomposition_example():
    P1, S, P2 = decompose_skeleton(FIG1)
    assert S == skeleton(FIG1)[0]
    assert P2 == make_diagram(7, 6, [[1, "1'"], [2, "2'"], [3, "3'"], [4, "4'"], [5, "5'"],
                                     [6], [7, "6'"]])
    assert P1 == make_diagram(4, 5, [[1, "1'"], [2, "2'"], [3, "3'"], [4, "5'"], ["4'"]])
    assert recompose(P1, S, P2) == (0, FIG1)


def test_skeleton_decomposition_edge_cases():
    assert decompose_skeleton(identity(3)) == (identity(3),) * 3
    lonely = make_diagram(2, 3, [[1], [2], ["1'"], ["2'"], ["3'"]])
    P1, S, P2 = decompose_skeleton(lonely)
    assert S == identity(0)
    assert P2 == make_diagram(2, 0, [[1], [2]])
    assert P1 == make_diagram(0, 3, [["1'"], ["2'"], ["3'"]])
    M = make_diagram(2, 2, [[1, "1'"], [2], ["2'"]])
    P1, core, P2 = decompose_via_skeleton_family(M, Family.MOTZKIN)
    assert core == identity(1)
    assert P2 == make_diagram(2, 1, [[1, "1'"], [2]])
    assert P1 == make_diagram(1, 2, [[1, "1'"], ["2'"]])
    tl = make_diagram(2, 2, [[1, 2], ["1'", "2'"]])
    assert decompose_via_skeleton_family(tl, "motzkin") == (identity(2), tl, identity(2))
    P1, core, P2 = decompose_via_skeleton_family(ROOK, Family.ROOK)
    assert core.type == (3, 3) and is_family(core, Family.PERMUTATION)
    with pytest.raises(FamilyMismatch):
        decompose_via_skeleton_family(FIG1, Family.ROOK)


def test_rook_decomposition_examples():
    S, P = decompose_rook(ROOK, "sp")
    assert is_family(S, Family.PERMUTATION) and is_family(P, Family.PLANAR_ROOK)
    assert compose(S, P) == (0, ROOK)
    planar = make_diagram(2, 2, [[1, "1'"], [2], ["2'"]])
    assert decompose_rook(planar, "sp")[0] == identity(2)
    swap = make_diagram(2, 2, [[1, "2'"], [2, "1'"]])
    assert decompose_rook(swap, "sp") == (swap, identity(2))
    with pytest.raises(NotARookDiagram):
        decompose_rook(FIG1)


def test_brauer_planar_example():
    B, P = decompose_rook_brauer(BP_EXAMPLE, "bp")
    assert is_family(B, Family.BRAUER) and is_family(P, Family.PLANAR_ROOK)
    assert compose(B, P) == (0, BP_EXAMPLE)
    P, B = decompose_rook_brauer(BP_EXAMPLE, "pb")
    assert is_family(B, Family.BRAUER) and is_family(P, Family.PLANAR_ROOK)
    assert compose(P, B) == (0, BP_EXAMPLE)
    brauer = make_diagram(2, 2, [[1, "2'"], [2, "1'"]])
    assert decompose_rook_brauer(brauer, "bp") == (brauer, identity(2))


def test_permutation_motzkin_examples():
    eps = atom_diagram(GeneratorAtom.EPS)
    assert decompose_rook_brauer(eps, "sm") == (identity(0), eps)
    S, M = decompose_rook_brauer(Diagram.from_labels(3, 3, (0, 1, 2, 1, 0, 2)), "sm")
    assert is_family(S, Family.PERMUTATION) and is_family(M, Family.MOTZKIN)
    with pytest.raises(NotARookBrauerDiagram):
        decompose_rook_brauer(FIG1, "bp")


def _sm_exists(D):
    from diagcat.category import compose as comp
    for p in itertools.permutations(range(D.top)):
        S = make_diagram(D.top, D.top, [[i + 1, f"{p[i] + 1}'"] for i in range(D.top)])
        if is_family(comp(S, D)[1], Family.MOTZKIN):
            return True
    return False


def test_sm_fails_exactly_when_no_factorization_exists():
    with pytest.raises(NoFactorization):
        decompose_rook_brauer(NO_SM, "sm")
    with pytest.raises(NoFactorization):
        decompose_rook_brauer(NO_SM, "ms")
    for k in range(4):
        for l in range(4):
            for D in enumerate_diagrams(Family.ROOK_BRAUER, k, l):
                exists = _sm_exists(D)
                try:
                    S, M = decompose_rook_brauer(D, "sm")
                except NoFactorization:
                    assert not exists, D
                else:
                    assert exists
                    assert is_family(S, Family.PERMUTATION) and is_family(M, Family.MOTZKIN)
                    assert compose(S, M) == (0, D)


@pytest.mark.parametrize("family", [Family.PLANAR_ROOK, Family.ROOK, Family.ROOK_BRAUER,
                                    Family.MOTZKIN])
def test_round_trips(family):
    for k in range(5):
        for l in range(5):
            for D in enumerate_diagrams(family, k, l):
                assert recompose(*decompose_skeleton(D)) == (0, D)
                if is_family(D, Family.ROOK):
                    for mode in ("sp", "ps"):
                        assert recompose(*decompose_rook(D, mode)) == (0, D)
                for mode in ("bp", "pb"):
                    first, second = decompose_rook_brauer(D, mode)
                    B, P = (first, second) if mode == "bp" else (second, first)
                    assert is_family(B, Family.BRAUER) and is_family(P, Family.PLANAR_ROOK)
                    assert compose(first, second) == (0, D)
