import numpy as np
import pytest

from diagcat import (FactorMode, Family, NotARookDiagram, RookMatrix, compose, factor,
                     from_matrix, identity, is_family, is_planar, is_pseudo_echelon,
                     make_diagram, star, to_matrix)
from diagcat.enumeration import enumerate_diagrams

ROOK = make_diagram(5, 4, [[2, "1'"], [5, "2'"], [3, "4'"], [1], [4], ["3'"]])
WORKED_D = RookMatrix.from_rows(["01000", "00001", "00000", "00100"])
WORKED_P = RookMatrix.from_rows(["01000", "00100", "00000", "00001"])


def test_worked_matrix():
    assert to_matrix(ROOK) == WORKED_D
    assert WORKED_D.text() == "01000\n00001\n00000\n00100"
    assert from_matrix(WORKED_D) == ROOK


def test_simple_matrices():
    assert to_matrix(identity(3)) == RookMatrix.identity(3)
    lonely = make_diagram(3, 2, [[1], [2], [3], ["1'"], ["2'"]])
    assert (to_matrix(lonely).to_array() == np.zeros((2, 3))).all()
    with pytest.raises(NotARookDiagram):
        to_matrix(make_diagram(2, 0, [[1, 2]]))


def test_rook_matrix_validation():
    with pytest.raises(ValueError):
        RookMatrix.from_rows(["11", "00"])
    with pytest.raises(ValueError):
        RookMatrix.from_array([[2]])
    with pytest.raises(ValueError):
        RookMatrix(1, 1, frozenset({(2, 1)}))


def test_pseudo_echelon_examples():
    assert is_pseudo_echelon(WORKED_P)
    assert not is_pseudo_echelon(WORKED_D)
    assert is_pseudo_echelon(RookMatrix(3, 2, frozenset()))


def test_worked_factorization():
    S, P = factor(WORKED_D, FactorMode.SP)
    assert P == WORKED_P
    assert S == RookMatrix(4, 4, frozenset({(1, 1), (2, 4), (3, 3), (4, 2)}))
    assert (S.to_array() @ P.to_array() == WORKED_D.to_array()).all()
    P2, S2 = factor(WORKED_D, FactorMode.PS)
    assert P2 == WORKED_P
    assert (P2.to_array() @ S2.to_array() == WORKED_D.to_array()).all()


def test_factor_edge_cases():
    S, P = factor(WORKED_P, "sp")
    assert S == RookMatrix.identity(4) and P == WORKED_P
    perm = RookMatrix.from_rows(["001", "100", "010"])
    S, P = factor(perm, "sp")
    assert S == perm and P == RookMatrix.identity(3)


def test_planar_iff_pseudo_echelon_and_transpose():
    for k in range(5):
        for l in range(5):
            for D in enumerate_diagrams(Family.ROOK, k, l):
                M = to_matrix(D)
                assert is_planar(D) == is_pseudo_echelon(M)
                assert to_matrix(star(D)) == M.T
                assert from_matrix(M) == D
                for mode in ("sp", "ps"):
                    a, b = factor(M, mode)
                    P = b if mode == "sp" else a
                    S = a if mode == "sp" else b
                    assert is_pseudo_echelon(P) and S.is_permutation()
                    assert P == factor(M, "sp")[1]


def test_composition_is_matrix_product():
    for k in range(4):
        basis = enumerate_diagrams(Family.ROOK, k, k)
        for A in basis:
            for B in basis:
                _, C = compose(A, B)
                assert to_matrix(C) == to_matrix(A) @ to_matrix(B)
