"""
Factorizations
==============

Rook diagrams split into a permutation and a planar rook diagram, matching a
rook matrix factored into a permutation matrix and a pseudo-echelon one.
"""

from diagcat import (NoFactorization, decompose_rook, decompose_rook_brauer,
                     decompose_skeleton, factor, make_diagram, to_matrix)

R = make_diagram(5, 4, [[2, "1'"], [5, "2'"], [3, "4'"], [1], [4], ["3'"]])
print("rook matrix of", R)
print(to_matrix(R).text())

S, P = factor(to_matrix(R), "sp")
print("permutation part\n" + S.text())
print("pseudo-echelon part\n" + P.text())

# the same factorization on diagrams
S_d, P_d = decompose_rook(R, "sp")
print("R = S o P with\n  S =", S_d, "\n  P =", P_d)

# deleting singletons leaves the skeleton; two planar rook diagrams restore them
P1, K, P2 = decompose_skeleton(R)
print("skeleton:", K)

# rook-Brauer diagrams factor as Brauer o planar rook
D = make_diagram(8, 5, [[1], [2, "5'"], [3, 5], [4, "3'"], [6], [7, 8], ["1'", "2'"], ["4'"]])
B, P = decompose_rook_brauer(D, "bp")
print("B =", B)
print("P =", P)

# but not always as permutation o Motzkin: this bottom cap encloses a strand
bad = make_diagram(3, 3, [[1, 3], [2, "2'"], ["1'", "3'"]])
try:
    decompose_rook_brauer(bad, "sm")
except NoFactorization as exc:
    print("no S o M form:", exc)
