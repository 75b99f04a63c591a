"""Rook matrices: 0/1 matrices with at most one 1 in every row and column.

A rook diagram ``D: k -> l`` corresponds to the ``l x k`` matrix with a 1 at
``(q, p)`` for every block ``{p, q'}``.  Planar rook diagrams are exactly the
matrices whose nonzero entries move strictly rightward going down.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .diagram import Diagram, Family, Row, is_family, make_diagram
from .errors import NotARookDiagram

__all__ = [
    "RookMatrix", "FactorMode",
    "to_matrix", "from_matrix", "is_pseudo_echelon", "factor",
]


@dataclass(frozen=True)
class RookMatrix:
    rows: int
    cols: int
    entries: frozenset  # 1-based (row, col) positions holding 1

    def __post_init__(self):
        rs = [r for r, _ in self.entries]
        cs = [c for _, c in self.entries]
        if len(set(rs)) != len(rs) or len(set(cs)) != len(cs):
            raise ValueError("two rooks share a row or column")
        if any(not (1 <= r <= self.rows and 1 <= c <= self.cols) for r, c in self.entries):
            raise ValueError("entry outside the matrix")

    @classmethod
    def from_array(cls, a) -> "RookMatrix":
        a = np.asarray(a)
        if a.ndim != 2 or not np.isin(a, (0, 1)).all():
            raise ValueError("rook matrix entries must be 0 or 1")
        rows, cols = a.shape
        entries = frozenset((int(r) + 1, int(c) + 1) for r, c in zip(*np.nonzero(a)))
        return cls(rows, cols, entries)

    @classmethod
    def from_rows(cls, text_rows) -> "RookMatrix":
        """Build from strings like ``["01000", "00001"]``."""
        return cls.from_array([[int(ch) for ch in row.strip()] for row in text_rows])

    @classmethod
    def identity(cls, n: int) -> "RookMatrix":
        return cls(n, n, frozenset((i, i) for i in range(1, n + 1)))

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=np.int64)
        for r, c in self.entries:
            a[r - 1, c - 1] = 1
        return a

    @property
    def rank(self) -> int:
        return len(self.entries)

    def transpose(self) -> "RookMatrix":
        return RookMatrix(self.cols, self.rows, frozenset((c, r) for r, c in self.entries))

    @property
    def T(self) -> "RookMatrix":
        return self.transpose()

    def is_permutation(self) -> bool:
        return self.rows == self.cols == self.rank

    def __matmul__(self, other: "RookMatrix") -> "RookMatrix":
        return RookMatrix.from_array(self.to_array() @ other.to_array())

    def text(self) -> str:
        return "\n".join("".join(str(x) for x in row) for row in self.to_array())

    def __str__(self) -> str:
        return self.text()


class FactorMode(enum.Enum):
    SP = "sp"  # M = S P, permutation on the left
    PS = "ps"  # M = P S, permutation on the right


def to_matrix(D: Diagram) -> RookMatrix:
    if not is_family(D, Family.ROOK):
        raise NotARookDiagram(f"{D} is not a rook diagram")
    entries = set()
    for block in D.blocks:
        if len(block) == 2:
            p, q = block  # canonical order puts the bottom vertex first
            entries.add((q.index, p.index))
    return RookMatrix(D.top, D.bottom, frozenset(entries))


def from_matrix(M: RookMatrix) -> Diagram:
    blocks = [[c, f"{r}'"] for r, c in M.entries]
    used_cols = {c for _, c in M.entries}
    used_rows = {r for r, _ in M.entries}
    blocks += [[c] for c in range(1, M.cols + 1) if c not in used_cols]
    blocks += [[f"{r}'"] for r in range(1, M.rows + 1) if r not in used_rows]
    return make_diagram(M.cols, M.rows, blocks)


def is_pseudo_echelon(M: RookMatrix) -> bool:
    cols = [c for _, c in sorted(M.entries)]
    return all(a < b for a, b in zip(cols, cols[1:]))


def _factor_sp(M: RookMatrix) -> tuple[RookMatrix, RookMatrix]:
    rows = sorted(r for r, _ in M.entries)
    cols = sorted(c for _, c in M.entries)
    P = RookMatrix(M.rows, M.cols, frozenset(zip(rows, cols)))
    # P carries column cols[i] in row rows[i]; S moves that row to where M has it
    row_of_col = {c: r for r, c in M.entries}
    moved = {q: row_of_col[p] for q, p in zip(rows, cols)}
    S = RookMatrix(M.rows, M.rows,
                   frozenset((moved.get(q, q), q) for q in range(1, M.rows + 1)))
    return S, P


def factor(M: RookMatrix, mode: FactorMode = FactorMode.SP) -> tuple[RookMatrix, RookMatrix]:
    """Split ``M`` into a permutation matrix and a pseudo-echelon matrix.

    ``SP`` returns ``(S, P)`` with ``M == S @ P``; ``PS`` returns ``(P, S)``
    with ``M == P @ S``.  In both modes ``P`` is the unique pseudo-echelon
    matrix with the same zero rows and columns as ``M``.
    """
    mode = FactorMode(mode)
    if mode is FactorMode.SP:
        S, P = _factor_sp(M)
        out = (S, P)
    else:
        S, P = _factor_sp(M.transpose())
        out = (P.transpose(), S.transpose())
    a, b = out
    assert np.array_equal(a.to_array() @ b.to_array(), M.to_array())
    return out
