"""Partition diagrams in canonical form, plus the family predicates.

A diagram of type k -> l is a set partition of the k bottom vertices
``1..k`` and the l top vertices ``1'..l'``.  Internally a diagram is stored as
a restricted growth string over the flat vertex order (bottom 1..k, then top
1..l): vertex number ``n`` carries the label of its block, and blocks are
numbered by first appearance.  Because the flat order agrees with the
canonical vertex order (Bottom before Top, then index), two diagrams are the
same set partition exactly when their label strings agree.

>>> D = make_diagram(2, 2, [[1, "2'"], [2, "1'"]])
>>> D
Diagram(2 -> 2 ; {1,2'},{2,1'})
>>> is_family(D, Family.ROOK), is_planar(D)
(True, False)
"""

from __future__ import annotations

import enum
from functools import total_ordering
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import NotAPartition, OutOfRange

__all__ = [
    "Row", "Vertex", "Diagram", "Family",
    "make_diagram", "is_family", "is_planar", "boundary_positions",
]


class Row(enum.IntEnum):
    BOTTOM = 0
    TOP = 1


class Vertex(NamedTuple):
    row: Row
    index: int

    def __str__(self) -> str:
        return f"{self.index}'" if self.row == Row.TOP else str(self.index)

    @classmethod
    def parse(cls, spec: "VertexLike") -> "Vertex":
        """Accept a Vertex, ``(row, index)``, a bare int (bottom) or "3"/"3'"."""
        if isinstance(spec, Vertex):
            return spec
        if isinstance(spec, bool):
            raise TypeError(f"not a vertex: {spec!r}")
        if isinstance(spec, int):
            return cls(Row.BOTTOM, spec)
        if isinstance(spec, str):
            s = spec.strip()
            top = s.endswith(("'", "′"))
            if top:
                s = s[:-1]
            if not s.isdigit():
                raise ValueError(f"not a vertex: {spec!r}")
            return cls(Row.TOP if top else Row.BOTTOM, int(s))
        row, index = spec
        return cls(Row(row), int(index))


VertexLike = Union[Vertex, int, str, "tuple[int, int]"]


class Family(enum.Enum):
    PARTITION = "partition"
    PLANAR_PARTITION = "planar-partition"
    BRAUER = "brauer"
    TEMPERLEY_LIEB = "temperley-lieb"
    ROOK_BRAUER = "rook-brauer"
    MOTZKIN = "motzkin"
    ROOK = "rook"
    PLANAR_ROOK = "planar-rook"
    PERMUTATION = "permutation"

    @classmethod
    def from_name(cls, name: str) -> "Family":
        key = name.strip().lower().replace("_", "-")
        aliases = {"tl": "temperley-lieb", "rb": "rook-brauer", "pr": "planar-rook",
                   "pp": "planar-partition", "sym": "permutation", "par": "partition"}
        key = aliases.get(key, key)
        for f in cls:
            if f.value == key:
                return f
        raise ValueError(f"unknown family {name!r}")


def _relabel(labels: Iterable[int]) -> tuple[int, ...]:
    """Renumber block labels by first appearance."""
    seen: dict[int, int] = {}
    out = []
    for a in labels:
        b = seen.get(a)
        if b is None:
            b = seen[a] = len(seen)
        out.append(b)
    return tuple(out)


@total_ordering
class Diagram:
    """Immutable canonical partition diagram ``bottom -> top``."""

    __slots__ = ("bottom", "top", "labels", "_blocks", "_hash", "_key")

    def __init__(self, bottom: int, top: int, labels: Sequence[int]):
        # labels must already be a restricted growth string of length bottom+top
        self.bottom = bottom
        self.top = top
        self.labels = tuple(labels)
        self._blocks = None
        self._hash = None
        self._key = None

    @classmethod
    def from_labels(cls, bottom: int, top: int, labels: Iterable[int]) -> "Diagram":
        labels = _relabel(labels)
        if len(labels) != bottom + top:
            raise NotAPartition(f"expected {bottom + top} labels, got {len(labels)}")
        return cls(bottom, top, labels)

    @property
    def type(self) -> tuple[int, int]:
        return self.bottom, self.top

    @property
    def size(self) -> int:
        return self.bottom + self.top

    @property
    def n_blocks(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    @property
    def blocks(self) -> tuple[tuple[Vertex, ...], ...]:
        if self._blocks is None:
            k = self.bottom
            groups: list[list[Vertex]] = [[] for _ in range(self.n_blocks)]
            for n, a in enumerate(self.labels):
                v = Vertex(Row.BOTTOM, n + 1) if n < k else Vertex(Row.TOP, n - k + 1)
                groups[a].append(v)
            self._blocks = tuple(tuple(g) for g in groups)
        return self._blocks

    def block_sizes(self) -> list[int]:
        sizes = [0] * self.n_blocks
        for a in self.labels:
            sizes[a] += 1
        return sizes

    def sort_key(self):
        if self._key is None:
            self._key = (self.bottom, self.top,
                         tuple(tuple((int(v.row), v.index) for v in b) for b in self.blocks))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return (self.bottom == other.bottom and self.top == other.top
                and self.labels == other.labels)

    def __lt__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.bottom, self.top, self.labels))
        return self._hash

    def __reduce__(self):
        return (Diagram, (self.bottom, self.top, self.labels))

    def __str__(self) -> str:
        body = ",".join("{" + ",".join(str(v) for v in b) + "}" for b in self.blocks)
        return f"{self.bottom} -> {self.top} ;" + (f" {body}" if body else "")

    def __repr__(self) -> str:
        return f"Diagram({self})"


def make_diagram(bottom: int, top: int, blocks: Iterable[Iterable[VertexLike]]) -> Diagram:
    """Build the canonical diagram with the given blocks.

    Every one of the ``bottom + top`` vertices must be listed exactly once;
    missing vertices are an error rather than being completed as singletons.
    """
    if bottom < 0 or top < 0:
        raise OutOfRange("vertex counts must be nonnegative")
    n = bottom + top
    labels = [-1] * n
    for b, block in enumerate(blocks):
        members = [Vertex.parse(v) for v in block]
        if not members:
            raise NotAPartition("empty block")
        for v in members:
            limit = bottom if v.row == Row.BOTTOM else top
            if not 1 <= v.index <= limit:
                raise OutOfRange(f"vertex {v} out of range for type {bottom} -> {top}")
            pos = v.index - 1 if v.row == Row.BOTTOM else bottom + v.index - 1
            if labels[pos] != -1:
                raise NotAPartition(f"vertex {v} listed twice")
            labels[pos] = b
    missing = [n_ for n_, a in enumerate(labels) if a == -1]
    if missing:
        names = [str(Vertex(Row.BOTTOM, m + 1) if m < bottom else Vertex(Row.TOP, m - bottom + 1))
                 for m in missing]
        raise NotAPartition("vertices not covered: " + ", ".join(names))
    return Diagram(bottom, top, _relabel(labels))


def boundary_positions(D: Diagram) -> list[int]:
    """Position of each flat vertex along the boundary: bottom 1..k, then top l..1."""
    k, l = D.bottom, D.top
    return list(range(k)) + [k + l - 1 - j for j in range(l)]


def is_planar(D: Diagram) -> bool:
    """Non-crossing test along the boundary order, one pass with a stack."""
    k, l = D.bottom, D.top
    labels = D.labels
    seq = labels[:k] + labels[k:][::-1]
    remaining = D.block_sizes()
    stack: list[int] = []
    opened = [False] * len(remaining)
    for a in seq:
        remaining[a] -= 1
        if opened[a]:
            if stack[-1] != a:
                return False
            if remaining[a] == 0:
                stack.pop()
        elif remaining[a] > 0:
            opened[a] = True
            stack.append(a)
    return True


def _is_rook_brauer(D: Diagram) -> bool:
    return all(s <= 2 for s in D.block_sizes())


def _is_brauer(D: Diagram) -> bool:
    return all(s == 2 for s in D.block_sizes())


def _is_rook(D: Diagram) -> bool:
    k = D.bottom
    if not _is_rook_brauer(D):
        return False
    # a size-2 block inside one row would reuse a label within that row
    bottom, top = D.labels[:k], D.labels[k:]
    return len(set(bottom)) == len(bottom) and len(set(top)) == len(top)


def is_family(D: Diagram, family: Family) -> bool:
    if family is Family.PARTITION:
        return True
    if family is Family.PLANAR_PARTITION:
        return is_planar(D)
    if family is Family.ROOK_BRAUER:
        return _is_rook_brauer(D)
    if family is Family.MOTZKIN:
        return _is_rook_brauer(D) and is_planar(D)
    if family is Family.BRAUER:
        return _is_brauer(D)
    if family is Family.TEMPERLEY_LIEB:
        return _is_brauer(D) and is_planar(D)
    if family is Family.ROOK:
        return _is_rook(D)
    if family is Family.PLANAR_ROOK:
        return _is_rook(D) and is_planar(D)
    if family is Family.PERMUTATION:
        return D.bottom == D.top and _is_brauer(D) and _is_rook(D)
    raise ValueError(f"unknown family {family!r}")
