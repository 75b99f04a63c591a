"""Exhaustive generation of family diagrams and the closure checks built on it.

Two generators exist for every family: a generic one that filters all
restricted growth strings through the family predicate, and a direct one
that only builds family members.  They are independent so each can serve as
an oracle for the other.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .category import compose
from .diagram import Diagram, Family, is_family

__all__ = [
    "restricted_growth_strings", "enumerate_diagrams", "count", "closed_form_count",
    "ClosureReport", "closure_check", "multiplication_table",
]


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``n`` points, in lexicographic order."""
    a = [0] * n
    if n == 0:
        yield ()
        return

    def rec(i: int, m: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(m + 1):
            a[i] = v
            yield from rec(i + 1, max(m, v + 1))

    yield from rec(1, 1)


def _filtered(family: Family, k: int, l: int) -> list[Diagram]:
    out = []
    for labels in restricted_growth_strings(k + l):
        D = Diagram(k, l, labels)
        if is_family(D, family):
            out.append(D)
    return out


# direct generators ---------------------------------------------------------

def _from_boundary_blocks(k: int, l: int, blocks) -> Diagram:
    """Blocks given as boundary positions: bottom 1..k then top l..1."""
    labels = [0] * (k + l)
    for b, block in enumerate(blocks):
        for p in block:
            labels[p if p < k else k + (l - 1 - (p - k))] = b
    return Diagram.from_labels(k, l, labels)


def _from_flat_blocks(k: int, l: int, blocks) -> Diagram:
    labels = [0] * (k + l)
    for b, block in enumerate(blocks):
        for p in block:
            labels[p] = b
    return Diagram.from_labels(k, l, labels)


def _noncrossing_partitions(points: tuple) -> Iterator[list[tuple]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    # choose the other members of first's block; the gaps recurse independently
    for r in range(len(rest) + 1):
        for others in itertools.combinations(range(len(rest)), r):
            cuts = [-1, *others, len(rest)]
            gaps = [rest[cuts[i] + 1:cuts[i + 1]] for i in range(len(cuts) - 1)]
            block = (first, *(rest[i] for i in others))
            for parts in itertools.product(*(list(_noncrossing_partitions(g)) for g in gaps)):
                yield [block, *itertools.chain.from_iterable(parts)]


def _noncrossing_matchings(points: tuple, singletons: bool) -> Iterator[list[tuple]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    if singletons:
        for m in _noncrossing_matchings(rest, True):
            yield [(first,), *m]
    for j in range(0, len(rest), 1 if singletons else 2):
        inside, outside = rest[:j], rest[j + 1:]
        for a in _noncrossing_matchings(inside, singletons):
            for b in _noncrossing_matchings(outside, singletons):
                yield [(first, rest[j]), *a, *b]


def _matchings(points: tuple, singletons: bool) -> Iterator[list[tuple]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    if singletons:
        for m in _matchings(rest, True):
            yield [(first,), *m]
    for j in range(len(rest)):
        remaining = rest[:j] + rest[j + 1:]
        for m in _matchings(remaining, singletons):
            yield [(first, rest[j]), *m]


def _rook(k: int, l: int, planar: bool) -> Iterator[Diagram]:
    for i in range(min(k, l) + 1):
        for bottoms in itertools.combinations(range(k), i):
            for tops in itertools.combinations(range(l), i):
                orders = [tops] if planar else itertools.permutations(tops)
                for order in orders:
                    blocks = [(p, k + q) for p, q in zip(bottoms, order)]
                    blocks += [(p,) for p in range(k) if p not in bottoms]
                    blocks += [(k + q,) for q in range(l) if q not in tops]
                    yield _from_flat_blocks(k, l, blocks)


def _direct(family: Family, k: int, l: int) -> list[Diagram]:
    n = k + l
    pts = tuple(range(n))
    if family is Family.PARTITION:
        gen = (Diagram(k, l, a) for a in restricted_growth_strings(n))
    elif family is Family.PLANAR_PARTITION:
        gen = (_from_boundary_blocks(k, l, b) for b in _noncrossing_partitions(pts))
    elif family is Family.BRAUER:
        gen = (_from_flat_blocks(k, l, m) for m in _matchings(pts, False)) if n % 2 == 0 else ()
    elif family is Family.ROOK_BRAUER:
        gen = (_from_flat_blocks(k, l, m) for m in _matchings(pts, True))
    elif family is Family.TEMPERLEY_LIEB:
        gen = ((_from_boundary_blocks(k, l, m) for m in _noncrossing_matchings(pts, False))
               if n % 2 == 0 else ())
    elif family is Family.MOTZKIN:
        gen = (_from_boundary_blocks(k, l, m) for m in _noncrossing_matchings(pts, True))
    elif family is Family.ROOK:
        gen = _rook(k, l, planar=False)
    elif family is Family.PLANAR_ROOK:
        gen = _rook(k, l, planar=True)
    elif family is Family.PERMUTATION:
        gen = (_from_flat_blocks(k, l, [(i, k + p[i]) for i in range(k)])
               for p in itertools.permutations(range(k))) if k == l else ()
    else:
        raise ValueError(f"unknown family {family!r}")
    return sorted(gen)


def enumerate_diagrams(family, k: int, l: int, method: str = "direct") -> list[Diagram]:
    """All ``family`` diagrams of type ``k -> l`` in canonical order.

    ``method`` is ``"direct"`` (family-specific construction) or ``"filter"``
    (every set partition, kept if the predicate holds).
    """
    family = Family(family)
    if method == "filter":
        return sorted(_filtered(family, k, l))
    if method == "direct":
        return _direct(family, k, l)
    raise ValueError(f"unknown method {method!r}")


def count(family, k: int, l: int) -> int:
    return len(enumerate_diagrams(family, k, l))


def _double_factorial(n: int) -> int:
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def _involutions(n: int) -> int:
    return sum(math.comb(n, 2 * j) * _double_factorial(2 * j - 1) for j in range(n // 2 + 1))


def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _motzkin(n: int) -> int:
    return sum(math.comb(n, 2 * j) * _catalan(j) for j in range(n // 2 + 1))


def closed_form_count(family, k: int, l: int) -> int:
    """Counting formula for ``family`` diagrams of type ``k -> l``."""
    family = Family(family)
    n = k + l
    if family is Family.PARTITION:
        return _bell(n)
    if family is Family.PLANAR_PARTITION:
        return _catalan(n)
    if family is Family.BRAUER:
        return _double_factorial(n - 1) if n % 2 == 0 else 0
    if family is Family.TEMPERLEY_LIEB:
        return _catalan(n // 2) if n % 2 == 0 else 0
    if family is Family.ROOK_BRAUER:
        return _involutions(n)
    if family is Family.MOTZKIN:
        return _motzkin(n)
    if family is Family.ROOK:
        return sum(math.comb(k, i) * math.comb(l, i) * math.factorial(i)
                   for i in range(min(k, l) + 1))
    if family is Family.PLANAR_ROOK:
        return math.comb(n, k)
    if family is Family.PERMUTATION:
        return math.factorial(k) if k == l else 0
    raise ValueError(f"unknown family {family!r}")


@dataclass
class ClosureReport:
    family: Family
    k: int
    l: int
    m: int
    pairs: int = 0
    alpha_histogram: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        hist = ", ".join(f"t^{a}: {n}" for a, n in sorted(self.alpha_histogram.items()))
        return (f"{self.family.value} {self.k} -> {self.l} -> {self.m}: {self.pairs} pairs, "
                f"{len(self.violations)} violations; alpha histogram {{{hist}}}")


def closure_check(family, k: int, l: int, m: int) -> ClosureReport:
    """Compose every ``D: l -> m`` with every ``D': k -> l`` from ``family``."""
    family = Family(family)
    report = ClosureReport(family, k, l, m)
    lower = enumerate_diagrams(family, k, l)
    upper = enumerate_diagrams(family, l, m)
    member: dict[Diagram, bool] = {}
    for D in upper:
        for E in lower:
            alpha, F = compose(D, E)
            report.pairs += 1
            report.alpha_histogram[alpha] += 1
            ok = member.get(F)
            if ok is None:
                ok = member[F] = is_family(F, family)
            if not ok:
                report.violations.append((D, E, alpha, F))
    return report


def multiplication_table(family, k: int):
    """Basis of End(k) and ``table[i][j] = (alpha, index)`` for ``b_i o b_j``.

    Returns ``None`` as the index if the product leaves the family.
    """
    basis = enumerate_diagrams(family, k, k)
    index = {D: i for i, D in enumerate(basis)}
    table = [[None] * len(basis) for _ in basis]
    for i, D in enumerate(basis):
        for j, E in enumerate(basis):
            alpha, F = compose(D, E)
            table[i][j] = (alpha, index.get(F))
    return basis, table
