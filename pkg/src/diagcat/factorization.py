"""Deterministic decompositions of partition diagrams into simpler factors.

Every function returns factors listed left to right in composition order, so
``decompose_rook(D, "sp") == (S, P)`` means ``D == S o P``.  Each result is
checked by recomposing before it is returned: the composite must equal the
input with no closed loops.
"""

from __future__ import annotations

import enum

from .category import compose, skeleton, star
from .diagram import Diagram, Family, is_family, is_planar, make_diagram
from .errors import (FamilyMismatch, NoBrauerFactor, NoFactorization,
                     NotARookBrauerDiagram, NotARookDiagram)
from .rook import FactorMode, factor, from_matrix, to_matrix

__all__ = [
    "RBMode", "decompose_skeleton", "decompose_rook", "decompose_rook_brauer",
    "decompose_via_skeleton_family", "recompose",
]


class RBMode(enum.Enum):
    BP = "bp"  # Brauer o planar rook
    PB = "pb"  # planar rook o Brauer
    SM = "sm"  # permutation o Motzkin
    MS = "ms"  # Motzkin o permutation


def recompose(*factors: Diagram) -> tuple[int, Diagram]:
    """Compose ``factors[0] o factors[1] o ...``; return total alpha and diagram."""
    alpha, out = 0, factors[-1]
    for F in reversed(factors[:-1]):
        a, out = compose(F, out)
        alpha += a
    return alpha, out


def _checked(D: Diagram, factors: tuple[Diagram, ...]) -> tuple[Diagram, ...]:
    alpha, E = recompose(*factors)
    assert alpha == 0 and E == D, f"factorization of {D} recomposes to t^{alpha} {E}"
    return factors


def decompose_skeleton(D: Diagram) -> tuple[Diagram, Diagram, Diagram]:
    """Return ``(P1, skeleton, P2)`` with ``D == P1 o skeleton o P2``.

    ``P2`` closes off the bottom singletons of ``D`` in place and ``P1``
    creates its top singletons, both straight strands elsewhere.
    """
    S, kept_bottom, kept_top = skeleton(D)
    kb = set(kept_bottom)
    P2 = make_diagram(
        D.bottom, S.bottom,
        [[i, f"{r}'"] for r, i in enumerate(kept_bottom, 1)]
        + [[i] for i in range(1, D.bottom + 1) if i not in kb])
    kt = set(kept_top)
    P1 = make_diagram(
        S.top, D.top,
        [[r, f"{j}'"] for r, j in enumerate(kept_top, 1)]
        + [[f"{j}'"] for j in range(1, D.top + 1) if j not in kt])
    return _checked(D, (P1, S, P2))


_SKELETON_CORE = {
    Family.ROOK: Family.PERMUTATION,
    Family.ROOK_BRAUER: Family.BRAUER,
    Family.MOTZKIN: Family.TEMPERLEY_LIEB,
}


def decompose_via_skeleton_family(D: Diagram, family: Family) -> tuple[Diagram, Diagram, Diagram]:
    """Skeleton decomposition for rook / rook-Brauer / Motzkin diagrams.

    The middle factor is then a permutation / Brauer / Temperley-Lieb diagram.
    """
    family = Family(family)
    if family not in _SKELETON_CORE:
        raise ValueError(f"no skeleton correspondence for {family.value}")
    if not is_family(D, family):
        raise FamilyMismatch(f"{D} is not a {family.value} diagram")
    P1, core, P2 = decompose_skeleton(D)
    assert is_family(core, _SKELETON_CORE[family])
    return P1, core, P2


def decompose_rook(D: Diagram, mode="sp") -> tuple[Diagram, Diagram]:
    """``sp``: ``(S, P)`` with ``D == S o P``; ``ps``: ``(P, S)`` with ``D == P o S``.

    ``S`` is a permutation diagram and ``P`` is the planar rook diagram with
    the same isolated vertices as ``D``.
    """
    mode = FactorMode(mode)
    if not is_family(D, Family.ROOK):
        raise NotARookDiagram(f"{D} is not a rook diagram")
    a, b = factor(to_matrix(D), mode)
    return _checked(D, (from_matrix(a), from_matrix(b)))


def _brauer_planar(D: Diagram) -> tuple[Diagram, Diagram]:
    """``(B, P)`` with ``D == B o P``.

    The middle row holds one fresh vertex per top singleton of ``D`` (leftmost,
    isolated in ``P`` and joined to that singleton by ``B``) followed by the
    non-isolated bottom vertices of ``D`` in order.  ``P`` closes the bottom
    singletons.
    """
    k, l = D.bottom, D.top
    sizes = D.block_sizes()
    bottom_single = [i for i in range(k) if sizes[D.labels[i]] == 1]
    top_single = [j for j in range(l) if sizes[D.labels[k + j]] == 1]
    kept = [i for i in range(k) if sizes[D.labels[i]] > 1]
    f = len(top_single)
    m = f + len(kept)
    if (m + l) % 2:
        raise NoBrauerFactor(f"odd vertex count for the Brauer factor of {D}")
    mid_of = {i: f + r for r, i in enumerate(kept)}
    P = make_diagram(
        k, m,
        [[i + 1, f"{mid_of[i] + 1}'"] for i in kept]
        + [[i + 1] for i in bottom_single]
        + [[f"{r + 1}'"] for r in range(f)])
    blocks = [[r + 1, f"{j + 1}'"] for r, j in enumerate(top_single)]
    for block in D.blocks:
        if len(block) != 2:
            continue
        out = []
        for v in block:
            if v.row == 0:
                out.append(mid_of[v.index - 1] + 1)
            else:
                out.append(f"{v.index}'")
        blocks.append(out)
    B = make_diagram(m, l, blocks)
    return B, P


def _noncrossing(seq: list[int], partner: dict[int, int]) -> bool:
    stack: list[int] = []
    seen: set[int] = set()
    for v in seq:
        w = partner.get(v)
        if w is None:
            continue
        if w in seen:
            if not stack or stack[-1] != w:
                return False
            stack.pop()
        else:
            stack.append(v)
        seen.add(v)
    return True


def _permutation_motzkin(D: Diagram) -> tuple[Diagram, Diagram]:
    """``(S, M)`` with ``D == S o M``, ``S: l -> l`` a permutation, ``M`` Motzkin.

    The top row of ``D`` is rearranged so that through strands keep the order
    of their bottom ends and top cups stop enclosing or crossing anything.
    Fails with NoFactorization when the bottom row itself is crossing, since no
    permutation of the top row can repair that.
    """
    k, l = D.bottom, D.top
    strands = []          # (bottom index, top index), 0-based
    partner: dict[int, int] = {}
    for block in D.blocks:
        if len(block) != 2:
            continue
        v, w = block
        if v.row == 0 and w.row == 1:
            strands.append((v.index - 1, w.index - 1))
        elif v.row == 1:
            partner[v.index - 1] = w.index - 1
            partner[w.index - 1] = v.index - 1
    strand_tops = sorted(q for _, q in strands)
    strand_set = set(strand_tops)

    def gap(q: int) -> int:
        return sum(1 for s in strand_tops if s < q)

    n_gaps = len(strands) + 1
    native: list[list[int]] = [[] for _ in range(n_gaps)]
    moved: list[list[int]] = [[] for _ in range(n_gaps)]
    for q in range(l):
        if q in strand_set:
            continue
        w = partner.get(q)
        if w is not None and w < q and gap(w) != gap(q):
            moved[gap(w)].append(q)
        else:
            native[gap(q)].append(q)

    layout: list[list[int]] = []
    for g in range(n_gaps):
        cand = native[g] + sorted(moved[g], key=lambda q: -partner[q])
        if not _noncrossing(cand, partner):
            # fall back to every cup as an adjacent pair at its left end
            adjacent: list[int] = []
            for q in cand:
                if q in adjacent:
                    continue
                adjacent.append(q)
                if q in partner:
                    adjacent.append(partner[q])
            cand = adjacent
        layout.append(cand)

    order: list[int] = list(layout[0])
    for g, (_, q) in enumerate(sorted(strands)):
        order.append(q)
        order += layout[g + 1]
    assert sorted(order) == list(range(l))
    new_pos = {q: i for i, q in enumerate(order)}
    M = Diagram.from_labels(
        k, l, list(D.labels[:k]) + [D.labels[k + order[i]] for i in range(l)])
    if not is_planar(M):
        raise NoFactorization(
            f"the bottom row of {D} is not planar on its own; "
            "no permutation of the top row makes it planar")
    S = make_diagram(l, l, [[new_pos[q] + 1, f"{q + 1}'"] for q in range(l)])
    return S, M


def decompose_rook_brauer(D: Diagram, mode="bp") -> tuple[Diagram, Diagram]:
    """Two-factor decompositions of a rook-Brauer diagram.

    ``bp``: ``(B, P)``, ``D == B o P``; ``pb``: ``(P, B)``, ``D == P o B``;
    ``sm``: ``(S, M)``, ``D == S o M``; ``ms``: ``(M, S)``, ``D == M o S``.
    ``B`` is Brauer, ``P`` planar rook, ``S`` a permutation and ``M`` Motzkin.
    The ``pb`` and ``ms`` forms are the star images of ``bp`` and ``sm``
    applied to ``star(D)``.

    ``sm`` only exists when the bottom row of ``D`` is non-crossing on its
    own (caps neither cross nor enclose a through strand), and ``ms`` only
    when the top row is; otherwise NoFactorization is raised.
    """
    mode = RBMode(mode)
    if not is_family(D, Family.ROOK_BRAUER):
        raise NotARookBrauerDiagram(f"{D} is not a rook-Brauer diagram")
    if mode is RBMode.BP:
        out = _brauer_planar(D)
    elif mode is RBMode.PB:
        B, P = _brauer_planar(star(D))
        out = (star(P), star(B))
    elif mode is RBMode.SM:
        out = _permutation_motzkin(D)
    else:
        S, M = _permutation_motzkin(star(D))
        out = (star(M), star(S))
    return _checked(D, out)

