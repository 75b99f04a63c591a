"""Monoidal structure on partition diagrams.

``compose(D, E)`` stacks ``D`` on top of ``E`` and returns the number of
closed components left in the middle row together with the outer partition,
so that ``D o E = t**alpha * (D * E)`` in the diagram category.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .diagram import Diagram, _relabel
from .errors import TypeMismatch

__all__ = [
    "ComposedResult", "Involution",
    "compose", "tensor", "tensor_all", "involute", "star", "sharp",
    "identity", "skeleton", "EMPTY",
]


class Involution(enum.Enum):
    STAR = "star"    # reflection in a horizontal line
    SHARP = "sharp"  # reflection in a vertical line


class ComposedResult(NamedTuple):
    alpha: int
    diagram: Diagram


def compose(upper: Diagram, lower: Diagram) -> ComposedResult:
    """Stack ``upper`` (l -> m) on ``lower`` (k -> l)."""
    k, l = lower.bottom, lower.top
    if upper.bottom != l:
        raise TypeMismatch(f"cannot compose {upper.bottom} -> {upper.top} "
                           f"after {k} -> {l}")
    m = upper.top
    low, up = lower.labels, upper.labels
    n_low = max(low) + 1 if low else 0
    n_up = max(up) + 1 if up else 0
    # union-find over block ids: lower blocks 0..n_low-1, upper blocks after
    parent = list(range(n_low + n_up))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(l):
        a, b = find(low[k + j]), find(n_low + up[j])
        if a != b:
            parent[b] = a
    outer = [find(low[i]) for i in range(k)]
    outer += [find(n_low + up[l + j]) for j in range(m)]
    roots = {find(x) for x in range(n_low + n_up)}
    alpha = len(roots) - len(set(outer))
    return ComposedResult(alpha, Diagram(k, m, _relabel(outer)))


def tensor(left: Diagram, right: Diagram) -> Diagram:
    """Place ``left`` and ``right`` side by side, ``left`` leftmost."""
    k1, l1 = left.bottom, left.top
    k2, l2 = right.bottom, right.top
    shift = left.n_blocks
    a, b = left.labels, right.labels
    labels = (a[:k1] + tuple(x + shift for x in b[:k2])
              + a[k1:] + tuple(x + shift for x in b[k2:]))
    return Diagram(k1 + k2, l1 + l2, _relabel(labels))


def tensor_all(diagrams) -> Diagram:
    out = EMPTY
    for D in diagrams:
        out = tensor(out, D)
    return out


def star(D: Diagram) -> Diagram:
    k = D.bottom
    return Diagram(D.top, k, _relabel(D.labels[k:] + D.labels[:k]))


def sharp(D: Diagram) -> Diagram:
    k = D.bottom
    return Diagram(k, D.top, _relabel(D.labels[:k][::-1] + D.labels[k:][::-1]))


def involute(D: Diagram, mode: Involution) -> Diagram:
    if mode is Involution.STAR:
        return star(D)
    if mode is Involution.SHARP:
        return sharp(D)
    raise ValueError(f"unknown involution {mode!r}")


def identity(k: int) -> Diagram:
    return Diagram(k, k, tuple(range(k)) * 2)


EMPTY = identity(0)


def skeleton(D: Diagram) -> tuple[Diagram, list[int], list[int]]:
    """Drop singleton blocks; also return the original indices that survive."""
    k = D.bottom
    sizes = D.block_sizes()
    keep = [n for n, a in enumerate(D.labels) if sizes[a] > 1]
    kept_bottom = [n + 1 for n in keep if n < k]
    kept_top = [n - k + 1 for n in keep if n >= k]
    labels = _relabel(D.labels[n] for n in keep)
    return Diagram(len(kept_bottom), len(kept_top), labels), kept_bottom, kept_top
