"""Generators and relations: words, their evaluation, relation catalogs and
diagram-to-word synthesis.

A word is a list of slices read bottom to top; each slice is a row of atoms
placed side by side.  Text form separates slices with ";" and atoms with
spaces, so ``"| eta ; mu"`` is ``mu o (1 (x) eta)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .category import Involution, compose, identity, star, tensor_all
from .diagram import Diagram, Family, is_family, make_diagram
from .errors import ArityMismatch, FamilyMismatch, ParseError
from .factorization import decompose_rook, decompose_rook_brauer, decompose_skeleton
from .scalars import Morphism, Scalar, T

__all__ = [
    "GeneratorAtom", "GeneratorWord", "Relation", "CategorySpec", "CategoryName",
    "RelationResult", "VerificationReport",
    "atom_morphism", "evaluate_word", "word_involute", "parse_word",
    "relation_catalog", "derived_relations", "verify_presentation",
    "synthesize_word", "category_spec", "CATEGORIES",
]


class GeneratorAtom(enum.Enum):
    ID = "|"
    MU = "mu"
    DELTA = "delta"
    S = "s"
    ETA = "eta"
    EPS = "eps"
    D_CAP = "d"
    C_CUP = "c"

    @property
    def arity(self) -> tuple[int, int]:
        return _ARITY[self]

    @property
    def dual(self) -> "GeneratorAtom":
        return _DUAL.get(self, self)

    @classmethod
    def parse(cls, token: str) -> "GeneratorAtom":
        key = token.strip().lower()
        key = _ALIASES.get(key, key)
        for a in cls:
            if a.value == key:
                return a
        raise ValueError(f"unknown generator {token!r}")


_ARITY = {
    GeneratorAtom.ID: (1, 1), GeneratorAtom.MU: (2, 1), GeneratorAtom.DELTA: (1, 2),
    GeneratorAtom.S: (2, 2), GeneratorAtom.ETA: (0, 1), GeneratorAtom.EPS: (1, 0),
    GeneratorAtom.D_CAP: (2, 0), GeneratorAtom.C_CUP: (0, 2),
}
_DUAL = {
    GeneratorAtom.MU: GeneratorAtom.DELTA, GeneratorAtom.DELTA: GeneratorAtom.MU,
    GeneratorAtom.ETA: GeneratorAtom.EPS, GeneratorAtom.EPS: GeneratorAtom.ETA,
    GeneratorAtom.D_CAP: GeneratorAtom.C_CUP, GeneratorAtom.C_CUP: GeneratorAtom.D_CAP,
}
_ALIASES = {
    "id": "|", "1": "|", "epsilon": "eps", "cap": "d", "cup": "c",
    "μ": "mu", "δ": "delta", "η": "eta", "ε": "eps",
}

ID, MU, DELTA, S, ETA, EPS, D_CAP, C_CUP = GeneratorAtom


def slice_arity(atoms: Sequence[GeneratorAtom]) -> tuple[int, int]:
    return sum(a.arity[0] for a in atoms), sum(a.arity[1] for a in atoms)


@dataclass(frozen=True)
class GeneratorWord:
    """Slices applied bottom to top, starting from the object ``domain``."""

    domain: int
    slices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))

    @property
    def codomain(self) -> int:
        n = self.domain
        for i, atoms in enumerate(self.slices):
            src, tgt = slice_arity(atoms)
            if src != n:
                raise ArityMismatch(
                    f"slice {i + 1} ({_slice_text(atoms)}) expects {src} strands, got {n}")
            n = tgt
        return n

    def then(self, other: "GeneratorWord") -> "GeneratorWord":
        """``other o self``: apply ``self`` first."""
        if other.domain != self.codomain:
            raise ArityMismatch(f"cannot follow a word ending at {self.codomain} "
                                f"with one starting at {other.domain}")
        return GeneratorWord(self.domain, self.slices + other.slices)

    def atoms(self) -> set[GeneratorAtom]:
        return {a for s in self.slices for a in s}

    def __len__(self) -> int:
        return len(self.slices)

    def __str__(self) -> str:
        if not self.slices:
            return f"1_{self.domain}"
        return " ; ".join(_slice_text(s) for s in self.slices)


def _slice_text(atoms) -> str:
    return " ".join(a.value for a in atoms)


def parse_word(text: str, domain: int | None = None) -> GeneratorWord:
    """Parse ``"| eta ; mu"``; ``"1_k"`` is the empty word on ``k``.

    The domain is read off the first slice unless given explicitly.
    """
    m = re.fullmatch(r"\s*1_(\d+)\s*", text)
    if m:
        k = int(m.group(1))
        if domain is not None and domain != k:
            raise ArityMismatch(f"empty word on {k} given domain {domain}")
        return GeneratorWord(k)
    slices = []
    offset = 0
    for part in text.split(";"):
        atoms = []
        for tok in re.finditer(r"\S+", part):
            try:
                atoms.append(GeneratorAtom.parse(tok.group()))
            except ValueError:
                raise ParseError(f"unknown generator {tok.group()!r}", text,
                                 offset + tok.start(), "generator name") from None
        if not atoms:
            raise ParseError("empty slice", text, offset, "generator name")
        slices.append(tuple(atoms))
        offset += len(part) + 1
    if domain is None:
        domain = slice_arity(slices[0])[0]
    w = GeneratorWord(domain, slices)
    w.codomain  # arity check
    return w


_ATOM_DIAGRAMS = {
    ID: identity(1),
    MU: make_diagram(2, 1, [[1, 2, "1'"]]),
    DELTA: make_diagram(1, 2, [[1, "1'", "2'"]]),
    S: make_diagram(2, 2, [[1, "2'"], [2, "1'"]]),
    ETA: make_diagram(0, 1, [["1'"]]),
    EPS: make_diagram(1, 0, [[1]]),
    D_CAP: make_diagram(2, 0, [[1, 2]]),
    C_CUP: make_diagram(0, 2, [["1'", "2'"]]),
}


def atom_diagram(a: GeneratorAtom) -> Diagram:
    return _ATOM_DIAGRAMS[a]


def atom_morphism(a: GeneratorAtom) -> Morphism:
    return Morphism.of(_ATOM_DIAGRAMS[a])


@lru_cache(maxsize=4096)
def _slice_diagram(atoms: tuple) -> Diagram:
    return tensor_all(_ATOM_DIAGRAMS[a] for a in atoms)


def evaluate_word(w: GeneratorWord) -> Morphism:
    """Tensor the atoms in each slice, then compose the slices upward."""
    w.codomain  # raises ArityMismatch on a bad chain
    alpha, out = 0, identity(w.domain)
    for atoms in w.slices:
        a, out = compose(_slice_diagram(atoms), out)
        alpha += a
    return Morphism.of(out, T ** alpha)


def word_involute(w: GeneratorWord, mode: Involution) -> GeneratorWord:
    mode = Involution(mode)
    if mode is Involution.STAR:
        slices = [tuple(a.dual for a in s) for s in reversed(w.slices)]
        return GeneratorWord(w.codomain, slices)
    return GeneratorWord(w.domain, [tuple(reversed(s)) for s in w.slices])


class Relation(NamedTuple):
    """``lhs == scalar * rhs`` as morphisms."""

    name: str
    lhs: GeneratorWord
    rhs: GeneratorWord
    scalar: Scalar = Scalar(1)

    def transform(self, mode: Involution) -> "Relation":
        suffix = "*" if Involution(mode) is Involution.STAR else "#"
        return Relation(self.name + suffix, word_involute(self.lhs, mode),
                        word_involute(self.rhs, mode), self.scalar)

    def key(self):
        sides = (str(self.lhs), str(self.rhs))
        if self.scalar == 1:
            sides = tuple(sorted(sides))
        return sides, self.scalar

    def __str__(self) -> str:
        rhs = str(self.rhs) if self.scalar == 1 else f"{self.scalar} * {self.rhs}"
        return f"{self.name}: {self.lhs} = {rhs}"


def _rel(name: str, lhs: str, rhs: str, scalar=1) -> Relation:
    return Relation(name, parse_word(lhs), parse_word(rhs), Scalar.coerce(scalar))


class CategoryName(enum.Enum):
    PARTITION = "partition"
    PLANAR_ROOK = "planar-rook"
    ROOK = "rook"
    BRAUER = "brauer"
    ROOK_BRAUER = "rook-brauer"
    TEMPERLEY_LIEB = "temperley-lieb"
    MOTZKIN = "motzkin"
    SYMMETRIC_GROUP = "symmetric-group"

    @classmethod
    def from_name(cls, name: str) -> "CategoryName":
        key = name.strip().lower().replace("_", "-")
        aliases = {"par": "partition", "pr": "planar-rook", "r": "rook", "b": "brauer",
                   "rb": "rook-brauer", "tl": "temperley-lieb", "m": "motzkin",
                   "sym": "symmetric-group", "symmetric": "symmetric-group",
                   "permutation": "symmetric-group"}
        key = aliases.get(key, key)
        for c in cls:
            if c.value == key:
                return c
        raise ValueError(f"unknown category {name!r}")


@dataclass(frozen=True)
class CategorySpec:
    name: CategoryName
    family: Family
    generators: frozenset
    relations: tuple = ()
    derived: tuple = field(default=(), compare=False)

    def __str__(self) -> str:
        return self.name.value


_SYM = [_rel("S1", "s ; s", "| |"),
        _rel("S2", "| s ; s | ; | s", "s | ; | s ; s |")]


def _renamed(rels, prefix):
    return [r._replace(name=prefix + r.name[1:]) for r in rels]


CATEGORIES: dict[CategoryName, CategorySpec] = {
    spec.name: spec for spec in [
        CategorySpec(
            CategoryName.PARTITION, Family.PARTITION, frozenset({MU, DELTA, S, ETA, EPS}),
            (_rel("P1a", "| eta ; mu", "|"),
             _rel("P1b", "| delta ; mu |", "mu ; delta"),
             *_renamed(_SYM, "P2"),
             _rel("P3a", "| eta ; s", "eta |"),
             _rel("P3b", "| s ; s | ; | mu", "mu | ; s"),
             _rel("P4a", "s ; mu", "mu"),
             _rel("P4b", "delta ; mu", "|"),
             _rel("P4c", "eta ; eps", "1_0", T))),
        CategorySpec(
            CategoryName.PLANAR_ROOK, Family.PLANAR_ROOK, frozenset({ETA, EPS}),
            (_rel("PR1", "eta ; eps", "1_0", T),),
            (_rel("PR2", "eta eps", "eps eta"),)),
        CategorySpec(
            CategoryName.ROOK, Family.ROOK, frozenset({S, ETA, EPS}),
            (*_renamed(_SYM, "R1"),
             _rel("R2", "eta | ; s", "| eta"),
             _rel("R3", "eta ; eps", "1_0", T)),
            (_rel("R4", "eta eta ; s", "eta eta"),)),
        CategorySpec(
            CategoryName.BRAUER, Family.BRAUER, frozenset({S, D_CAP, C_CUP}),
            (*_renamed(_SYM, "B1"),
             _rel("B2a", "| c ; d |", "|"),
             _rel("B2b", "s | ; | d", "| s ; d |"),
             _rel("B3a", "s ; d", "d"),
             _rel("B3b", "c ; d", "1_0", T))),
        CategorySpec(
            CategoryName.ROOK_BRAUER, Family.ROOK_BRAUER, frozenset({S, D_CAP, C_CUP, ETA, EPS}),
            (*_renamed(_SYM, "RB1"),
             _rel("RB2a", "| c ; d |", "|"),
             _rel("RB2b", "s | ; | d", "| s ; d |"),
             _rel("RB3a", "s ; d", "d"),
             _rel("RB3b", "eta | ; s", "| eta"),
             _rel("RB4a", "c ; d", "1_0", T),
             _rel("RB4b", "eta eta ; d", "1_0", T),
             _rel("RB4c", "eta ; eps", "1_0", T)),
            (_rel("RB5", "| s ; s | ; | d", "d |"),)),
        CategorySpec(
            CategoryName.TEMPERLEY_LIEB, Family.TEMPERLEY_LIEB, frozenset({D_CAP, C_CUP}),
            (_rel("TLa", "c | ; | d", "|"),
             _rel("TLb", "| c ; d |", "|"),
             _rel("TLc", "c ; d", "1_0", T))),
        CategorySpec(
            CategoryName.MOTZKIN, Family.MOTZKIN, frozenset({D_CAP, C_CUP, ETA, EPS}),
            (_rel("M1a", "| eta ; d", "eps"),
             _rel("M1b", "| c ; d |", "|"),
             _rel("M2a", "c ; d", "1_0", T),
             _rel("M2b", "eta ; eps", "1_0", T))),
        CategorySpec(
            CategoryName.SYMMETRIC_GROUP, Family.PERMUTATION, frozenset({S}),
            tuple(_SYM)),
    ]
}


def category_spec(c) -> CategorySpec:
    if isinstance(c, CategorySpec):
        return c
    if isinstance(c, CategoryName):
        return CATEGORIES[c]
    return CATEGORIES[CategoryName.from_name(c)]


def _with_transforms(rels: Iterable[Relation]) -> list[Relation]:
    out: list[Relation] = []
    seen = set()
    for r in rels:
        for v in (r, r.transform(Involution.STAR), r.transform(Involution.SHARP),
                  r.transform(Involution.STAR).transform(Involution.SHARP)):
            if v.key() not in seen:
                seen.add(v.key())
                out.append(v)
    return out


def relation_catalog(c) -> list[Relation]:
    """Base relations plus their star/sharp transforms, duplicates removed."""
    return _with_transforms(category_spec(c).relations)


def derived_relations(c) -> list[Relation]:
    return _with_transforms(category_spec(c).derived)


class RelationResult(NamedTuple):
    relation: Relation
    passed: bool
    lhs_value: Morphism
    rhs_value: Morphism
    derived: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.relation}"
        if not self.passed:
            text += f"  [lhs {_morphism_text(self.lhs_value)} != rhs {_morphism_text(self.rhs_value)}]"
        return text


def _morphism_text(f: Morphism) -> str:
    from .textio import render_morphism
    return render_morphism(f)


@dataclass
class VerificationReport:
    category: str
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def __str__(self) -> str:
        n = len(self.results)
        head = f"{self.category}: {n - len(self.failures)}/{n} relations hold"
        return "\n".join([head, *self.lines()])


def check_relation(r: Relation, derived: bool = False) -> RelationResult:
    try:
        lhs = evaluate_word(r.lhs)
        rhs = r.scalar * evaluate_word(r.rhs)
    except ArityMismatch:
        empty = Morphism.zero(0, 0)
        return RelationResult(r, False, empty, empty, derived)
    return RelationResult(r, lhs == rhs, lhs, rhs, derived)


def verify_presentation(c, relations: Iterable[Relation] | None = None) -> VerificationReport:
    """Evaluate both sides of every relation and compare over Z[t].

    ``relations`` replaces the catalog, e.g. to test a mutated relation.
    """
    spec = category_spec(c)
    if relations is None:
        results = [check_relation(r) for r in relation_catalog(spec)]
        results += [check_relation(r, True) for r in derived_relations(spec)]
    else:
        results = [check_relation(r) for r in relations]
    return VerificationReport(spec.name.value, results)


# synthesis ----------------------------------------------------------------

class _Builder:
    """Accumulates slices while tracking the strand count."""

    def __init__(self, n: int):
        self.domain = n
        self.n = n
        self.slices: list[tuple] = []

    def emit(self, atoms: Sequence[GeneratorAtom]):
        src, tgt = slice_arity(atoms)
        assert src == self.n, (atoms, self.n)
        if any(a is not ID for a in atoms):
            self.slices.append(tuple(atoms))
        self.n = tgt

    def at(self, pos: int, atom: GeneratorAtom):
        """Emit ``atom`` acting on strands ``pos, pos+1, ...``."""
        width = atom.arity[0]
        self.emit([ID] * pos + [atom] + [ID] * (self.n - pos - width))

    def extend(self, w: GeneratorWord):
        for s in w.slices:
            self.emit(s)

    def word(self) -> GeneratorWord:
        return GeneratorWord(self.domain, self.slices)


def _planar_rook_slice(P: Diagram) -> list[GeneratorAtom]:
    """Read a planar rook diagram as one tensor product of 1, eta and eps."""
    k, l = P.bottom, P.top
    labels = P.labels
    sizes = P.block_sizes()
    atoms: list[GeneratorAtom] = []
    i = j = 0
    while i < k or j < l:
        n_eps = n_eta = 0
        while i < k and sizes[labels[i]] == 1:
            n_eps += 1
            i += 1
        while j < l and sizes[labels[k + j]] == 1:
            n_eta += 1
            j += 1
        atoms += [ETA] * n_eta + [EPS] * n_eps
        if i < k and j < l:
            atoms.append(ID)
            i += 1
            j += 1
    return atoms


def _permutation_word(B: _Builder, D: Diagram):
    """Bubble sort, leftmost inversion first; D must be a permutation diagram."""
    n = D.bottom
    top_of = [0] * n
    for block in D.blocks:
        p, q = block
        top_of[p.index - 1] = q.index - 1
    keys = list(top_of)
    while True:
        for j in range(n - 1):
            if keys[j] > keys[j + 1]:
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
                B.at(j, S)
                break
        else:
            return


def _reduce_caps(B: _Builder, D: Diagram, planar: bool) -> Diagram:
    """Close every bottom cap of a Brauer diagram; return the remainder.

    The cap with the smallest right end goes first; its right end is walked
    next to its left end with crossings.  In the planar case the leftmost
    adjacent pair is always available, so no crossings are emitted.
    """
    k = D.bottom
    bottom, top = list(D.labels[:k]), list(D.labels[k:])
    while True:
        best = None
        for j, a in enumerate(bottom):
            i = bottom.index(a)
            if i < j and (not planar or i == j - 1):
                best = (i, j)
                break
        if best is None:
            break
        i, j = best
        for q in range(j - 1, i, -1):
            B.at(q, S)
            bottom[q], bottom[q + 1] = bottom[q + 1], bottom[q]
        B.at(i, D_CAP)
        del bottom[i:i + 2]
    return Diagram.from_labels(len(bottom), len(top), bottom + top)


def _reduce_partition(B: _Builder, D: Diagram) -> Diagram:
    """Sort bottom vertices by block, merge, then close bottom-only blocks."""
    k = D.bottom
    bottom, top = list(D.labels[:k]), list(D.labels[k:])
    order = sorted(range(k), key=lambda i: (bottom[i], i))
    target = [0] * k
    for r, i in enumerate(order):
        target[i] = r
    keys = list(target)
    while True:
        for j in range(k - 1):
            if keys[j] > keys[j + 1]:
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
                bottom[j], bottom[j + 1] = bottom[j + 1], bottom[j]
                B.at(j, S)
                break
        else:
            break
    r = 0
    while r < len(bottom) - 1:
        if bottom[r] == bottom[r + 1]:
            B.at(r, MU)
            del bottom[r + 1]
        else:
            r += 1
    upper = set(top)
    if any(a not in upper for a in bottom):
        B.emit([ID if a in upper else EPS for a in bottom])
        bottom = [a for a in bottom if a in upper]
    return Diagram.from_labels(len(bottom), len(top), bottom + top)


def _two_sided(B: _Builder, D: Diagram, reduce, core):
    """``reduce`` the bottom, ``reduce`` the top through star, ``core`` the rest."""
    D1 = reduce(B, D)
    dual = _Builder(D1.top)
    core_star = reduce(dual, star(D1))
    core(B, star(core_star))
    B.extend(word_involute(dual.word(), Involution.STAR))


def _synth_brauer_core(B: _Builder, D: Diagram):
    _two_sided(B, D, lambda b, E: _reduce_caps(b, E, planar=False), _permutation_word)


def _synth_tl_core(B: _Builder, D: Diagram):
    def nothing(b, E):
        assert E == identity(E.bottom)
    _two_sided(B, D, lambda b, E: _reduce_caps(b, E, planar=True), nothing)


def synthesize_word(D: Diagram, c) -> GeneratorWord:
    """A word over the category's generators evaluating to exactly ``D``."""
    spec = category_spec(c)
    if not is_family(D, spec.family):
        raise FamilyMismatch(f"{D} is not a {spec.family.value} diagram")
    B = _Builder(D.bottom)
    name = spec.name
    if name is CategoryName.PLANAR_ROOK:
        B.emit(_planar_rook_slice(D))
    elif name is CategoryName.SYMMETRIC_GROUP:
        _permutation_word(B, D)
    elif name is CategoryName.ROOK:
        Sd, P = decompose_rook(D, "sp")
        B.emit(_planar_rook_slice(P))
        _permutation_word(B, Sd)
    elif name is CategoryName.BRAUER:
        _synth_brauer_core(B, D)
    elif name is CategoryName.ROOK_BRAUER:
        Bd, P = decompose_rook_brauer(D, "bp")
        B.emit(_planar_rook_slice(P))
        _synth_brauer_core(B, Bd)
    elif name in (CategoryName.TEMPERLEY_LIEB, CategoryName.MOTZKIN):
        P1, core, P2 = decompose_skeleton(D)
        B.emit(_planar_rook_slice(P2))
        _synth_tl_core(B, core)
        B.emit(_planar_rook_slice(P1))
    else:
        _two_sided(B, D, _reduce_partition, _permutation_word)
    w = B.word()
    assert w.codomain == D.top
    return w
