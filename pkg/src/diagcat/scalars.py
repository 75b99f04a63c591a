"""Exact coefficients in Z[t] and formal linear combinations of diagrams."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .category import Involution, compose, identity, involute, tensor
from .diagram import Diagram
from .errors import TypeMismatch

__all__ = [
    "Scalar", "Morphism", "T",
    "t_power", "morphism_compose", "morphism_tensor", "morphism_add",
    "morphism_scale", "morphism_involute", "identity_morphism",
]


class Scalar:
    """Integer polynomial in the formal parameter ``t``.

    Stored as an exponent -> coefficient map with no zero entries.

    >>> (T**2 + T**2) * 3 + 1
    Scalar('6*t^2 + 1')
    >>> (2 * T**2 + 1).eval_at(3)
    19
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], int, None] = None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        clean = {}
        for e, c in coeffs.items():
            if e < 0:
                raise ValueError("negative exponent")
            if c:
                clean[int(e)] = int(c)
        self._coeffs = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls(x)
        raise TypeError(f"cannot use {x!r} as a scalar")

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def eval_at(self, t: int) -> int:
        return sum(c * t**e for e, c in self._coeffs.items())

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Morphism):
            return NotImplemented
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                body = str(abs(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def t_power(n: int) -> Scalar:
    return Scalar({n: 1})


T = t_power(1)


class Morphism:
    """Finite Z[t]-linear combination of diagrams of one type ``source -> target``."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: int, target: int,
                 terms: Union[Mapping[Diagram, Scalar], Iterable, None] = None):
        self.source = source
        self.target = target
        acc: dict[Diagram, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for D, c in items:
            if D.type != (source, target):
                raise TypeMismatch(f"diagram {D} does not have type {source} -> {target}")
            acc[D] = acc.get(D, Scalar()) + Scalar.coerce(c)
        self.terms = {D: acc[D] for D in sorted(acc) if acc[D]}

    @classmethod
    def of(cls, D: Diagram, coefficient=1) -> "Morphism":
        return cls(D.bottom, D.top, {D: Scalar.coerce(coefficient)})

    @classmethod
    def zero(cls, source: int, target: int) -> "Morphism":
        return cls(source, target)

    def is_zero(self) -> bool:
        return not self.terms

    def single_term(self) -> tuple[Scalar, Diagram] | None:
        """Return ``(coefficient, diagram)`` when exactly one diagram occurs."""
        if len(self.terms) != 1:
            return None
        (D, c), = self.terms.items()
        return c, D

    def compose(self, other: "Morphism") -> "Morphism":
        return morphism_compose(self, other)

    def tensor(self, other: "Morphism") -> "Morphism":
        return morphism_tensor(self, other)

    def involute(self, mode: Involution) -> "Morphism":
        return morphism_involute(self, mode)

    def specialize(self, t: int) -> dict[Diagram, int]:
        return {D: c.eval_at(t) for D, c in self.terms.items() if c.eval_at(t)}

    def __add__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return morphism_add(self, other)

    def __neg__(self):
        return morphism_scale(-1, self)

    def __sub__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return morphism_add(self, -other)

    def __rmul__(self, c):
        try:
            return morphism_scale(Scalar.coerce(c), self)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source, self.target, self.terms) == (other.source, other.target, other.terms)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Morphism(0 : {self.source} -> {self.target})"
        body = " + ".join(f"({c}) * ({D})" for D, c in self.terms.items())
        return f"Morphism({body})"


def identity_morphism(k: int) -> Morphism:
    return Morphism.of(identity(k))


def morphism_compose(f: Morphism, g: Morphism) -> Morphism:
    """``f o g``: ``g`` first, extended bilinearly from diagram composition."""
    if f.source != g.target:
        raise TypeMismatch(f"cannot compose {f.source} -> {f.target} after {g.source} -> {g.target}")
    terms = []
    for D, a in f.terms.items():
        for E, b in g.terms.items():
            alpha, F = compose(D, E)
            terms.append((F, a * b * t_power(alpha)))
    return Morphism(g.source, f.target, terms)


def morphism_tensor(f: Morphism, g: Morphism) -> Morphism:
    terms = [(tensor(D, E), a * b) for D, a in f.terms.items() for E, b in g.terms.items()]
    return Morphism(f.source + g.source, f.target + g.target, terms)


def morphism_add(f: Morphism, g: Morphism) -> Morphism:
    if (f.source, f.target) != (g.source, g.target):
        raise TypeMismatch(f"cannot add {f.source} -> {f.target} and {g.source} -> {g.target}")
    return Morphism(f.source, f.target, list(f.terms.items()) + list(g.terms.items()))


def morphism_scale(c, f: Morphism) -> Morphism:
    c = Scalar.coerce(c)
    return Morphism(f.source, f.target, [(D, c * a) for D, a in f.terms.items()])


def morphism_involute(f: Morphism, mode: Involution) -> Morphism:
    src, tgt = (f.target, f.source) if mode is Involution.STAR else (f.source, f.target)
    return Morphism(src, tgt, [(involute(D, mode), a) for D, a in f.terms.items()])
