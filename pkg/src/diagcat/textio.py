"""Text and JSON forms of diagrams, morphisms and words.

Diagram text is ``"k -> l ; {1,3,1'},{2,4},..."``: bare integers are bottom
vertices and a trailing apostrophe marks a top vertex.  Morphisms are sums of
``coefficient * (diagram)`` terms, with ``"0 : k -> l"`` for zero.
"""

from __future__ import annotations

import json
import re
import string

from .diagram import Diagram, make_diagram
from .errors import DiagramError, ParseError
from .presentations import GeneratorAtom, GeneratorWord, parse_word
from .scalars import Morphism, Scalar

__all__ = [
    "parse_diagram", "parse_scalar", "parse_morphism", "parse_word",
    "render", "render_diagram", "render_morphism", "render_word",
    "diagram_to_json", "diagram_from_json", "morphism_to_json", "morphism_from_json",
    "word_to_json", "word_from_json", "loads", "FORMATS",
]

FORMATS = ("text", "json", "ascii")

_TOKEN = re.compile(r"\s*(?:(?P<arrow>->)|(?P<vertex>\d+['′]?)|(?P<punct>[;{},]))")


class _Scanner:
    def __init__(self, text: str, start: int = 0):
        self.text = text
        self.pos = start

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            return None, None, self._skip_ws()
        kind = m.lastgroup
        return kind, m.group(kind), m.start(kind)

    def _skip_ws(self) -> int:
        p = self.pos
        while p < len(self.text) and self.text[p].isspace():
            p += 1
        return p

    def take(self, kind: str, value: str | None = None, expected: str = "") -> str:
        k, v, at = self.peek()
        if k != kind or (value is not None and v != value):
            got = "end of input" if at >= len(self.text) else repr(self.text[at])
            raise ParseError(f"unexpected {got}", self.text, at, expected or value or kind)
        self.pos = _TOKEN.match(self.text, self.pos).end()
        return v

    def at_end(self) -> bool:
        return self._skip_ws() >= len(self.text)


def _parse_diagram_at(sc: _Scanner) -> Diagram:
    """Parse the whole remaining input as one diagram."""
    k = int(_strip_count(sc.take("vertex", expected="bottom vertex count"), sc))
    sc.take("arrow", expected="'->'")
    l = int(_strip_count(sc.take("vertex", expected="top vertex count"), sc))
    sc.take("punct", ";", expected="';'")
    blocks = []
    kind, value, _ = sc.peek()
    if kind == "punct" and value == "{":
        while True:
            start = sc.peek()[2]
            sc.take("punct", "{", expected="'{'")
            block = [sc.take("vertex", expected="vertex")]
            while sc.peek()[1] == ",":
                sc.take("punct", ",")
                block.append(sc.take("vertex", expected="vertex"))
            sc.take("punct", "}", expected="',' or '}'")
            blocks.append((start, block))
            if sc.peek()[1] != ",":
                break
            sc.take("punct", ",")
    if not sc.at_end():
        at = sc._skip_ws()
        raise ParseError(f"trailing input {sc.text[at:]!r}", sc.text, at, "',' or end of input")
    try:
        return make_diagram(k, l, [b for _, b in blocks])
    except DiagramError as exc:
        # semantic problems keep their own type but gain a position
        exc.args = (f"{exc.args[0]} (in {sc.text[:sc.pos].strip()!r})",)
        raise


def _strip_count(tok: str, sc: _Scanner) -> str:
    if not tok.isdigit():
        raise ParseError("a vertex count cannot carry a prime", sc.text, sc.pos, "integer")
    return tok


def parse_diagram(text: str) -> Diagram:
    text = text.strip()
    if text.startswith("{"):
        return diagram_from_json(json.loads(text))
    return _parse_diagram_at(_Scanner(text))


_MONO = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*t(?:\s*\^\s*(\d+))?)?\s*")


def parse_scalar(text: str) -> Scalar:
    """Parse an integer polynomial in ``t`` such as ``"6*t^2 - t + 1"``."""
    pos, out, first = 0, Scalar(0), True
    s = text.strip()
    if not s:
        raise ParseError("empty scalar", text, 0, "polynomial in t")
    while pos < len(s):
        m = _MONO.match(s, pos)
        sign, num, tpart, exp = m.groups()
        if (not sign and not first) or (num is None and tpart is None) or m.end() == pos:
            raise ParseError(f"bad scalar term {s[pos:]!r}", text, pos, "term like 3*t^2")
        c = int(num) if num is not None else 1
        e = 0 if tpart is None else (int(exp) if exp is not None else 1)
        out = out + Scalar({e: -c if sign == "-" else c})
        pos, first = m.end(), False
    return out


def _split_terms(s: str):
    """Yield ``(sign, start, term)`` for the top-level summands of ``s``."""
    depth, start, sign = 0, 0, 1
    for i, ch in enumerate(s + "+"):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and (i == len(s) or s[i + 1:i + 2] != ">"):
            if s[start:i].strip():
                yield sign, start, s[start:i]
                sign = 1
            if ch == "-":
                sign = -sign
            start = i + 1


def _parse_term(text: str, start: int, term: str) -> tuple[Diagram, Scalar]:
    t = term.rstrip()
    lead = len(term) - len(term.lstrip())
    if not t.endswith(")"):
        raise ParseError("expected '(diagram)'", text, start + len(t), "')'")
    depth = 0
    for i in range(len(t) - 1, -1, -1):
        depth += {")": 1, "(": -1}.get(t[i], 0)
        if depth == 0:
            break
    if depth:
        raise ParseError("unbalanced parenthesis", text, start + len(t) - 1, "'('")
    prefix = t[:i].strip()
    coef = Scalar(1)
    if prefix:
        if not prefix.endswith("*"):
            raise ParseError("expected '*' before the diagram", text, start + i, "'*'")
        ctext = prefix[:-1].strip()
        if ctext.startswith("(") and ctext.endswith(")"):
            ctext = ctext[1:-1]
        try:
            coef = parse_scalar(ctext)
        except ParseError as exc:
            raise ParseError(str(exc.args[0]).split(" at offset")[0], text,
                             start + lead + exc.offset, exc.expected) from None
    try:
        D = parse_diagram(t[i + 1:-1])
    except ParseError as exc:
        raise ParseError(str(exc.args[0]).split(" at offset")[0], text,
                         start + i + 1 + exc.offset, exc.expected) from None
    return D, coef


def parse_morphism(text: str) -> Morphism:
    """Inverse of :func:`render_morphism`; a bare diagram is taken with coefficient 1."""
    s = text.strip()
    if s.startswith("{"):
        return morphism_from_json(json.loads(s))
    m = re.fullmatch(r"0\s*:\s*(\d+)\s*->\s*(\d+)", s)
    if m:
        return Morphism.zero(int(m.group(1)), int(m.group(2)))
    if "(" not in s:
        return Morphism.of(parse_diagram(s))
    terms = []
    for sign, start, term in _split_terms(s):
        D, c = _parse_term(s, start, term)
        terms.append((D, c * sign))
    if not terms:
        raise ParseError("empty morphism", text, 0, "term")
    src, tgt = terms[0][0].type
    return Morphism(src, tgt, terms)


def render_diagram(D: Diagram) -> str:
    return str(D)


def _coef_text(c: Scalar) -> str:
    s = str(c)
    return s if len(c.coeffs) == 1 and not s.startswith("-") else f"({s})"


def render_morphism(f: Morphism) -> str:
    if f.is_zero():
        return f"0 : {f.source} -> {f.target}"
    if len(f.terms) == 1 and next(iter(f.terms.values())) == 1:
        return str(next(iter(f.terms)))
    parts = []
    for D, c in f.terms.items():
        parts.append(f"({D})" if c == 1 else f"{_coef_text(c)} * ({D})")
    return " + ".join(parts)


def render_word(w: GeneratorWord) -> str:
    return str(w)


def _vertex_strings(block) -> list[str]:
    return [str(v) for v in block]


def diagram_to_json(D: Diagram) -> dict:
    return {"bottom": D.bottom, "top": D.top,
            "blocks": [_vertex_strings(b) for b in D.blocks]}


def diagram_from_json(obj: dict) -> Diagram:
    return make_diagram(obj["bottom"], obj["top"], obj["blocks"])


def morphism_to_json(f: Morphism) -> dict:
    return {"source": f.source, "target": f.target,
            "terms": [{"coefficient": {str(e): c for e, c in s.coeffs.items()},
                       "diagram": diagram_to_json(D)} for D, s in f.terms.items()]}


def morphism_from_json(obj: dict) -> Morphism:
    terms = [(diagram_from_json(t["diagram"]),
              Scalar({int(e): c for e, c in t["coefficient"].items()})) for t in obj["terms"]]
    return Morphism(obj["source"], obj["target"], terms)


def word_to_json(w: GeneratorWord) -> dict:
    return {"domain": w.domain, "codomain": w.codomain,
            "slices": [[a.value for a in s] for s in w.slices]}


def word_from_json(obj: dict) -> GeneratorWord:
    slices = [tuple(GeneratorAtom.parse(a) for a in s) for s in obj["slices"]]
    w = GeneratorWord(obj["domain"], slices)
    w.codomain
    return w


def _letters():
    alphabet = string.ascii_lowercase + string.ascii_uppercase
    for a in alphabet:
        yield a
    n = 0
    while True:
        yield f"b{n}"
        n += 1


def render_ascii(D: Diagram) -> str:
    """Two rows of vertices; vertices in the same block share a letter."""
    names = {}
    gen = _letters()
    for a in D.labels:
        if a not in names:
            names[a] = next(gen)
    k = D.bottom
    sizes = D.block_sizes()

    def row(indices, labels, prime):
        heads = [f"{i}{prime}" for i in indices]
        marks = [names[a] if sizes[a] > 1 else "." for a in labels]
        w = max([len(h) for h in heads] + [len(m) for m in marks] + [1]) + 1
        return ("".join(h.ljust(w) for h in heads).rstrip(),
                "".join(m.ljust(w) for m in marks).rstrip())

    top_head, top_marks = row(range(1, D.top + 1), D.labels[k:], "'")
    bot_head, bot_marks = row(range(1, k + 1), D.labels[:k], "")
    lines = [f"{k} -> {D.top}", "top    " + top_head, "       " + top_marks,
             "bottom " + bot_head, "       " + bot_marks]
    return "\n".join(line.rstrip() for line in lines)


def render(obj, fmt: str = "text") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, Diagram):
        if fmt == "json":
            return json.dumps(diagram_to_json(obj))
        return render_ascii(obj) if fmt == "ascii" else render_diagram(obj)
    if isinstance(obj, Morphism):
        if fmt == "json":
            return json.dumps(morphism_to_json(obj))
        if fmt == "ascii":
            return "\n\n".join(f"coefficient {c}\n{render_ascii(D)}"
                               for D, c in obj.terms.items()) or render_morphism(obj)
        return render_morphism(obj)
    if isinstance(obj, GeneratorWord):
        if fmt == "json":
            return json.dumps(word_to_json(obj))
        if fmt == "ascii":
            return "\n".join(" ".join(a.value for a in s) for s in reversed(obj.slices)) \
                or str(obj)
        return render_word(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


def loads(text: str, kind: str):
    """Parse ``text`` as a ``diagram``, ``morphism`` or ``word`` (text or JSON)."""
    s = text.strip()
    if kind == "diagram":
        return parse_diagram(s)
    if kind == "morphism":
        return parse_morphism(s)
    if kind == "word":
        return word_from_json(json.loads(s)) if s.startswith("{") else parse_word(s)
    raise ValueError(f"unknown kind {kind!r}")
