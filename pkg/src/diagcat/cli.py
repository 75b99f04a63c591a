"""Command-line interface: ``diagcat <command> ...`` (or ``python -m diagcat``).

Exit status is 0 on success, 1 on a domain error (bad diagram, wrong family,
failed verification) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .category import Involution, skeleton
from .diagram import Diagram, Family
from .enumeration import closure_check, count, enumerate_diagrams, multiplication_table
from .errors import DiagramError
from .factorization import decompose_rook, decompose_rook_brauer, decompose_skeleton
from .presentations import (GeneratorAtom, category_spec, evaluate_word, synthesize_word,
                            verify_presentation)
from .rook import factor, to_matrix
from .scalars import Morphism, Scalar
from .textio import (diagram_to_json, loads, morphism_to_json, parse_diagram, render,
                     word_to_json)


class _Failure(Exception):
    """Domain-level failure that has already been reported."""


def _family(name: str) -> Family:
    try:
        return Family.from_name(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _category(name: str):
    try:
        return category_spec(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _specialize(f: Morphism, t) -> Morphism:
    if t is None:
        return f
    return Morphism(f.source, f.target, [(D, Scalar(c.eval_at(t))) for D, c in f.terms.items()])


class _Out:
    def __init__(self, args):
        self.fmt = args.format
        self.t = args.t

    def emit(self, obj):
        if isinstance(obj, Morphism):
            obj = _specialize(obj, self.t)
        print(render(obj, self.fmt))

    def emit_many(self, objs):
        if self.fmt == "json":
            print(json.dumps([_to_json(o) for o in objs]))
        else:
            for o in objs:
                print(render(o, self.fmt))


def _to_json(obj):
    if isinstance(obj, Diagram):
        return diagram_to_json(obj)
    if isinstance(obj, Morphism):
        return morphism_to_json(obj)
    return word_to_json(obj)


def _check_size(args, *sizes):
    if args.max_size is not None and any(s > args.max_size for s in sizes):
        raise DiagramError(f"object size above --max-size {args.max_size}")


def cmd_parse(args, out):
    out.emit(parse_diagram(args.diagram))


def cmd_compose(args, out):
    upper = loads(args.upper, "morphism")
    lower = loads(args.lower, "morphism")
    out.emit(upper.compose(lower))


def cmd_tensor(args, out):
    result = loads(args.left, "morphism")
    for text in args.right:
        result = result.tensor(loads(text, "morphism"))
    out.emit(result)


def cmd_involute(mode):
    def run(args, out):
        out.emit(loads(args.diagram, "morphism").involute(mode))
    return run


def cmd_skeleton(args, out):
    S, kb, kt = skeleton(parse_diagram(args.diagram))
    if out.fmt == "json":
        print(json.dumps({"skeleton": diagram_to_json(S), "kept_bottom": kb, "kept_top": kt}))
    else:
        out.emit(S)
        print("kept bottom: " + " ".join(map(str, kb)))
        print("kept top: " + " ".join(f"{j}'" for j in kt))


def cmd_matrix(args, out):
    M = to_matrix(parse_diagram(args.diagram))
    if out.fmt == "json":
        print(json.dumps(M.to_array().tolist()))
    else:
        print(M.text())


def cmd_factor(args, out):
    a, b = factor(to_matrix(parse_diagram(args.diagram)), args.mode)
    names = ("S", "P") if args.mode == "sp" else ("P", "S")
    if out.fmt == "json":
        print(json.dumps({n: m.to_array().tolist() for n, m in zip(names, (a, b))}))
    else:
        print(f"{names[0]}:\n{a.text()}\n{names[1]}:\n{b.text()}")


_FACTOR_NAMES = {
    "skeleton": ("P1", "K", "P2"), "sp": ("S", "P"), "ps": ("P", "S"),
    "bp": ("B", "P"), "pb": ("P", "B"), "sm": ("S", "M"), "ms": ("M", "S"),
}


def cmd_decompose(args, out):
    D = parse_diagram(args.diagram)
    if args.mode == "skeleton":
        factors = decompose_skeleton(D)
    elif args.mode in ("sp", "ps"):
        factors = decompose_rook(D, args.mode)
    else:
        factors = decompose_rook_brauer(D, args.mode)
    names = _FACTOR_NAMES[args.mode]
    if out.fmt == "json":
        print(json.dumps({n: diagram_to_json(F) for n, F in zip(names, factors)}))
    elif out.fmt == "ascii":
        for n, F in zip(names, factors):
            print(f"{n}:\n{render(F, 'ascii')}")
    else:
        print("D = " + " o ".join(names))
        for n, F in zip(names, factors):
            print(f"{n} = {F}")


def cmd_enumerate(args, out):
    _check_size(args, args.k, args.l)
    out.emit_many(enumerate_diagrams(args.family, args.k, args.l))


def cmd_count(args, out):
    _check_size(args, args.k, args.l)
    print(count(args.family, args.k, args.l))


def cmd_closure(args, out):
    _check_size(args, args.k, args.l, args.m)
    rep = closure_check(args.family, args.k, args.l, args.m)
    if out.fmt == "json":
        print(json.dumps({"family": rep.family.value, "pairs": rep.pairs,
                          "alpha_histogram": {str(a): n for a, n in sorted(rep.alpha_histogram.items())},
                          "violations": len(rep.violations)}))
    else:
        print(rep)
    if not rep.ok:
        raise _Failure()


def cmd_synthesize(args, out):
    out.emit(synthesize_word(parse_diagram(args.diagram), args.category))


def cmd_eval_word(args, out):
    w = loads(args.word, "word")
    extra = w.atoms() - args.category.generators - {GeneratorAtom.ID}
    if extra:
        names = ", ".join(sorted(a.value for a in extra))
        raise DiagramError(f"{names} not among the generators of {args.category}")
    out.emit(evaluate_word(w))


def cmd_verify(args, out):
    rep = verify_presentation(args.category)
    if out.fmt == "json":
        print(json.dumps({"category": rep.category, "passed": rep.passed,
                          "relations": [{"name": r.relation.name, "relation": str(r.relation),
                                         "derived": r.derived, "passed": r.passed}
                                        for r in rep.results]}))
    else:
        print(rep)
    if not rep.passed:
        raise _Failure()


def cmd_table(args, out):
    _check_size(args, args.k, args.k)
    basis, table = multiplication_table(args.family, args.k)
    def entry(alpha, j):
        if j is None:
            return "-"
        if out.t is not None:
            return f"{out.t ** alpha} * {j}"
        return f"t^{alpha} * {j}"
    if out.fmt == "json":
        print(json.dumps({"basis": [diagram_to_json(D) for D in basis],
                          "table": [[entry(*e) for e in row] for row in table]}))
        return
    for i, D in enumerate(basis):
        print(f"[{i}] {D}")
    for i, row in enumerate(table):
        print(f"{i}: " + " | ".join(entry(*e) for e in row))


def build_parser() -> argparse.ArgumentParser:
    def common(default):
        parent = argparse.ArgumentParser(add_help=False)
        parent.add_argument("--format", choices=("text", "json", "ascii"),
                            default=default or "text")
        parent.add_argument("--t", type=int, default=default,
                            help="specialize t to this integer after computing")
        parent.add_argument("--max-size", type=int, default=default,
                            help="refuse enumerations with an object larger than this")
        return parent

    # subcommands repeat the global flags without overriding earlier values
    sub_common = common(argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="diagcat", parents=[common(None)],
                                description="Partition diagram categories over Z[t].")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[sub_common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("parse", cmd_parse, "parse and re-render a diagram").add_argument("diagram")
    sp = add("compose", cmd_compose, "compose upper o lower")
    sp.add_argument("--upper", required=True)
    sp.add_argument("--lower", required=True)
    sp = add("tensor", cmd_tensor, "tensor product, left operand leftmost")
    sp.add_argument("left")
    sp.add_argument("right", nargs="+")
    add("star", cmd_involute(Involution.STAR), "reflect top and bottom").add_argument("diagram")
    add("sharp", cmd_involute(Involution.SHARP), "reflect left and right").add_argument("diagram")
    add("skeleton", cmd_skeleton, "drop singleton blocks").add_argument("diagram")
    add("matrix", cmd_matrix, "rook matrix of a rook diagram").add_argument("diagram")
    sp = add("factor", cmd_factor, "permutation times pseudo-echelon rook matrix")
    sp.add_argument("--mode", choices=("sp", "ps"), default="sp")
    sp.add_argument("diagram")
    sp = add("decompose", cmd_decompose, "factor a diagram into simpler diagrams")
    sp.add_argument("--mode", choices=tuple(_FACTOR_NAMES), default="skeleton")
    sp.add_argument("diagram")
    for name, func in (("enumerate", cmd_enumerate), ("count", cmd_count)):
        sp = add(name, func, f"{name} family diagrams of type K -> L")
        sp.add_argument("--family", type=_family, required=True)
        sp.add_argument("k", type=int)
        sp.add_argument("l", type=int)
    sp = add("closure", cmd_closure, "check closure of a family under composition")
    sp.add_argument("--family", type=_family, required=True)
    for n in "klm":
        sp.add_argument(n, type=int)
    sp = add("synthesize", cmd_synthesize, "write a diagram as a generator word")
    sp.add_argument("--category", type=_category, required=True)
    sp.add_argument("diagram")
    sp = add("eval-word", cmd_eval_word, "evaluate a generator word")
    sp.add_argument("--category", type=_category, required=True)
    sp.add_argument("word")
    sp = add("verify", cmd_verify, "check every relation of a presentation")
    sp.add_argument("--category", type=_category, required=True)
    sp = add("table", cmd_table, "multiplication table of End(K)")
    sp.add_argument("--family", type=_family, required=True)
    sp.add_argument("k", type=int)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for n in ("k", "l", "m"):
        if getattr(args, n, 0) < 0:
            parser.error(f"{n.upper()} must be nonnegative")
    try:
        args.func(args, _Out(args))
    except _Failure:
        return 1
    except (DiagramError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
