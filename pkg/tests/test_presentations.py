import pytest
from hypothesis import given, settings

from diagcat import (ArityMismatch, CATEGORIES, FamilyMismatch, GeneratorAtom, GeneratorWord,
                     Involution, Morphism, ParseError, T, compose, evaluate_word, identity,
                     make_diagram, parse_word, relation_catalog, derived_relations, star,
                     sharp, synthesize_word, verify_presentation, word_involute)
from diagcat.enumeration import enumerate_diagrams
from diagcat.presentations import CategoryName, Relation, atom_diagram

import strategies as st

ALL = list(CategoryName)


def test_atoms():
    assert GeneratorAtom.parse("ε") is GeneratorAtom.EPS
    assert GeneratorAtom.parse("cup") is GeneratorAtom.C_CUP
    assert GeneratorAtom.MU.arity == (2, 1)
    assert GeneratorAtom.ETA.dual is GeneratorAtom.EPS
    assert GeneratorAtom.S.dual is GeneratorAtom.S
    with pytest.raises(ValueError):
        GeneratorAtom.parse("nu")


def test_word_text():
    w = parse_word("| eta ; mu")
    assert (w.domain, w.codomain) == (1, 1)
    assert str(w) == "| eta ; mu"
    assert str(parse_word("1_3")) == "1_3"
    assert parse_word("1_3").codomain == 3
    with pytest.raises(ArityMismatch):
        parse_word("| ; mu")
    with pytest.raises(ArityMismatch):
        GeneratorWord(1, [(GeneratorAtom.MU,)]).codomain
    with pytest.raises(ParseError) as exc:
        parse_word("| eta ; nu")
    assert exc.value.offset == 8


def test_evaluation_examples():
    assert evaluate_word(parse_word("| eta ; mu")) == Morphism.of(identity(1))
    assert evaluate_word(parse_word("eta ; eps")) == Morphism.of(identity(0), T)
    assert evaluate_word(parse_word("c ; d")) == Morphism.of(identity(0), T)
    cap_cup = make_diagram(2, 2, [[1, 2], ["1'", "2'"]])
    assert evaluate_word(parse_word("d ; c")) == Morphism.of(cap_cup)
    assert evaluate_word(parse_word("d ; c ; d ; c")) == Morphism.of(cap_cup, T)
    assert evaluate_word(parse_word("1_2")) == Morphism.of(identity(2))


def test_word_involutes():
    w = parse_word("| eta ; mu")
    assert str(word_involute(w, Involution.STAR)) == "delta ; | eps"
    assert str(word_involute(w, Involution.SHARP)) == "eta | ; mu"
    for mode in Involution:
        assert evaluate_word(word_involute(w, mode)) == evaluate_word(w).involute(mode)


def test_catalog_sizes():
    sizes = {c: (len(relation_catalog(c)), len(derived_relations(c))) for c in ALL}
    assert sizes[CategoryName.PLANAR_ROOK] == (1, 1)
    assert sizes[CategoryName.ROOK] == (7, 2)
    assert sizes[CategoryName.PARTITION][0] == 20
    assert sum(n for n, _ in sizes.values()) == 66
    assert sum(d for _, d in sizes.values()) == 7
    assert len(CATEGORIES[CategoryName.ROOK].relations) == 4
    assert len(CATEGORIES[CategoryName.MOTZKIN].relations) == 4


@pytest.mark.parametrize("c", ALL, ids=lambda c: c.value)
def test_every_presentation_holds(c):
    rep = verify_presentation(c)
    assert rep.passed, "\n".join(rep.lines())
    assert all(line.startswith("PASS") for line in rep.lines())


def test_mutated_relation_fails():
    bad = Relation("R2", parse_word("eta | ; s"), parse_word("eta |"))
    rep = verify_presentation("rook", [bad])
    assert not rep.passed
    assert rep.failures[0].line().startswith("FAIL R2")
    wrong_scalar = Relation("R3", parse_word("eta ; eps"), parse_word("1_0"), T * T)
    assert not verify_presentation("rook", [wrong_scalar]).passed


def test_generators_are_family_members():
    for spec in CATEGORIES.values():
        for a in spec.generators:
            assert atom_diagram(a) in enumerate_diagrams(
                spec.family, *atom_diagram(a).type)


@pytest.mark.parametrize("c", ALL, ids=lambda c: c.value)
def test_synthesis_round_trip(c):
    spec = CATEGORIES[c]
    limit = 3 if c is CategoryName.PARTITION else 4
    for k in range(limit + 1):
        for l in range(limit + 1):
            for D in enumerate_diagrams(spec.family, k, l):
                w = synthesize_word(D, c)
                assert w.atoms() <= spec.generators | {GeneratorAtom.ID}
                assert evaluate_word(w) == Morphism.of(D), (D, str(w))


def test_synthesis_edge_cases():
    assert str(synthesize_word(identity(3), "rook")) == "1_3"
    assert str(synthesize_word(identity(0), "brauer")) == "1_0"
    with pytest.raises(FamilyMismatch):
        synthesize_word(make_diagram(2, 2, [[1, "2'"], [2, "1'"]]), "motzkin")


@given(st.words(frozenset(GeneratorAtom), domain=2))
def test_random_words_evaluate_in_family(w):
    f = evaluate_word(w)
    assert len(f.terms) == 1
    for mode in Involution:
        assert evaluate_word(word_involute(w, mode)) == f.involute(mode)


@pytest.mark.parametrize("c", ALL, ids=lambda c: c.value)
def test_words_over_generators_stay_in_family(c):
    spec = CATEGORIES[c]
    from diagcat import is_family

    @settings(max_examples=40)
    @given(st.words(spec.generators | {GeneratorAtom.ID}, domain=2))
    def check(w):
        (D,) = evaluate_word(w).terms
        assert is_family(D, spec.family)

    check()
