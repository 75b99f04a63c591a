import json

import pytest
from hypothesis import given

from diagcat import (Morphism, NotAPartition, OutOfRange, ParseError, Scalar, T, identity,
                     make_diagram)
from diagcat.textio import (diagram_from_json, diagram_to_json, loads, morphism_from_json,
                            morphism_to_json, parse_diagram, parse_morphism, parse_scalar,
                            render, render_morphism, word_from_json, word_to_json)
from diagcat.presentations import parse_word

import strategies as st

FIG1_TEXT = "7 -> 5 ; {1,3,1'},{2,4},{5,3',5'},{6},{7,2'},{4'}"


def test_diagram_text():
    D = parse_diagram(FIG1_TEXT)
    assert D.type == (7, 5) and D.n_blocks == 6
    assert parse_diagram(str(D)) == D
    assert str(identity(2)) == "2 -> 2 ; {1,1'},{2,2'}"
    assert str(identity(0)) == "0 -> 0 ;"
    assert parse_diagram("0 -> 0 ;") == identity(0)
    assert parse_diagram(" 2->2;{2,1'} , {1,2'} ") == make_diagram(2, 2, [[1, "2'"], [2, "1'"]])


def test_diagram_json_golden():
    D = parse_diagram(FIG1_TEXT)
    obj = diagram_to_json(D)
    assert obj["bottom"] == 7 and obj["top"] == 5 and len(obj["blocks"]) == 6
    assert ["1", "3", "1'"] in obj["blocks"]
    assert diagram_from_json(json.loads(json.dumps(obj))) == D
    assert parse_diagram(json.dumps(obj)) == D


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as exc:
        parse_diagram("2 -> 2 ; {1,1'}{2,2'}")
    assert exc.value.offset == 15
    with pytest.raises(ParseError) as exc:
        parse_diagram("2 => 2 ;")
    assert exc.value.offset == 2
    with pytest.raises(ParseError):
        parse_diagram("2' -> 2 ;")
    with pytest.raises(OutOfRange):
        parse_diagram("2 -> 2 ; {3,1'},{2,2'}")
    with pytest.raises(NotAPartition):
        parse_diagram("2 -> 2 ; {1,1'},{1,2'},{2}")


def test_scalars():
    assert parse_scalar("6*t^2 + 1") == Scalar({2: 6, 0: 1})
    assert parse_scalar("-t + 3") == Scalar({1: -1, 0: 3})
    assert parse_scalar("t") == T
    with pytest.raises(ParseError):
        parse_scalar("t t")
    with pytest.raises(ParseError):
        parse_scalar("")


def test_morphism_text():
    assert render_morphism(Morphism.of(identity(0), T)) == "t * (0 -> 0 ;)"
    assert render_morphism(Morphism.of(identity(2))) == "2 -> 2 ; {1,1'},{2,2'}"
    assert render_morphism(Morphism.zero(1, 2)) == "0 : 1 -> 2"
    assert parse_morphism("0 : 1 -> 2") == Morphism.zero(1, 2)
    f = Morphism(1, 1, [(identity(1), Scalar({1: 2, 0: -1}))])
    assert render_morphism(f) == "(2*t - 1) * (1 -> 1 ; {1,1'})"
    assert parse_morphism(render_morphism(f)) == f
    g = parse_morphism("t^2 * (1 -> 1 ; {1},{1'}) - (1 -> 1 ; {1,1'})")
    assert g.terms[identity(1)] == -1
    with pytest.raises(ParseError):
        parse_morphism("t ^ (1 -> 1 ; {1,1'})")


def test_word_json():
    w = parse_word("| eta ; mu")
    assert word_to_json(w) == {"domain": 1, "codomain": 1, "slices": [["|", "eta"], ["mu"]]}
    assert word_from_json(word_to_json(w)) == w
    assert loads(json.dumps(word_to_json(w)), "word") == w


def test_render_formats():
    D = identity(1)
    assert render(D, "ascii").splitlines()[0] == "1 -> 1"
    with pytest.raises(ValueError):
        render(D, "yaml")
    with pytest.raises(ValueError):
        loads("1 -> 1 ;", "picture")


@given(st.diagrams())
def test_diagram_round_trips(D):
    assert parse_diagram(str(D)) == D
    assert parse_diagram(render(D, "json")) == D


@given(st.morphisms(2, 1))
def test_morphism_round_trips(f):
    assert parse_morphism(render_morphism(f)) == f
    assert morphism_from_json(json.loads(json.dumps(morphism_to_json(f)))) == f
