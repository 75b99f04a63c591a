"""Algebraic laws checked on random diagrams under the fixed-seed profile."""

from hypothesis import given
from hypothesis import strategies as st

from diagcat import (Family, Involution, compose, identity, involute, is_family, render,
                     sharp, star, tensor)
from diagcat.textio import loads, parse_diagram, parse_morphism, render_morphism

import strategies as dst

sizes = st.integers(0, 3)


@st.composite
def chain(draw, n):
    """``n`` composable diagrams, listed from the top factor down."""
    objs = [draw(sizes) for _ in range(n + 1)]
    return [draw(dst.diagrams(objs[i], objs[i + 1])) for i in reversed(range(n))]


@given(dst.diagrams())
def test_involution_laws(D):
    assert star(star(D)) == D
    assert sharp(sharp(D)) == D
    assert star(sharp(D)) == sharp(star(D))
    assert star(D).type == (D.top, D.bottom) and sharp(D).type == D.type


@given(chain(2))
def test_involutions_and_composition(pair):
    D, E = pair
    alpha, F = compose(D, E)
    assert compose(star(E), star(D)) == (alpha, star(F))
    assert compose(sharp(D), sharp(E)) == (alpha, sharp(F))


@given(dst.diagrams(), dst.diagrams())
def test_sharp_reverses_tensor(A, B):
    assert sharp(tensor(A, B)) == tensor(sharp(B), sharp(A))
    assert star(tensor(A, B)) == tensor(star(A), star(B))


@given(chain(2), chain(2))
def test_interchange_law(left, right):
    (A, B), (C, D) = left, right
    a1, AB = compose(A, B)
    a2, CD = compose(C, D)
    b1, TT = compose(tensor(A, C), tensor(B, D))
    assert (b1, TT) == (a1 + a2, tensor(AB, CD))


@given(chain(3))
def test_associativity_with_alpha(triple):
    A, B, C = triple
    a1, AB = compose(A, B)
    a2, left = compose(AB, C)
    b1, BC = compose(B, C)
    b2, right = compose(A, BC)
    assert (a1 + a2, left) == (b1 + b2, right)


@given(dst.diagrams())
def test_identities(D):
    assert compose(identity(D.top), D) == (0, D)
    assert compose(D, identity(D.bottom)) == (0, D)


@given(dst.diagrams())
def test_diagram_parse_render_round_trip(D):
    for fmt in ("text", "json"):
        assert parse_diagram(render(D, fmt)) == D


@given(dst.morphisms(1, 2))
def test_morphism_parse_render_round_trip(f):
    assert parse_morphism(render_morphism(f)) == f
    assert loads(render(f, "json"), "morphism") == f


@given(st.sampled_from(list(Family)), st.data())
def test_family_invariant_under_involutions(family, data):
    D = data.draw(dst.diagrams())
    member = is_family(D, family)
    for mode in Involution:
        assert is_family(involute(D, mode), family) == member
