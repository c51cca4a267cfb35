import pytest
from hypothesis import given, settings

from conftest import D, compositions, digraphs
from semicomp.composition import (
    Composition,
    expand,
    is_in_T1,
    recognize,
    recognize_with_map,
    similar,
    to_extension,
    trivial_composition,
)
from semicomp.digraph import Digraph
from semicomp.errors import CompositionError, PreconditionError, VertexRangeError


def test_expand_examples(c3):
    assert expand(trivial_composition(c3))[0] == c3
    G, vm = expand(Composition.extension(Digraph.cycle(2), [2, 1]))
    assert G.arcs == ((0, 2), (1, 2), (2, 0), (2, 1))
    assert vm.forward == ((0, 0), (0, 1), (1, 0))
    C = Composition(c3, (D(2, (0, 1)), Digraph.empty(1), Digraph.empty(1)))
    assert C.expanded.num_arcs == 1 + 2 + 1 + 2


def test_composition_validation():
    with pytest.raises(CompositionError):
        Composition(Digraph.empty(1), (Digraph.empty(1),))
    with pytest.raises(CompositionError):
        Composition(Digraph.cycle(2), (Digraph.empty(1),))


def test_recognize_examples(c3):
    C = recognize(c3)
    assert C.t == 3 and C.quotient == c3 and C.orders == (1, 1, 1)
    assert recognize(D(3, (0, 1), (1, 2))) is None
    E = Composition.extension(Digraph.cycle(2), [2, 2])
    R = recognize(E.expanded)
    assert R.quotient == E.quotient and R.houses == E.houses


@settings(max_examples=300, deadline=None)
@given(compositions())
def test_recognize_round_trip(C):
    G = C.expanded
    rec = recognize_with_map(G)
    assert rec is not None
    back = rec.composition.expanded.relabel(rec.relabel_back())
    assert back == G
    assert rec.composition.t >= 2


@settings(max_examples=300, deadline=None)
@given(digraphs(2, 6))
def test_recognize_output_is_valid_when_present(G):
    rec = recognize_with_map(G)
    if rec is not None:
        assert rec.composition.is_semicomplete
        assert rec.composition.expanded.relabel(rec.relabel_back()) == G


def test_is_in_T1(c3):
    assert is_in_T1(Digraph.cycle(2))
    assert not is_in_T1(c3)
    assert is_in_T1(Digraph.complete(3))
    with pytest.raises(PreconditionError):
        is_in_T1(D(3, (0, 1)))


def test_to_extension(c3):
    C = Composition(c3, (Digraph.cycle(2), Digraph.empty(1), Digraph.empty(1)))
    E = to_extension(C)
    assert E.orders == C.orders and E.is_extension
    assert to_extension(E) is E


def test_similar():
    C = Composition.extension(Digraph.cycle(3), [2, 1, 1])
    assert similar(C, 0, 1)
    assert not similar(C, 1, 2)
    assert similar(C, 3, 3)
    with pytest.raises(VertexRangeError):
        similar(C, 0, 4)


@settings(max_examples=200, deadline=None)
@given(compositions())
def test_expand_arc_formula(C):
    G, vm = expand(C)
    assert G.n == sum(C.orders)
    for x in range(G.n):
        i, j = vm.forward[x]
        assert vm.flat(i, j) == x
        for y in range(G.n):
            p, q = vm.forward[y]
            want = C.houses[i].has_arc(j, q) if i == p else C.quotient.has_arc(i, p)
            assert G.has_arc(x, y) == want
