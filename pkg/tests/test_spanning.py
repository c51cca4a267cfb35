import pytest
from hypothesis import given, settings

from conftest import D, compositions, semicomplete_digraphs
from semicomp.composition import Composition, recognize, trivial_composition
from semicomp.digraph import Digraph, is_semicomplete, is_strong
from semicomp.errors import PreconditionError, ValidationError
from semicomp.oracles import bf_build_Hk, bf_epsilon, bf_min_strong_spanning
from semicomp.spanning import (
    acyclic_conditions,
    acyclic_spanning,
    build_Hk,
    ear_decomposition,
    epsilon,
    smallest_strong_spanning,
    strong_spanning_composition_no_2cycle,
    strong_spanning_tournament,
)
from semicomp.verify import general_acyclic_examples, star_digraph


def _two_cycle_free(G):
    return all(not (G.has_arc(u, v) and G.has_arc(v, u)) for u, v in G.arcs)


def test_strong_spanning_tournament_examples(c3):
    T = strong_spanning_tournament(Digraph.complete(3))
    assert T.num_arcs == 3 and is_strong(T)
    assert strong_spanning_tournament(c3) == c3
    with pytest.raises(PreconditionError):
        strong_spanning_tournament(Digraph.cycle(2))


@settings(max_examples=200, deadline=None)
@given(semicomplete_digraphs(3, 6))
def test_strong_spanning_tournament_property(G):
    if is_strong(G):
        T = strong_spanning_tournament(G)
        assert T.is_subdigraph_of(G) and is_strong(T)
        assert is_semicomplete(T) and _two_cycle_free(T)


def test_no_2cycle_examples(c3):
    assert strong_spanning_composition_no_2cycle(Composition.extension(Digraph.cycle(2), [2, 3])) is None
    C = Composition(c3, (Digraph.cycle(2), Digraph.cycle(2), Digraph.empty(1)))
    out = strong_spanning_composition_no_2cycle(C)
    G = out.expanded
    assert G.is_subdigraph_of(C.expanded) and is_strong(G) and _two_cycle_free(G)
    out = strong_spanning_composition_no_2cycle(trivial_composition(Digraph.complete(3)))
    assert out.expanded.num_arcs == 3


def test_ear_decomposition_examples(c3):
    ed = ear_decomposition(c3)
    assert ed.ears == (("cycle", (0, 1, 2)),)
    K = Digraph.complete(3)
    ed = ear_decomposition(K)
    ed.validate(K)
    assert len(ed.ears) == 4 and len(ed.ears[0][1]) == 3
    ed = ear_decomposition(Digraph.cycle(2))
    assert ed.ears == (("cycle", (0, 1)),)
    with pytest.raises(ValidationError):
        ear_decomposition(K, start=[0, 2, 1, 5])


@settings(max_examples=200, deadline=None)
@given(compositions(max_total=8))
def test_ear_decomposition_validates(C):
    G = C.expanded
    if G.n >= 2 and is_strong(G):
        ear_decomposition(G).validate(G)


def test_build_Hk_examples(c3):
    assert build_Hk(c3, 0) == c3
    H = build_Hk(c3, 1)
    assert H.n == 5 and H.num_arcs == 10
    H = build_Hk(c3, 2)
    xs, ys = {3, 4}, {5, 6}
    assert all(v in ys for x in xs for v in range(H.n) if H.has_arc(x, v))
    assert build_Hk(star_digraph(), 2) == bf_build_Hk(star_digraph(), 2)


def test_epsilon_examples(c3):
    assert epsilon(c3) == 0
    assert epsilon(star_digraph()) == 2
    assert epsilon(Composition.extension(c3, [2, 2, 2]).expanded) == 0


@settings(max_examples=100, deadline=None)
@given(compositions(max_total=6))
def test_epsilon_matches_definition(C):
    G = C.expanded
    if is_strong(G):
        e = epsilon(G)
        assert bf_epsilon(G) == (e if e <= 3 else None)


def test_ssss_examples(c3):
    assert smallest_strong_spanning(trivial_composition(c3)).num_arcs == 3
    star = recognize(star_digraph())
    G = smallest_strong_spanning(star)
    assert G.num_arcs == 6 and is_strong(G)
    C = Composition.extension(c3, [2, 1, 1])
    G = smallest_strong_spanning(C)
    assert G.num_arcs == 4 + epsilon(C.expanded) == bf_min_strong_spanning(C.expanded).num_arcs


@settings(max_examples=100, deadline=None)
@given(compositions(max_total=7))
def test_ssss_matches_brute_force(C):
    G = C.expanded
    if is_strong(G):
        S = smallest_strong_spanning(C)
        assert S.is_subdigraph_of(G) and is_strong(S)
        assert S.num_arcs == G.n + epsilon(G) == bf_min_strong_spanning(G).num_arcs


def test_acyclic_examples(c3):
    C = Composition.extension(Digraph.cycle(2), [2, 2])
    res = acyclic_spanning(C, "b")
    res.validate(C.expanded)
    C = Composition.extension(c3, [2, 2, 2])
    res = acyclic_spanning(C, "b")
    res.validate(C.expanded)
    assert res.subdigraph.n == 6
    res = acyclic_spanning(trivial_composition(D(2, (0, 1))))
    assert res.case == "a" and (res.source, res.sink) == (0, 1)
    assert res.subdigraph.arcs == ((0, 1),)
    for C in general_acyclic_examples():
        acyclic_spanning(C, "general").validate(C.expanded)
    with pytest.raises(PreconditionError):
        acyclic_spanning(trivial_composition(c3), "b")


@settings(max_examples=200, deadline=None)
@given(compositions(max_total=8))
def test_acyclic_constructions_validate(C):
    cond = acyclic_conditions(C)
    for case in ("a", "b", "general"):
        if cond[case]:
            res = acyclic_spanning(C, case)
            res.validate(C.expanded)
            assert res.case == case
