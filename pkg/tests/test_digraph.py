import itertools

import pytest
from hypothesis import given, settings

from conftest import D, digraphs
from semicomp.digraph import (
    Digraph,
    branchings,
    complement_components,
    is_acyclic,
    is_semicomplete,
    is_strong,
    make_digraph,
    reach,
    strong_components,
    topological_order,
)
from semicomp.errors import DuplicateArcError, SelfLoopError, ValidationError, VertexRangeError


def test_make_digraph_examples():
    assert make_digraph(3, [(0, 1), (1, 2), (2, 0)]) == Digraph.cycle(3)
    assert make_digraph(2, [(0, 1), (1, 0)]).num_arcs == 2
    with pytest.raises(SelfLoopError):
        make_digraph(2, [(0, 0)])
    with pytest.raises(VertexRangeError):
        make_digraph(2, [(0, 2)])
    with pytest.raises(DuplicateArcError):
        make_digraph(2, [(0, 1), (0, 1)])


def test_errors_are_distinct_validation_errors():
    for exc in (SelfLoopError, VertexRangeError, DuplicateArcError):
        assert issubclass(exc, ValidationError)
    assert len({SelfLoopError, VertexRangeError, DuplicateArcError}) == 3


def test_arcs_in_lexicographic_order():
    G = D(3, (2, 0), (0, 2), (1, 0), (0, 1))
    assert G.arcs == ((0, 1), (0, 2), (1, 0), (2, 0))


def test_strong_components_examples():
    rep = strong_components(Digraph.cycle(3))
    assert rep.components == ((0, 1, 2),)
    rep = strong_components(D(2, (0, 1)))
    assert rep.components == ((0,), (1,))
    assert rep.initial == (0,) and rep.terminal == (1,)
    rep = strong_components(D(4, (0, 1), (1, 0), (2, 3), (3, 2), (1, 2)))
    assert rep.components == ((0, 1), (2, 3))
    assert rep.initial == (0,) and rep.terminal == (1,)
    assert is_acyclic(rep.condensation)


def test_is_strong_examples():
    assert is_strong(Digraph.cycle(3))
    assert not is_strong(D(2, (0, 1)))
    assert is_strong(Digraph.cycle(2))


def test_complement_components_examples():
    assert complement_components(Digraph.cycle(3)) == ((0,), (1,), (2,))
    assert complement_components(Digraph.cycle(4)) == ((0, 2), (1, 3))
    assert complement_components(Digraph.empty(3)) == ((0, 1, 2),)


def test_semicomplete_and_acyclic_examples():
    assert is_semicomplete(Digraph.cycle(3))
    assert not is_semicomplete(D(3, (0, 1), (1, 2)))
    assert is_semicomplete(Digraph.complete(3))
    assert is_acyclic(D(3, (0, 1), (0, 2), (1, 2)))
    assert not is_acyclic(Digraph.cycle(2))
    assert not is_acyclic(Digraph.cycle(3))


def test_branchings_examples():
    out_b, in_b = branchings(Digraph.cycle(3))
    assert len(out_b.arcs) == 2 and len(in_b.arcs) == 2
    out_b, in_b = branchings(D(3, (0, 1), (0, 2)))
    assert out_b.root == 0 and in_b is None
    out_b, _ = branchings(D(4, (0, 2), (1, 2), (2, 3)))
    assert out_b is None


def _reach_all(G):
    closure = [[u == v or G.has_arc(u, v) for v in range(G.n)] for u in range(G.n)]
    for k, i, j in itertools.product(range(G.n), repeat=3):
        if closure[i][k] and closure[k][j]:
            closure[i][j] = True
    return closure


@settings(max_examples=300, deadline=None)
@given(digraphs(1, 6))
def test_strong_components_match_closure(G):
    closure = _reach_all(G)
    rep = strong_components(G)
    for comp in rep.components:
        for u in comp:
            for v in range(G.n):
                assert (v in comp) == (closure[u][v] and closure[v][u])
    assert is_acyclic(rep.condensation)
    assert rep.initial == tuple(k for k in range(rep.condensation.n) if rep.condensation.inn[k] == 0)


@settings(max_examples=300, deadline=None)
@given(digraphs(1, 6))
def test_complement_components_partition(G):
    comps = complement_components(G)
    assert sorted(v for c in comps for v in c) == list(range(G.n))
    for a, b in itertools.combinations(comps, 2):
        assert all(G.adjacent(u, v) for u in a for v in b)


def test_strong_iff_branchings_everywhere_exhaustive():
    for n in range(1, 5):
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
        for code in range(1 << len(pairs)):
            G = Digraph.from_arcs(n, [p for k, p in enumerate(pairs) if code >> k & 1])
            full = G.full_mask
            every_root = all(reach(G.out, v, full) == full and reach(G.inn, v, full) == full for v in range(n))
            assert is_strong(G) == every_root == (len(strong_components(G).components) == 1)


@settings(max_examples=200, deadline=None)
@given(digraphs(1, 6))
def test_branching_shapes(G):
    out_b, in_b = branchings(G)
    rep = strong_components(G)
    assert (out_b is not None) == (len(rep.initial) == 1)
    assert (in_b is not None) == (len(rep.terminal) == 1)
    if out_b is not None:
        assert len(out_b.arcs) == G.n - 1
        heads = [v for _, v in out_b.arcs]
        assert sorted(heads + [out_b.root]) == list(range(G.n))
        assert all(G.has_arc(*a) for a in out_b.arcs)
    if in_b is not None:
        tails = [u for u, _ in in_b.arcs]
        assert sorted(tails + [in_b.root]) == list(range(G.n))


@settings(max_examples=200, deadline=None)
@given(digraphs(1, 6))
def test_topological_order_when_acyclic(G):
    if is_acyclic(G):
        pos = {v: k for k, v in enumerate(topological_order(G))}
        assert all(pos[u] < pos[v] for u, v in G.arcs)


def test_induced_and_relabel():
    G = Digraph.cycle(4)
    H = G.induced([1, 2, 3])
    assert H.arcs == ((0, 1), (1, 2))
    assert G.relabel([1, 2, 3, 0]).arcs == ((0, 1), (1, 2), (2, 3), (3, 0))
    with pytest.raises(ValidationError):
        G.spanning_subdigraph([(0, 2)])
