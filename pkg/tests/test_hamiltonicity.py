import pytest
from hypothesis import given, settings

from conftest import D, compositions
from semicomp.composition import Composition, trivial_composition
from semicomp.digraph import Digraph
from semicomp.errors import PreconditionError, ValidationError
from semicomp.factors import PathCycleSubdigraph, max_coverage_cycle_subdigraph
from semicomp.hamiltonicity import (
    extension_ham,
    ham_cycle,
    ham_path,
    ham_path_from_factor,
    merge_cycle_subdigraph,
    shrink_factor,
)
from semicomp.oracles import bf_ham_cycle, bf_ham_path


def _is_ham_path(G, p):
    return sorted(p) == list(range(G.n)) and all(G.has_arc(u, v) for u, v in zip(p, p[1:]))


def _is_ham_cycle(G, c):
    return _is_ham_path(G, c) and G.has_arc(c[-1], c[0])


def test_shrink_examples(c3):
    C = Composition(c3, (D(2, (0, 1)), Digraph.empty(1), Digraph.empty(1)))
    sr = shrink_factor(C, PathCycleSubdigraph.make([(0, 1, 2, 3)]))
    assert sr.extension.orders == (1, 1, 1)
    assert sr.shrunk_paths[0] == (0, 1)
    assert sr.expand_sequence(sr.factor.paths[0]) == [0, 1, 2, 3]
    E = Composition.extension(c3, [2, 1, 1])
    sr = shrink_factor(E, PathCycleSubdigraph.make(cycles=[(0, 2, 3)]))
    assert sr.extension.orders == (1, 1, 1)
    assert all(len(p) == 1 for p in sr.shrunk_paths)
    with pytest.raises(ValidationError):
        shrink_factor(E, PathCycleSubdigraph())


def test_ham_cycle_examples(c3):
    assert ham_cycle(trivial_composition(c3)) == [0, 1, 2]
    assert ham_cycle(Composition.extension(c3, [2, 1, 1])) is None
    C = Composition(c3, (D(2, (0, 1)), Digraph.empty(1), Digraph.empty(1)))
    assert ham_cycle(C) == [0, 1, 2, 3]


def test_ham_path_examples(c3):
    assert ham_path(trivial_composition(D(2, (0, 1)))) == [0, 1]
    C = Composition.extension(c3, [2, 1, 1])
    p = ham_path(C)
    assert p is not None and _is_ham_path(C.expanded, p)
    assert ham_path(Composition.extension(Digraph.cycle(2), [3, 1])) is None


def test_ham_path_from_factor_examples():
    C = Composition.extension(Digraph.cycle(2), [1, 2])
    F = PathCycleSubdigraph.make([(1, 0, 2)])
    assert ham_path_from_factor(C, F) == [1, 0, 2]
    T = D(4, (0, 1), (1, 0), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3))
    C = trivial_composition(T)
    p = ham_path_from_factor(C, PathCycleSubdigraph.make([(2, 3)], [(0, 1)]))
    assert _is_ham_path(T, p)
    with pytest.raises(PreconditionError):
        ham_path_from_factor(C, PathCycleSubdigraph.make([(0, 1)]))
    T3 = D(3, (0, 1), (1, 0), (1, 2), (2, 0))
    with pytest.raises(PreconditionError):
        ham_path_from_factor(trivial_composition(T3), PathCycleSubdigraph.make([(2,)], [(0, 1)]))


def test_merge_examples(c3):
    E = Composition.extension(c3, [1, 1, 1])
    assert merge_cycle_subdigraph(E, PathCycleSubdigraph.make(cycles=[(0, 1, 2)])) == [0, 1, 2]
    E = Composition.extension(Digraph.cycle(2), [2, 2])
    F, _ = max_coverage_cycle_subdigraph(E)
    cyc = merge_cycle_subdigraph(E, F)
    assert len(cyc) == 4 and _is_ham_cycle(E.expanded, cyc)


def test_extension_ham_examples(c3):
    p, c = extension_ham(Composition.extension(c3, [1, 1, 1]))
    assert p is not None and c is not None
    p, c = extension_ham(Composition.extension(Digraph.cycle(2), [2, 1]))
    assert p == [0, 2, 1] and c is None
    p, c = extension_ham(trivial_composition(D(2, (0, 1))))
    assert p == [0, 1] and c is None


@settings(max_examples=300, deadline=None)
@given(compositions(max_total=8))
def test_decisions_match_brute_force(C):
    G = C.expanded
    p, c = ham_path(C), ham_cycle(C)
    assert (p is None) == (bf_ham_path(G) is None)
    assert (c is None) == (bf_ham_cycle(G) is None)
    if p is not None:
        assert _is_ham_path(G, p)
    if c is not None:
        assert _is_ham_cycle(G, c)
