import pytest
from hypothesis import given, settings

from conftest import D, compositions, digraphs
from semicomp.composition import Composition
from semicomp.digraph import Digraph, is_acyclic
from semicomp.errors import ValidationError
from semicomp.factors import (
    PathCycleSubdigraph,
    coverage_maxima,
    cycle_factor,
    cycle_subdigraph_with_lower_bounds,
    k_path_coverage_profile,
    longest_path_peeling,
    max_coverage_cycle_subdigraph,
    one_path_cycle_factor,
    path_cover_number,
    path_factor,
)
from semicomp.oracles import bf_pc

STAR = D(4, (0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0))


def test_cycle_factor_examples(c3):
    assert cycle_factor(c3).cycles == ((0, 1, 2),)
    assert cycle_factor(D(2, (0, 1))) is None
    F = cycle_factor(D(4, (0, 1), (1, 0), (2, 3), (3, 2)))
    assert F.cycles == ((0, 1), (2, 3))


def test_one_path_cycle_factor_examples():
    assert one_path_cycle_factor(D(2, (0, 1))) == PathCycleSubdigraph.make([(0, 1)])
    assert one_path_cycle_factor(Digraph.empty(3)) is None
    G = D(5, (0, 1), (2, 3), (3, 4), (4, 2))
    F = one_path_cycle_factor(G)
    F.validate(G)
    assert F.is_spanning(G) and len(F.paths) == 1


def test_validate_rejects_bad_subdigraphs(c3):
    with pytest.raises(ValidationError):
        PathCycleSubdigraph.make([(0, 2)]).validate(c3)
    with pytest.raises(ValidationError):
        PathCycleSubdigraph.make([(0, 1)], [(1, 2)]).validate(c3)


def test_max_coverage_examples(c3):
    C = Composition.extension(c3, [2, 1, 1])
    _, prof = max_coverage_cycle_subdigraph(C, 0)
    assert prof.per_house[0] == 1
    assert coverage_maxima(Composition.extension(c3, [1, 1, 1])) == (1, 1, 1)
    F, prof = max_coverage_cycle_subdigraph(Composition.extension(Digraph.cycle(2), [2, 2]), "total")
    assert sum(prof.per_house) == 4 and F.size == 4


def test_lower_bound_examples(c3):
    assert cycle_subdigraph_with_lower_bounds(Composition.extension(c3, [1, 1, 1]), (1, 1, 1)).cycles == ((0, 1, 2),)
    assert cycle_subdigraph_with_lower_bounds(Composition.extension(c3, [2, 1, 1]), (2, 1, 1)) is None
    assert cycle_subdigraph_with_lower_bounds(Composition.extension(c3, [2, 1, 1]), (0, 0, 0)).elements == ()


def test_path_cover_examples():
    assert path_cover_number(Digraph.empty(3)) == 3
    T = Digraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)])
    acyc = Composition.extension(T, [3, 1, 2]).expanded
    assert is_acyclic(acyc) and path_cover_number(acyc) == 3
    assert path_cover_number(STAR) == 2


def test_k_path_profile_examples(c3):
    from semicomp.composition import trivial_composition

    assert k_path_coverage_profile(trivial_composition(c3), 1).per_house == (1, 1, 1)
    C = Composition.extension(c3, [2, 1, 1])
    assert k_path_coverage_profile(C, 1).per_house == (2, 1, 1)
    assert k_path_coverage_profile(C, 4).per_house == C.orders


@settings(max_examples=200, deadline=None)
@given(digraphs(1, 6))
def test_path_cover_matches_oracle(G):
    k = path_cover_number(G)
    assert k == bf_pc(G)
    for j in range(k, G.n + 1):
        paths = path_factor(G, j)
        assert len(paths) == j
        PathCycleSubdigraph.make(paths).validate(G)
        assert sorted(v for p in paths for v in p) == list(range(G.n))


@settings(max_examples=150, deadline=None)
@given(compositions(max_total=8))
def test_lower_bound_subdigraph_meets_bounds(C):
    E = Composition.extension(C.quotient, C.orders)
    m = coverage_maxima(E)
    F = cycle_subdigraph_with_lower_bounds(E, m)
    if F is not None:
        F.validate(E.expanded)
        prof = [(F.vertex_mask & h).bit_count() for h in E.house_masks]
        assert all(p >= b for p, b in zip(prof, m))


def test_longest_path_peeling():
    T = Digraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)])
    G = Composition.extension(T, [2, 1, 2]).expanded
    paths = longest_path_peeling(G)
    assert len(paths) == path_cover_number(G)
    PathCycleSubdigraph.make(paths).validate(G)
