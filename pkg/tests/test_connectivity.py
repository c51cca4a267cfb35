import pytest
from hypothesis import given, settings

from conftest import D, compositions
from semicomp.composition import Composition, recognize, trivial_composition
from semicomp.connectivity import (
    check_house_arc_deletion,
    check_separator_structure,
    minimal_separators,
    two_non_separating_vertices,
    vertex_connectivity,
)
from semicomp.digraph import Digraph, is_strong, is_strong_mask
from semicomp.errors import PreconditionError, ScaleError
from semicomp.oracles import bf_minimal_separators
from semicomp.verify import t1_deletion_family, t1_separator_example


def test_vertex_connectivity_examples(c3):
    assert vertex_connectivity(c3) == 1
    assert vertex_connectivity(Digraph.complete(3)) == 2
    assert vertex_connectivity(Digraph.cycle(4)) == 1
    assert vertex_connectivity(D(2, (0, 1))) == 0


def test_minimal_separators_examples(c3):
    assert [r.separator for r in minimal_separators(Digraph.cycle(4))] == [(0,), (1,), (2,), (3,)]
    assert [r.separator for r in minimal_separators(c3)] == [(0,), (1,), (2,)]
    assert minimal_separators(Digraph.complete(3)) == []
    with pytest.raises(ScaleError):
        minimal_separators(Digraph.cycle(13))


def test_separator_structure_examples(c3):
    v = check_separator_structure(trivial_composition(c3))
    assert v.hypothesis_holds and v.holds and v.separators_checked == 3
    v = check_separator_structure(t1_separator_example())
    assert not v.hypothesis_holds and not v.holds
    assert v.violation[1] == "splits-component"


def test_house_deletion_examples(c3):
    C = Composition(c3, (Digraph.cycle(2), Digraph.empty(1), Digraph.empty(1)))
    v = check_house_arc_deletion(C, 0)
    assert v.preserved
    v = check_house_arc_deletion(C, 1)
    assert v.before == v.after
    fam = check_house_arc_deletion(t1_deletion_family(3), 1)
    assert not fam.hypothesis_holds
    assert fam.after < fam.before


def test_two_vertices_examples(c3):
    C = Composition.extension(c3, [2, 1, 1])
    assert two_non_separating_vertices(C) == (0, 1)
    T = D(4, (0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3))
    a, b = two_non_separating_vertices(trivial_composition(T))
    assert a != b
    for v in (a, b):
        assert is_strong_mask(T, T.full_mask & ~(1 << v))
    assert len(set(two_non_separating_vertices(recognize(Digraph.complete(4)) or trivial_composition(Digraph.complete(4))))) == 2
    with pytest.raises(PreconditionError):
        two_non_separating_vertices(trivial_composition(c3))


@settings(max_examples=150, deadline=None)
@given(compositions(max_total=7))
def test_separators_match_definition(C):
    G = C.expanded
    if is_strong(G):
        fast = sorted(r.separator for r in minimal_separators(G))
        slow = sorted(tuple(s) for s in bf_minimal_separators(G))
        assert fast == slow
