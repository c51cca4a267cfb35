import pytest
from hypothesis import given, settings

from conftest import digraphs
from semicomp import kernels

pytestmark = pytest.mark.skipif("cython" not in kernels.available(), reason="compiled kernels not built")

PY = kernels.module("python")


def _cy():
    return kernels.module("cython")


def _args(G):
    return list(G.out), list(G.inn), G.n


@settings(max_examples=150, deadline=None)
@given(digraphs(1, 7))
def test_tables_agree(G):
    cy = _cy()
    out, inn, n = _args(G)
    for name in ("strong_table", "path_ends_table", "cycle_table"):
        assert list(getattr(PY, name)(out, inn, n)) == list(getattr(cy, name)(out, inn, n)), name
    ends = PY.path_ends_table(out, inn, n)
    assert list(PY.path_cover_table(ends, n)) == list(cy.path_cover_table(ends, n))


@settings(max_examples=150, deadline=None)
@given(digraphs(1, 7))
def test_searches_agree(G):
    cy = _cy()
    out, inn, n = _args(G)
    assert sorted(PY.minimal_separators(out, inn, n)) == sorted(cy.minimal_separators(out, inn, n))
    assert (PY.ham_path_search(out, inn, n) is None) == (cy.ham_path_search(out, inn, n) is None)
    assert (PY.ham_cycle_search(out, inn, n) is None) == (cy.ham_cycle_search(out, inn, n) is None)
    for length in range(2, n + 1):
        a = PY.find_cycle_of_length(out, n, length)
        b = cy.find_cycle_of_length(out, n, length)
        assert (a is None) == (b is None)
    for v in range(n):
        assert set(PY.cycle_lengths_through(out, inn, n, v)) == set(cy.cycle_lengths_through(out, inn, n, v))
    for s in range(n):
        for t in range(n):
            if s != t and not G.has_arc(s, t):
                assert PY.min_vertex_cut(out, n, s, t) == cy.min_vertex_cut(out, n, s, t)


@settings(max_examples=60, deadline=None)
@given(digraphs(2, 5))
def test_min_strong_spanning_sizes_agree(G):
    from semicomp.digraph import is_strong

    if is_strong(G):
        cy = _cy()
        out, inn, n = _args(G)
        a, b = PY.min_strong_spanning(out, inn, n), cy.min_strong_spanning(out, inn, n)
        assert len(a) == len(b)


def test_use_switches_backend():
    before = kernels.BACKEND
    try:
        kernels.use("python")
        assert kernels.strong_table is PY.strong_table
    finally:
        kernels.use("cython" if "cython" in before else "python")
    with pytest.raises(ValueError):
        kernels.module("fortran")
