import hypothesis.strategies as st
import pytest

from semicomp.composition import Composition
from semicomp.digraph import Digraph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_arcs(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def semicomplete_digraphs(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_n, max_n))
    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            c = draw(st.integers(0, 2))
            if c != 1:
                arcs.append((a, b))
            if c != 0:
                arcs.append((b, a))
    return Digraph.from_arcs(n, arcs)


@st.composite
def compositions(draw, max_t=4, max_house=3, max_total=8):
    T = draw(semicomplete_digraphs(2, max_t))
    budget = max_total - T.n
    houses = []
    for _ in range(T.n):
        k = draw(st.integers(1, 1 + min(max_house - 1, budget)))
        budget -= k - 1
        houses.append(draw(digraphs(k, k)))
    return Composition(T, tuple(houses))


def D(n, *arcs):
    return Digraph.from_arcs(n, arcs)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def c3():
    return Digraph.cycle(3)
