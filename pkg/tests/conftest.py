import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from localspec.graph import Graph

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

np.seterr(all="raise", under="ignore")

# (criterion id, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE_RESULTS = []


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for i in range(1, n):
        j = draw(st.integers(0, i - 1))
        edges.add((j, i))
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          max_size=2 * n))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def graphs_with_sets(draw, min_n=1, max_n=10):
    g = draw(connected_graphs(min_n, max_n))
    members = draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n, unique=True))
    return g, sorted(members)


@pytest.fixture
def c4():
    from localspec.graph import cycle
    return cycle(4)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(f"criterion {cid}: {'PASS' if ok else 'FAIL'}  {detail}")
