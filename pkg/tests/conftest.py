import numpy as np
import pytest
from hypothesis import strategies as st

from maco.graph import Graph

TRIANGLES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
BARBELL = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
K3 = [(0, 1), (0, 2), (1, 2)]
PATH3 = [(0, 1), (1, 2)]


@pytest.fixture
def triangles():
    return Graph.from_edges(6, TRIANGLES)


@pytest.fixture
def barbell():
    return Graph.from_edges(6, BARBELL)


@st.composite
def graphs(draw, min_n=2, max_n=12, connected_source=True):
    """Random simple graph; node 0 always has at least one edge."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    if connected_source and not any(0 in e for e in chosen):
        chosen.append((0, draw(st.integers(1, n - 1))))
    return Graph.from_edges(n, chosen)


@st.composite
def pheromones(draw, n):
    """Symmetric strictly positive matrix."""
    seed = draw(st.integers(0, 2**32 - 1))
    raw = np.random.default_rng(seed).uniform(0.1, 10.0, size=(n, n))
    return raw + raw.T


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
