import gzip
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from rainroman.graph import Graph, read_graph6

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


def load_connected(n):
    with open(FIXTURES / f"connected_n{n}.g6") as fh:
        return list(read_graph6(fh))


def load_mindeg2_n9_lines():
    with gzip.open(FIXTURES / "connected_mindeg2_n9.g6.gz", "rt") as fh:
        return [line for line in fh if line.strip()]


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def c5_thread_c5(length):
    """Two C5s joined by a thread of ``length`` edges (length 1 is a bridge)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    v = 4 + length
    path = [0] + list(range(5, v)) + [v]
    edges += list(zip(path, path[1:]))
    ring = [v] + list(range(v + 1, v + 5))
    edges += [(ring[i], ring[(i + 1) % 5]) for i in range(5)]
    return Graph.from_edges(v + 5, edges)


@pytest.fixture(scope="session")
def small_connected():
    """All connected graphs with 3 <= n <= 6."""
    return [g for n in range(3, 7) for g in load_connected(n)]


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
