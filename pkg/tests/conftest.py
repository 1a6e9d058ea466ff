import itertools

import pytest

from planar_rips.complex import FlagComplex, Graph


def k222() -> Graph:
    # parts {0,1}, {2,3}, {4,5}
    return Graph.from_edges(6, [(u, v) for u, v in itertools.combinations(range(6), 2) if u // 2 != v // 2])


def two_octahedra_at_vertex() -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(6), 2) if u // 2 != v // 2]
    ids = [0, 6, 7, 8, 9, 10]  # second copy reuses vertex 0
    edges += [(ids[u], ids[v]) for u, v in itertools.combinations(range(6), 2) if u // 2 != v // 2]
    return Graph.from_edges(11, edges)


@pytest.fixture
def octahedron() -> FlagComplex:
    return FlagComplex(k222())


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
