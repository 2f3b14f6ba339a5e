"""Pytest configuration and fixtures for cisstkit tests."""
import sys
from pathlib import Path

import pytest


def pytest_sessionstart(session):
    """Ensure tests import the local package under ./src and the schema package at the root."""
    repo_root = Path(__file__).resolve().parents[1]
    sys.path.insert(0, str(repo_root))
    sys.path.insert(0, str(repo_root / "src"))


def pytest_sessionfinish(session, exitstatus):
    """Check that coverage data was collected if --cov was requested.

    This prevents silent "no data collected" scenarios that produce 0% coverage
    without failing the test run.
    """
    cov_enabled = any("--cov" in str(arg) for arg in session.config.args)
    if not cov_enabled:
        return

    coverage_files = list(Path.cwd().glob(".coverage*"))
    if not coverage_files:
        pytest.exit(
            "Coverage was enabled but no data was collected. "
            "Check that tests import from 'cisstkit' (the package) not 'src/cisstkit' (filesystem path).",
            returncode=1,
        )


@pytest.fixture
def k9_three_trees():
    """A 9-vertex host carrying exactly three completely independent trees for |S| = 8."""
    from cisstkit.construct import build_cissts_complete
    from cisstkit.graph.types import Graph, TerminalSet, TreeFamily

    s = TerminalSet.of(range(8))
    full = build_cissts_complete(9, s)
    trees = full.trees[:3]
    edges = frozenset().union(*(tree.tree_edges for tree in trees))
    host = Graph(n=9, edges=edges)
    return TreeFamily(host=host, terminals=s, trees=trees)


@pytest.fixture(scope="session")
def connected_sample():
    """Fifty seeded connected graphs on 3 to 6 vertices, identical on every run."""
    import networkx as nx

    from cisstkit.graph.types import Graph

    graphs = []
    for index in range(50):
        n = 3 + index % 4
        p = (0.35, 0.5, 0.7)[index % 3]
        seed = index
        nx_graph = nx.gnp_random_graph(n, p, seed=seed)
        while not nx.is_connected(nx_graph):
            seed += 1000
            nx_graph = nx.gnp_random_graph(n, p, seed=seed)
        graphs.append(Graph(n=n, edges=frozenset(nx_graph.edges())))
    return graphs
