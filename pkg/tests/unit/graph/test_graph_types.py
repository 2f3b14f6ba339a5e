"""Graph-core types: hosts, labelings, terminal sets and trees."""

from __future__ import annotations

import pytest

from cisstkit.errors import (
    GraphFormatError,
    InvalidSizeError,
    MissingVertexError,
    TerminalSetError,
)
from cisstkit.graph.generators import make_complete, make_complete_bipartite
from cisstkit.graph.types import BipartiteLabeling, Graph, SteinerTree, TerminalSet, make_edge


def test_edges_are_normalized_and_deduplicated() -> None:
    g = Graph(n=3, edges=frozenset({(1, 0), (0, 1), (2, 1)}))
    assert g.sorted_edges == ((0, 1), (1, 2))
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.adjacency_masks[1] == 0b101


def test_graph_rejects_self_loops_and_out_of_range_endpoints() -> None:
    with pytest.raises(GraphFormatError):
        Graph(n=3, edges=frozenset({(1, 1)}))
    with pytest.raises(GraphFormatError):
        Graph(n=3, edges=frozenset({(0, 3)}))
    with pytest.raises(InvalidSizeError):
        Graph(n=0)


def test_complete_and_bipartite_generators() -> None:
    k5 = make_complete(5)
    assert len(k5.edges) == 10
    assert k5.is_connected()

    k23, labeling = make_complete_bipartite(2, 3)
    assert len(k23.edges) == 6
    assert labeling.x_ids == (0, 1)
    assert labeling.y_ids == (2, 3, 4)
    assert not k23.has_edge(0, 1)
    assert not k23.has_edge(2, 3)


def test_bipartite_labels_round_trip_through_ids() -> None:
    labeling = BipartiteLabeling(m1=3, m2=4)
    assert labeling.x(1) == 0
    assert labeling.y(1) == 3
    assert labeling.label(5) == "y3"
    assert labeling.parse_label("X2") == 1
    assert labeling.parse_label(" y4 ") == 6
    with pytest.raises(MissingVertexError):
        labeling.x(4)
    with pytest.raises(GraphFormatError):
        labeling.parse_label("z1")


def test_bipartite_labeling_requires_ordered_sides() -> None:
    with pytest.raises(InvalidSizeError):
        BipartiteLabeling(m1=4, m2=3)
    with pytest.raises(InvalidSizeError):
        BipartiteLabeling(m1=1, m2=3)


def test_terminal_set_rules() -> None:
    s = TerminalSet.of([4, 0, 2])
    assert s.ordered == (0, 2, 4)
    assert 2 in s
    assert len(s) == 3
    assert TerminalSet.of([0, 2]).is_subset_of(s)
    with pytest.raises(TerminalSetError):
        TerminalSet.of([1])
    with pytest.raises(TerminalSetError):
        s.require_within(make_complete(4))


def test_steiner_tree_degrees_and_leaves() -> None:
    star = SteinerTree.star(0, [1, 2, 3])
    assert star.internal_vertices == frozenset({0})
    assert star.leaves == frozenset({1, 2, 3})
    assert star.canonical_key == (3, ((0, 1), (0, 2), (0, 3)))

    relabelled = star.relabel({0: 3, 1: 2, 2: 1, 3: 0})
    assert relabelled.internal_vertices == frozenset({3})
    assert make_edge(3, 0) in relabelled.tree_edges


def test_induced_subgraph_relabels_densely() -> None:
    g = make_complete(5)
    sub, mapping = g.induced_subgraph([4, 1, 3])
    assert mapping == {1: 0, 3: 1, 4: 2}
    assert sub.n == 3
    assert len(sub.edges) == 3
    with pytest.raises(MissingVertexError):
        g.induced_subgraph([7])
