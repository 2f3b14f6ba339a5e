from __future__ import annotations

import pytest

from cisstkit.errors import RangeError
from cisstkit.graph.generators import make_complete, make_complete_bipartite
from cisstkit.graph.trees import is_steiner_tree
from cisstkit.graph.types import Graph, TerminalSet
from cisstkit.search import enumerate_steiner_trees


def test_k4_terminal_pair_has_one_tree_per_path() -> None:
    k4 = make_complete(4)
    s = TerminalSet.of([0, 1])
    trees = list(enumerate_steiner_trees(k4, s))
    # the edge, two paths of length two, two of length three
    assert len(trees) == 5
    assert trees[0].sorted_edges == ((0, 1),)
    assert [len(tree.tree_edges) for tree in trees] == [1, 2, 2, 3, 3]
    assert all(is_steiner_tree(k4, s, tree) for tree in trees)


def test_spanning_case_counts_labelled_trees() -> None:
    # Cayley: n^(n-2) spanning trees of K_n
    trees = list(enumerate_steiner_trees(make_complete(4), TerminalSet.of(range(4))))
    assert len(trees) == 16
    assert len({tree.canonical_key for tree in trees}) == 16


def test_degree_mask_limits_internal_vertices() -> None:
    k4 = make_complete(4)
    trees = list(enumerate_steiner_trees(k4, TerminalSet.of([0, 1]), [False, False, True, False]))
    assert [tree.sorted_edges for tree in trees] == [((0, 1),), ((0, 2), (1, 2))]


def test_bipartite_pair_on_one_side_uses_relays() -> None:
    host, labeling = make_complete_bipartite(2, 2)
    s = TerminalSet.of([labeling.x(1), labeling.x(2)])
    trees = list(enumerate_steiner_trees(host, s))
    # one path x1-y-x2 per y
    assert len(trees) == 2
    assert all(len(tree.internal_vertices) == 1 for tree in trees)


def test_disconnected_terminals_yield_nothing() -> None:
    g = Graph(n=4, edges=frozenset({(0, 1), (2, 3)}))
    assert list(enumerate_steiner_trees(g, TerminalSet.of([0, 2]))) == []


def test_limits() -> None:
    with pytest.raises(RangeError):
        list(enumerate_steiner_trees(make_complete(17), TerminalSet.of([0, 1])))
    with pytest.raises(RangeError):
        list(enumerate_steiner_trees(make_complete(4), TerminalSet.of([0, 1]), [True]))
