"""Structural checks on Steiner trees and path extraction inside a tree."""

from __future__ import annotations

import typing

import networkx as nx
from networkx.utils import UnionFind

from cisstkit.errors import MissingVertexError
from cisstkit.graph.types import Graph, SteinerTree, TerminalSet
from cisstkit.utils.compat import StrEnum


class TreeDefect(StrEnum):
    """First violated Steiner-tree invariant, in checking order."""

    EMPTY = "EMPTY"
    VERTEX_OUT_OF_RANGE = "VERTEX_OUT_OF_RANGE"
    EDGE_OUTSIDE_VERTICES = "EDGE_OUTSIDE_VERTICES"
    EDGE_NOT_IN_HOST = "EDGE_NOT_IN_HOST"
    EDGE_COUNT = "EDGE_COUNT"
    CYCLE = "CYCLE"
    DISCONNECTED = "DISCONNECTED"
    MISSING_TERMINAL = "MISSING_TERMINAL"
    NON_TERMINAL_LEAF = "NON_TERMINAL_LEAF"


def _has_cycle(tree: SteinerTree) -> bool:
    forest = UnionFind(sorted(tree.vertices))
    for u, v in tree.sorted_edges:
        if forest[u] == forest[v]:
            return True
        forest.union(u, v)
    return False


def _bfs_reach(tree: SteinerTree) -> int:
    start = min(tree.vertices)
    return len(nx.node_connected_component(tree.nx_graph, start))


def diagnose_steiner_tree(
    graph: Graph,
    terminals: TerminalSet,
    tree: SteinerTree,
) -> typing.Optional[TreeDefect]:
    """Return the first violated invariant, or None when ``tree`` is an S-Steiner tree."""
    if not tree.vertices:
        return TreeDefect.EMPTY
    if min(tree.vertices) < 0 or max(tree.vertices) >= graph.n:
        return TreeDefect.VERTEX_OUT_OF_RANGE
    for u, v in tree.sorted_edges:
        if u not in tree.vertices or v not in tree.vertices:
            return TreeDefect.EDGE_OUTSIDE_VERTICES
    if not tree.tree_edges <= graph.edges:
        return TreeDefect.EDGE_NOT_IN_HOST
    if len(tree.tree_edges) != len(tree.vertices) - 1:
        return TreeDefect.EDGE_COUNT
    if _has_cycle(tree):
        return TreeDefect.CYCLE
    if _bfs_reach(tree) != len(tree.vertices):
        return TreeDefect.DISCONNECTED
    if not terminals.members <= tree.vertices:
        return TreeDefect.MISSING_TERMINAL
    if any(v not in terminals for v in tree.leaves):
        return TreeDefect.NON_TERMINAL_LEAF
    return None


def is_steiner_tree(graph: Graph, terminals: TerminalSet, tree: SteinerTree) -> bool:
    """True iff ``tree`` is an S-Steiner tree of ``graph``."""
    return diagnose_steiner_tree(graph, terminals, tree) is None


def tree_path(tree: SteinerTree, a: int, b: int) -> tuple[int, ...]:
    """Return the unique a-b path in ``tree`` as a vertex sequence."""
    for v in (a, b):
        if v not in tree.vertices:
            raise MissingVertexError(f"vertex {v} is not in the tree")
    if a == b:
        return (a,)
    try:
        path = nx.shortest_path(tree.nx_graph, a, b)
    except nx.NetworkXNoPath as exc:
        raise MissingVertexError(f"no path between {a} and {b}; tree is disconnected") from exc
    return tuple(path)


def path_interior(tree: SteinerTree, a: int, b: int) -> frozenset[int]:
    """Internal vertices of the a-b path in ``tree`` (endpoints excluded)."""
    return frozenset(tree_path(tree, a, b)[1:-1])
