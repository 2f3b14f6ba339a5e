"""Shrink Steiner trees and families to a smaller terminal set by leaf pruning."""

from __future__ import annotations

import logging

from cisstkit.errors import SubsetError
from cisstkit.graph.types import SteinerTree, TerminalSet, TreeFamily

logger = logging.getLogger(__name__)


def prune_to_subset(t: SteinerTree, s_old: TerminalSet, s_new: TerminalSet) -> SteinerTree:
    """Delete non-terminal leaves (relative to ``s_new``) round by round until none remain.

    Each round removes every current non-terminal leaf at once. The result is
    a subtree of ``t`` and keeps its vertex ids.
    """
    if not s_new.is_subset_of(s_old):
        extra = sorted(s_new.members - s_old.members)
        raise SubsetError(f"new terminals {extra} are not in the old terminal set")
    if s_new == s_old:
        return t

    vertices = set(t.vertices)
    edges = set(t.tree_edges)
    rounds = 0
    while True:
        degree = dict.fromkeys(vertices, 0)
        for u, v in edges:
            degree[u] += 1
            degree[v] += 1
        doomed = {v for v, d in degree.items() if d <= 1 and v not in s_new}
        if not doomed:
            break
        vertices -= doomed
        edges = {(u, v) for u, v in edges if u not in doomed and v not in doomed}
        rounds += 1
    logger.debug("pruned tree in %d rounds: %d -> %d vertices", rounds, len(t.vertices), len(vertices))
    return SteinerTree(vertices=frozenset(vertices), tree_edges=frozenset(edges))


def prune_family(f: TreeFamily, s_new: TerminalSet) -> TreeFamily:
    """Prune every tree of ``f`` to ``s_new``; the family keeps its size and order."""
    if not s_new.is_subset_of(f.terminals):
        extra = sorted(s_new.members - f.terminals.members)
        raise SubsetError(f"new terminals {extra} are not in the family's terminal set")
    trees = tuple(prune_to_subset(tree, f.terminals, s_new) for tree in f)
    return TreeFamily(host=f.host, terminals=s_new, trees=trees)
