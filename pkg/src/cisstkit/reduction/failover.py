"""Recover a completely independent family after one vertex fails."""

from __future__ import annotations

import logging

from cisstkit.errors import MissingVertexError, TerminalSetError
from cisstkit.graph.types import TerminalSet, TreeFamily
from cisstkit.reduction.prune import prune_family

logger = logging.getLogger(__name__)


def failover(f: TreeFamily, failed: int) -> TreeFamily:
    """Drop the (at most one) tree using ``failed`` as an internal vertex.

    A failed terminal is also removed from S and the surviving trees are
    pruned to the smaller terminal set.
    """
    if not 0 <= failed < f.host.n:
        raise MissingVertexError(f"vertex {failed} is not in the host graph")

    survivors = []
    for index, tree in enumerate(f):
        if failed in tree.internal_vertices:
            logger.info("vertex %d is internal in tree %d; dropping it", failed, index)
            continue
        survivors.append(tree)
    remaining = f.with_trees(survivors)

    if failed not in f.terminals:
        return remaining
    left = f.terminals.members - {failed}
    if len(left) < 2:
        raise TerminalSetError(
            f"removing terminal {failed} leaves {sorted(left)}; at least 2 terminals are required"
        )
    return prune_family(remaining, TerminalSet(members=left))
