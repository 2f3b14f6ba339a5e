"""Exhaustive enumeration of the S-Steiner trees of a small graph.

A Steiner tree with three or more vertices is fixed by its internal set I
(vertices of tree-degree >= 2), a spanning tree of G[I], and one attachment
edge from every terminal outside I into I. The two-vertex tree is the edge
between an adjacent terminal pair.
"""

from __future__ import annotations

import logging
import typing
from itertools import combinations, product

import networkx as nx
from networkx.utils import UnionFind

from cisstkit.errors import RangeError
from cisstkit.graph.types import Graph, SteinerTree, TerminalSet

if typing.TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

logger = logging.getLogger(__name__)

MAX_ENUMERATION_VERTICES = 16


def bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def mask_of(vertices: typing.Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def is_connected_mask(g: Graph, mask: int) -> bool:
    """True when G[mask] is connected (the empty set is not)."""
    if not mask:
        return False
    reach = mask & -mask
    while True:
        grown = reach
        for v in bits(reach):
            grown |= g.adjacency_masks[v] & mask
        if grown == reach:
            return reach == mask
        reach = grown


def terminals_connected(g: Graph, s: TerminalSet) -> bool:
    """True when every terminal lies in the component of the lowest terminal."""
    component = nx.node_connected_component(g.to_networkx(), s.ordered[0])
    return s.members <= component


def _spanning_trees(g: Graph, vertices: list[int]) -> Iterator[list[tuple[int, int]]]:
    if len(vertices) == 1:
        yield []
        return
    inside = set(vertices)
    edges = [e for e in g.sorted_edges if e[0] in inside and e[1] in inside]
    for chosen in combinations(edges, len(vertices) - 1):
        forest = UnionFind(vertices)
        acyclic = True
        for u, v in chosen:
            if forest[u] == forest[v]:
                acyclic = False
                break
            forest.union(u, v)
        if acyclic:
            yield list(chosen)


def enumerate_steiner_trees(
    g: Graph,
    s: TerminalSet,
    degree_mask: typing.Optional[Sequence[bool]] = None,
) -> Iterator[SteinerTree]:
    """Yield every S-Steiner tree whose internal vertices ``degree_mask`` allows.

    Trees come out once each, ordered by (edge count, sorted edge list).
    """
    s.require_within(g)
    if g.n > MAX_ENUMERATION_VERTICES:
        raise RangeError(f"tree enumeration supports n <= {MAX_ENUMERATION_VERTICES}, got {g.n}")
    if degree_mask is not None and len(degree_mask) != g.n:
        raise RangeError(f"degree_mask has {len(degree_mask)} flags for {g.n} vertices")
    if not terminals_connected(g, s):
        logger.warning("terminals %s are not in one component; no Steiner tree exists", list(s.ordered))
        return

    allowed = mask_of(v for v in g.vertices() if degree_mask is None or degree_mask[v])
    found: list[SteinerTree] = []
    if len(s) == 2 and g.has_edge(*s.ordered):
        found.append(SteinerTree.from_edges([s.ordered]))

    for internal_mask in range(1, 1 << g.n):
        if internal_mask & ~allowed or not is_connected_mask(g, internal_mask):
            continue
        internal = bits(internal_mask)
        outside = [r for r in s.ordered if not internal_mask >> r & 1]
        choices = [bits(g.adjacency_masks[r] & internal_mask) for r in outside]
        if any(not options for options in choices):
            continue
        for spanning in _spanning_trees(g, internal):
            for targets in product(*choices):
                edges = spanning + list(zip(outside, targets))
                tree = SteinerTree.from_edges(edges, vertices=internal)
                if all(tree.degree(v) >= 2 for v in internal):
                    found.append(tree)

    found.sort(key=lambda tree: tree.canonical_key)
    logger.debug("enumerated %d Steiner trees for |S|=%d", len(found), len(s))
    yield from found
