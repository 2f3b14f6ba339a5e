"""Completely independent spanning and Steiner tree families in K_n."""

from __future__ import annotations

import typing

from cisstkit.construct.types import checked_family
from cisstkit.errors import InvalidSizeError, RangeError
from cisstkit.graph.generators import make_complete
from cisstkit.graph.types import SteinerTree, TerminalSet, TreeFamily


def paired_cists(ids: typing.Sequence[int]) -> list[SteinerTree]:
    """Spanning trees of the complete graph on ``ids`` with pairwise-disjoint internal pairs.

    Vertices pair up in order as (a_i, b_i). Tree i joins a_i-b_i, then hangs
    every other pair j on it: straight (a_j->a_i, b_j->b_i) when j > i,
    crossed (a_j->b_i, b_j->a_i) when j < i. An odd leftover hangs on a_i.
    Two ids give the single edge and three ids give a star on the lowest.
    """
    if len(ids) < 2:
        raise InvalidSizeError(f"need at least 2 vertices, got {len(ids)}")
    pairs = [(ids[2 * k], ids[2 * k + 1]) for k in range(len(ids) // 2)]
    leftover = ids[-1] if len(ids) % 2 else None

    trees = []
    for i, (a_i, b_i) in enumerate(pairs):
        edges = [(a_i, b_i)]
        for j, (a_j, b_j) in enumerate(pairs):
            if j > i:
                edges += [(a_j, a_i), (b_j, b_i)]
            elif j < i:
                edges += [(a_j, b_i), (b_j, a_i)]
        if leftover is not None:
            edges.append((leftover, a_i))
        trees.append(SteinerTree.from_edges(edges, vertices=ids))
    return trees


def build_cists_complete(n: int) -> TreeFamily:
    """floor(n/2) completely independent spanning trees of K_n, n >= 4."""
    if n < 4:
        raise InvalidSizeError(f"complete CIST construction needs n >= 4, got n={n}")
    host = make_complete(n)
    family = TreeFamily(
        host=host,
        terminals=TerminalSet.of(range(n)),
        trees=tuple(paired_cists(list(range(n)))),
    )
    return checked_family(family, f"build_cists_complete({n})")


def build_cissts_complete(n: int, s: TerminalSet) -> TreeFamily:
    """n - ceil(|S|/2) completely independent S-Steiner trees of K_n.

    The induced part comes first (paired CISTs of K_n[S]), then one star
    from each outside vertex onto S, in ascending vertex order.
    """
    if len(s) > n:
        raise RangeError(f"|S|={len(s)} exceeds n={n}")
    host = make_complete(n)
    s.require_within(host)

    trees = paired_cists(s.ordered)
    trees += [SteinerTree.star(v, s.ordered) for v in range(n) if v not in s]
    family = TreeFamily(host=host, terminals=s, trees=tuple(trees))
    return checked_family(family, f"build_cissts_complete({n}, |S|={len(s)})")


def kappa_star_complete(n: int, s: int) -> int:
    """Packing number of K_n for any s-element terminal set."""
    if n < 4 or not 2 <= s <= n:
        raise RangeError(f"need n >= 4 and 2 <= s <= n, got n={n}, s={s}")
    return n - (s + 1) // 2
