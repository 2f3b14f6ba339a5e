"""Cheap upper bounds on the number of completely independent S-Steiner trees."""

from __future__ import annotations

from cisstkit.errors import RangeError
from cisstkit.graph.types import Graph, TerminalSet


def max_family_upper_bound_induced(g: Graph, s: TerminalSet, exact_on_induced: int) -> int:
    """Bound from the induced subgraph: the exact value on G[S] plus one tree per outside vertex."""
    if exact_on_induced < 0:
        raise RangeError(f"exact value on G[S] must be non-negative, got {exact_on_induced}")
    s.require_within(g)
    return exact_on_induced + (g.n - len(s))


def degree_upper_bound(g: Graph, s: TerminalSet) -> int:
    """Edge-disjoint trees each use a distinct edge at every terminal."""
    s.require_within(g)
    return min(g.degree(w) for w in s)


def closed_neighbourhood_upper_bound(g: Graph, s: TerminalSet) -> int:
    """Each tree with an internal vertex takes one private vertex from N[a] for every terminal a.

    The only tree without internal vertices is a single edge, which exists
    exactly when S is an adjacent pair.
    """
    s.require_within(g)
    best = min(1 + g.degree(a) for a in s)
    if len(s) == 2:
        a, b = s.ordered
        if g.has_edge(a, b):
            best += 1
    return best
