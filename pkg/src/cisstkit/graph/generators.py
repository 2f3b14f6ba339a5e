"""Host generators for the complete and complete bipartite families."""

from __future__ import annotations

from itertools import combinations

from cisstkit.errors import InvalidSizeError
from cisstkit.graph.types import BipartiteLabeling, Graph


def make_complete(n: int) -> Graph:
    """Return K_n on ids 0..n-1."""
    if n < 1:
        raise InvalidSizeError(f"K_n needs n >= 1, got n={n}")
    return Graph(n=n, edges=frozenset(combinations(range(n), 2)))


def make_complete_bipartite(m1: int, m2: int) -> tuple[Graph, BipartiteLabeling]:
    """Return K_{m1,m2} with X = ids 0..m1-1 and Y = ids m1..m1+m2-1."""
    labeling = BipartiteLabeling(m1=m1, m2=m2)
    edges = frozenset((x, y) for x in labeling.x_ids for y in labeling.y_ids)
    return Graph(n=labeling.n, edges=edges), labeling
