"""Complete-independence checks for tree families.

Two deciders with identical answers on well-formed input:

* :func:`verify_definitional` compares every pair of trees directly: edge
  sets disjoint, vertex sets meeting exactly in S, and no terminal pair whose
  connecting paths share an internal vertex.
* :func:`verify_characterization` only checks edge-disjointness and that no
  vertex has degree two or more in more than one tree. It runs in a single
  pass over the family.

Both return ``None`` when the family is completely independent, otherwise
the first :class:`Violation` in their fixed scan order.
"""

from __future__ import annotations

import typing
from itertools import combinations

from cisstkit.errors import FamilyPreconditionError
from cisstkit.graph.trees import diagnose_steiner_tree, path_interior
from cisstkit.verify.types import Violation, ViolationKind

if typing.TYPE_CHECKING:
    from cisstkit.graph.types import SteinerTree, TreeFamily


def require_steiner_members(family: TreeFamily) -> None:
    """Raise :class:`FamilyPreconditionError` for the first malformed member."""
    for index, tree in enumerate(family):
        defect = diagnose_steiner_tree(family.host, family.terminals, tree)
        if defect is not None:
            raise FamilyPreconditionError(f"not an S-Steiner tree ({defect})", tree_index=index)


def verify_characterization(family: TreeFamily) -> typing.Optional[Violation]:
    require_steiner_members(family)

    edge_owner: dict[tuple[int, int], int] = {}
    for q, tree in enumerate(family):
        for edge in tree.sorted_edges:
            p = edge_owner.get(edge)
            if p is not None:
                return Violation(ViolationKind.SHARED_EDGE, (p, q), edge)
            edge_owner[edge] = q

    internal_owner: dict[int, int] = {}
    for q, tree in enumerate(family):
        for w in sorted(tree.internal_vertices):
            p = internal_owner.get(w)
            if p is not None:
                return Violation(ViolationKind.DOUBLE_INTERNAL, (p, q), w)
            internal_owner[w] = q
    return None


class _PathCache:
    def __init__(self, tree: SteinerTree) -> None:
        self._tree = tree
        self._interiors: dict[tuple[int, int], frozenset[int]] = {}

    def interior(self, a: int, b: int) -> frozenset[int]:
        key = (a, b)
        if key not in self._interiors:
            self._interiors[key] = path_interior(self._tree, a, b)
        return self._interiors[key]


def verify_definitional(family: TreeFamily) -> typing.Optional[Violation]:
    require_steiner_members(family)

    terminals = family.terminals.members
    pairs = list(combinations(family.terminals.ordered, 2))
    caches = [_PathCache(tree) for tree in family]

    for p, q in combinations(range(len(family)), 2):
        tp, tq = family[p], family[q]
        shared_edges = tp.tree_edges & tq.tree_edges
        if shared_edges:
            return Violation(ViolationKind.SHARED_EDGE, (p, q), min(shared_edges))
        extra = (tp.vertices & tq.vertices) - terminals
        if extra:
            return Violation(ViolationKind.EXTRA_SHARED_VERTEX, (p, q), min(extra))
        for a, b in pairs:
            common = caches[p].interior(a, b) & caches[q].interior(a, b)
            if common:
                return Violation(ViolationKind.PATH_INTERSECTION, (p, q), (a, b, min(common)))
    return None


def is_completely_independent(family: TreeFamily) -> bool:
    return verify_characterization(family) is None
