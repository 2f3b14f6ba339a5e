"""Verification outcome types."""

from __future__ import annotations

import typing
from dataclasses import dataclass

from cisstkit.graph.trees import path_interior
from cisstkit.utils.compat import StrEnum

if typing.TYPE_CHECKING:
    from cisstkit.graph.types import TreeFamily


class ViolationKind(StrEnum):
    SHARED_EDGE = "SHARED_EDGE"
    EXTRA_SHARED_VERTEX = "EXTRA_SHARED_VERTEX"
    PATH_INTERSECTION = "PATH_INTERSECTION"
    DOUBLE_INTERNAL = "DOUBLE_INTERNAL"


class VerifyMode(StrEnum):
    DEFINITIONAL = "definitional"
    CHARACTERIZATION = "characterization"
    BOTH = "both"


@dataclass(frozen=True)
class Violation:
    """First failure found by a verifier.

    ``witness`` shape depends on ``kind``: an edge ``(u, v)`` for SHARED_EDGE,
    a vertex for EXTRA_SHARED_VERTEX and DOUBLE_INTERNAL, and
    ``(a, b, w)`` (terminal pair plus common internal vertex) for
    PATH_INTERSECTION.
    """

    kind: ViolationKind
    tree_indices: tuple[int, int]
    witness: typing.Union[int, tuple[int, int], tuple[int, int, int]]

    def replay(self, family: TreeFamily) -> bool:
        """Re-check the witness against ``family``; True when the failure is real."""
        p, q = self.tree_indices
        if not (0 <= p < q < len(family)):
            return False
        tp, tq = family[p], family[q]
        if self.kind is ViolationKind.SHARED_EDGE:
            edge = typing.cast("tuple[int, int]", self.witness)
            return edge in tp.tree_edges and edge in tq.tree_edges
        if self.kind is ViolationKind.DOUBLE_INTERNAL:
            w = typing.cast(int, self.witness)
            return tp.degree(w) >= 2 and tq.degree(w) >= 2
        if self.kind is ViolationKind.EXTRA_SHARED_VERTEX:
            v = typing.cast(int, self.witness)
            return v in tp.vertices and v in tq.vertices and v not in family.terminals
        a, b, w = typing.cast("tuple[int, int, int]", self.witness)
        return w in path_interior(tp, a, b) and w in path_interior(tq, a, b)

    def render(self) -> str:
        p, q = self.tree_indices
        if self.kind is ViolationKind.PATH_INTERSECTION:
            a, b, w = typing.cast("tuple[int, int, int]", self.witness)
            detail = f"paths {a}-{b} both pass through {w}"
        elif self.kind is ViolationKind.SHARED_EDGE:
            u, v = typing.cast("tuple[int, int]", self.witness)
            detail = f"edge ({u}, {v})"
        else:
            detail = f"vertex {self.witness}"
        return f"{self.kind} between trees {p} and {q}: {detail}"

    def to_dict(self) -> dict[str, typing.Any]:
        witness = list(self.witness) if isinstance(self.witness, tuple) else self.witness
        return {"kind": str(self.kind), "tree_indices": list(self.tree_indices), "witness": witness}
