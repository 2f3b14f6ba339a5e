"""Exact-search result types."""

from __future__ import annotations

import typing
from dataclasses import dataclass

from cisstkit.utils.compat import StrEnum

if typing.TYPE_CHECKING:
    from cisstkit.graph.types import TerminalSet, TreeFamily


class SearchStatus(StrEnum):
    EXACT = "EXACT"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class ExactResult:
    """Outcome of one packing search.

    ``lower`` is witnessed by ``witness``; ``upper`` is certified. They
    coincide exactly when ``status`` is EXACT.
    """

    status: SearchStatus
    lower: int
    upper: int
    nodes: int
    witness: typing.Optional[TreeFamily] = None

    @property
    def value(self) -> typing.Optional[int]:
        return self.lower if self.status is SearchStatus.EXACT else None

    def to_dict(self) -> dict[str, typing.Any]:
        return {
            "status": str(self.status),
            "lower": self.lower,
            "upper": self.upper,
            "value": self.value,
            "witness_size": 0 if self.witness is None else len(self.witness),
        }


@dataclass(frozen=True)
class GeneralizedResult:
    """Minimum packing number over all k-element terminal sets."""

    status: SearchStatus
    k: int
    lower: int
    upper: int
    subsets_checked: int
    worst_terminals: typing.Optional[TerminalSet] = None

    @property
    def value(self) -> typing.Optional[int]:
        return self.lower if self.status is SearchStatus.EXACT else None

    def to_dict(self) -> dict[str, typing.Any]:
        return {
            "status": str(self.status),
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "value": self.value,
            "subsets_checked": self.subsets_checked,
            "worst_terminals": None
            if self.worst_terminals is None
            else list(self.worst_terminals.ordered),
        }
