"""Exception hierarchy shared by every cisstkit module.

Each error carries a stable ``reason_code`` so the CLI and tests can match on
codes instead of message text.
"""

from __future__ import annotations

import typing

REASON_INVALID_SIZE = "INVALID_SIZE"
REASON_TERMINALS_INVALID = "TERMINALS_INVALID"
REASON_GRAPH_FORMAT = "GRAPH_FORMAT"
REASON_MISSING_VERTEX = "MISSING_VERTEX"
REASON_NOT_A_SUBSET = "NOT_A_SUBSET"
REASON_FAMILY_PRECONDITION = "FAMILY_PRECONDITION"
REASON_WRONG_SHAPE = "WRONG_SHAPE"
REASON_WRONG_BRANCH = "WRONG_BRANCH"
REASON_DEGENERATE_BRANCH = "DEGENERATE_BRANCH"
REASON_CONSTRUCTION_UNVERIFIED = "CONSTRUCTION_UNVERIFIED"
REASON_OUT_OF_RANGE = "OUT_OF_RANGE"
REASON_CONFIG_INVALID = "CONFIG_INVALID"
REASON_INTERNAL_INCONSISTENCY = "INTERNAL_INCONSISTENCY"


class CisstError(ValueError):
    """Base class for domain errors."""

    reason_code: str = "CISST_ERROR"

    def __init__(self, message: str, reason_code: typing.Optional[str] = None) -> None:
        super().__init__(message)
        if reason_code is not None:
            self.reason_code = reason_code


class InvalidSizeError(CisstError):
    reason_code = REASON_INVALID_SIZE


class TerminalSetError(CisstError):
    reason_code = REASON_TERMINALS_INVALID


class GraphFormatError(CisstError):
    """Malformed graph or family document; ``field`` names the offending location."""

    reason_code = REASON_GRAPH_FORMAT

    def __init__(self, message: str, field: str = "") -> None:
        rendered = f"{field}: {message}" if field else message
        super().__init__(rendered)
        self.field = field


class MissingVertexError(CisstError):
    reason_code = REASON_MISSING_VERTEX


class SubsetError(CisstError):
    reason_code = REASON_NOT_A_SUBSET


class FamilyPreconditionError(CisstError):
    """A family member is not a Steiner tree for the family's host and terminals."""

    reason_code = REASON_FAMILY_PRECONDITION

    def __init__(self, message: str, tree_index: int) -> None:
        super().__init__(f"tree {tree_index}: {message}")
        self.tree_index = tree_index


class WrongShapeError(CisstError):
    reason_code = REASON_WRONG_SHAPE


class WrongBranchError(CisstError):
    reason_code = REASON_WRONG_BRANCH


class DegenerateBranchError(CisstError):
    reason_code = REASON_DEGENERATE_BRANCH


class ConstructionError(CisstError):
    """A constructor produced a family the verifier rejects."""

    reason_code = REASON_CONSTRUCTION_UNVERIFIED


class RangeError(CisstError):
    reason_code = REASON_OUT_OF_RANGE


class SearchConfigError(CisstError):
    reason_code = REASON_CONFIG_INVALID


class InconsistencyError(CisstError):
    """Two independent computations that must agree did not."""

    reason_code = REASON_INTERNAL_INCONSISTENCY
