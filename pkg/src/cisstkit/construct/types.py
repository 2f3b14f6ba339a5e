"""Construction result types shared by the complete and bipartite builders."""

from __future__ import annotations

import typing
from dataclasses import dataclass
from fractions import Fraction

from cisstkit.errors import ConstructionError
from cisstkit.utils.compat import StrEnum
from cisstkit.verify.checks import verify_characterization

if typing.TYPE_CHECKING:
    from cisstkit.graph.types import TreeFamily


class CaseLabel(StrEnum):
    """Which lower-bound regime produced a bipartite bound row."""

    T3_5 = "T3.5"
    T3_6A = "T3.6a"
    T3_6B = "T3.6b"
    T3_7A = "T3.7a"
    T3_7B = "T3.7b"
    T3_7C = "T3.7c"
    STAR_X = "star-X"
    STAR_Y = "star-Y"


class SurplusSide(StrEnum):
    """Which side keeps unused vertices once the I-type trees are placed."""

    X = "X-surplus"
    Y = "Y-surplus"


@dataclass(frozen=True)
class FamilyCatalog:
    """Every bipartite family for one canonical mixed terminal set.

    Families whose branch does not apply are empty; ``degenerate`` lists the
    pruned-CIST branches that could not be built.
    """

    i: int
    a1: int
    A1: TreeFamily
    A2_1: TreeFamily
    A2_2: TreeFamily
    A3_1: TreeFamily
    A3_2: TreeFamily
    branches: tuple[SurplusSide, ...]
    degenerate: tuple[SurplusSide, ...] = ()

    def sizes(self) -> dict[str, int]:
        return {
            "a1": self.a1,
            "A1": len(self.A1),
            "A2_1": len(self.A2_1),
            "A2_2": len(self.A2_2),
            "A3_1": len(self.A3_1),
            "A3_2": len(self.A3_2),
        }


@dataclass(frozen=True)
class BoundRow:
    i: int
    case: CaseLabel
    value: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.value == self.upper


@dataclass(frozen=True)
class BoundReport:
    """Per-i lower bounds for K_{m1,m2} with |S| = s, plus their minimum."""

    m1: int
    m2: int
    s: int
    per_i: tuple[BoundRow, ...]
    minimum: int
    argmin_i: int
    floor_bound: typing.Optional[Fraction] = None
    closed_form: typing.Optional[int] = None

    def to_dict(self) -> dict[str, typing.Any]:
        return {
            "m1": self.m1,
            "m2": self.m2,
            "s": self.s,
            "per_i": [
                {"i": row.i, "case": str(row.case), "value": row.value, "upper": row.upper, "exact": row.exact}
                for row in self.per_i
            ],
            "minimum": self.minimum,
            "argmin_i": self.argmin_i,
            "floor_bound": None if self.floor_bound is None else str(self.floor_bound),
            "closed_form": self.closed_form,
        }


def checked_family(family: TreeFamily, label: str) -> TreeFamily:
    """Return ``family`` unchanged, or raise when the verifier rejects it."""
    violation = verify_characterization(family)
    if violation is not None:
        raise ConstructionError(f"{label} produced a dependent family: {violation.render()}")
    return family
