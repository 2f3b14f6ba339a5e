"""Closed-form bounds and family sizes for terminal sets in K_{m1,m2}.

All regime tests are done in integers: with z = m1 + s - m2 the thresholds
2i <= 2z/3, 2i <= z, 2i <= 4z/3 and 2i <= 2z become 3i <= z, 2i <= z,
3i <= 2z and i <= z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cisstkit.construct.types import BoundReport, BoundRow, CaseLabel
from cisstkit.errors import ConstructionError, RangeError


def _require_sides(m1: int, m2: int, s: int) -> None:
    if not 2 <= m1 <= m2:
        raise RangeError(f"need 2 <= m1 <= m2, got m1={m1}, m2={m2}")
    if not 2 <= s <= m1 + m2:
        raise RangeError(f"need 2 <= s <= m1+m2={m1 + m2}, got s={s}")


def mixed_i_range(m1: int, m2: int, s: int) -> range:
    """Feasible X-terminal counts i for terminal sets meeting both sides."""
    return range(max(1, s - m2), min(m1, s - 1) + 1)


def lower_bound_bipartite(m1: int, m2: int, s: int, i: int) -> tuple[int, CaseLabel]:
    """Constructive lower bound on the packing number for S with |S∩X| = i."""
    _require_sides(m1, m2, s)
    if i not in mixed_i_range(m1, m2, s):
        raise RangeError(
            f"i={i} is outside the feasible range "
            f"{max(1, s - m2)}..{min(m1, s - 1)} for m1={m1}, m2={m2}, s={s}"
        )
    if s <= m2 - m1 + 2:
        return m1, CaseLabel.T3_5
    z = m1 + s - m2
    if 3 * i <= z:
        return m1 - i, CaseLabel.T3_6A
    if 2 * i <= z:
        return m2 - (s - i) + (z - i) // 2, CaseLabel.T3_6B
    if 3 * i <= 2 * z:
        return m1 - i + i // 2, CaseLabel.T3_7A
    if i <= z:
        return m2 - s + i, CaseLabel.T3_7B
    return m1, CaseLabel.T3_7C


def upper_bound_bipartite(m1: int, m2: int, s: int, i: int) -> int:
    """Degree bound: every Y terminal has degree m1 and every X terminal degree m2."""
    _require_sides(m1, m2, s)
    if not 0 <= i <= min(m1, s) or s - i > m2:
        raise RangeError(f"i={i} is infeasible for m1={m1}, m2={m2}, s={s}")
    bounds = []
    if s - i >= 1:
        bounds.append(m1)
    if i >= 1:
        bounds.append(m2)
    return min(bounds)


def bound_report(m1: int, m2: int, s: int) -> BoundReport:
    """Evaluate the lower bound at every feasible i, one-sided splits included.

    When s >= m2 - m1 + 3 the minimum is checked against
    m1 - (m1 + s - m2 + 2)/3 as an exact rational.
    """
    _require_sides(m1, m2, s)
    rows = []
    if s <= m2:
        rows.append(BoundRow(i=0, case=CaseLabel.STAR_Y, value=m1, upper=m1))
    for i in mixed_i_range(m1, m2, s):
        value, case = lower_bound_bipartite(m1, m2, s, i)
        rows.append(BoundRow(i=i, case=case, value=value, upper=upper_bound_bipartite(m1, m2, s, i)))
    if s <= m1:
        rows.append(BoundRow(i=s, case=CaseLabel.STAR_X, value=m2, upper=m2))

    best = min(rows, key=lambda row: (row.value, row.i))
    floor_bound = None
    closed_form = None
    if s >= m2 - m1 + 3:
        z = m1 + s - m2
        floor_bound = m1 - Fraction(z + 2, 3)
        closed_form = m1 - (z + 2) // 3
        if best.value < floor_bound:
            raise ConstructionError(
                f"minimum {best.value} at i={best.i} is below m1-(z+2)/3 = {floor_bound}"
            )
    return BoundReport(
        m1=m1,
        m2=m2,
        s=s,
        per_i=tuple(rows),
        minimum=best.value,
        argmin_i=best.i,
        floor_bound=floor_bound,
        closed_form=closed_form,
    )


@dataclass(frozen=True)
class ExpectedSizes:
    """Family sizes predicted by the counting formulas for one (m1, m2, s, i)."""

    a1: int
    A2_1: int
    A2_2: int
    A3_1: int
    A3_2: int
    x_surplus: bool
    y_surplus: bool


def expected_sizes(m1: int, m2: int, s: int, i: int) -> ExpectedSizes:
    """Sizes of each family; branches that do not apply report 0."""
    _require_sides(m1, m2, s)
    if i not in mixed_i_range(m1, m2, s):
        raise RangeError(f"i={i} is infeasible for m1={m1}, m2={m2}, s={s}")
    t = s - i
    a1 = min(m1 - i, m2 - t)
    x_surplus = a1 == m2 - t
    y_surplus = a1 == m1 - i
    # one X vertex or none left: the X-surplus CIST family is not built
    x_degenerate = x_surplus and m1 - a1 <= 1
    return ExpectedSizes(
        a1=a1,
        A2_1=min(t, m1 - i - a1) if x_surplus else 0,
        A2_2=max(min((m1 - a1) // 2, t // 2), 1) if x_surplus and not x_degenerate else 0,
        A3_1=min(i, m2 - t - a1) if y_surplus else 0,
        A3_2=max(min(i // 2, (m2 - a1) // 2), 1) if y_surplus else 0,
        x_surplus=x_surplus,
        y_surplus=y_surplus,
    )
