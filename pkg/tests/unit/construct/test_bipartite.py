"""Constructions in K_{m1,m2}."""

from __future__ import annotations

import pytest

from cisstkit.construct import (
    SurplusSide,
    assemble_max_family,
    build_bipartite_family,
    build_catalog,
    build_cists_bipartite,
    build_I_type,
    build_IX_type,
    build_IY_type,
    build_pruned_cist_family,
    build_star_family,
    expected_sizes,
    lower_bound_bipartite,
)
from cisstkit.construct.bounds import mixed_i_range
from cisstkit.errors import DegenerateBranchError, WrongBranchError, WrongShapeError
from cisstkit.graph.generators import make_complete_bipartite
from cisstkit.graph.types import BipartiteLabeling, TerminalSet
from cisstkit.verify import verify_characterization, verify_definitional


def terminals(labeling: BipartiteLabeling, text: str) -> TerminalSet:
    return TerminalSet.of(labeling.parse_label(token) for token in text.split(","))


def canonical(labeling: BipartiteLabeling, i: int, t: int) -> TerminalSet:
    return TerminalSet.of([labeling.x(k) for k in range(1, i + 1)] + [labeling.y(k) for k in range(1, t + 1)])


def test_k56_with_two_terminals_per_side_gets_four_trees() -> None:
    _, labeling = make_complete_bipartite(5, 6)
    s = terminals(labeling, "x1,x2,y1,y2")
    family = build_bipartite_family(labeling, s)
    assert len(family) == 4
    assert verify_definitional(family) is None


def test_star_family_sizes() -> None:
    _, labeling = make_complete_bipartite(3, 5)
    assert len(build_star_family(labeling, terminals(labeling, "x1,x2,x3"))) == 5
    assert len(build_star_family(labeling, terminals(labeling, "y2,y4"))) == 3
    with pytest.raises(WrongShapeError):
        build_star_family(labeling, terminals(labeling, "x1,y1"))


def test_i_type_relays_are_fresh_pairs() -> None:
    _, labeling = make_complete_bipartite(3, 4)
    s = terminals(labeling, "x1,y1,y2")
    family = build_I_type(labeling, s)
    # a1 = min(3-1, 4-2) = 2
    assert len(family) == 2
    internal = [tree.internal_vertices for tree in family]
    assert internal[0] == frozenset({labeling.x(2), labeling.y(3)})
    assert internal[1] == frozenset({labeling.x(3), labeling.y(4)})


def test_branch_preconditions() -> None:
    _, labeling = make_complete_bipartite(3, 6)
    s = terminals(labeling, "x1,y1")
    # a1 = min(2, 5) = 2 = m1 - i, so only the Y-surplus branch applies
    with pytest.raises(WrongBranchError):
        build_IX_type(labeling, s)
    assert len(build_IY_type(labeling, s)) == 1
    with pytest.raises(WrongShapeError):
        build_I_type(labeling, terminals(labeling, "y1,y2"))


def test_x_surplus_pruned_family_degenerates() -> None:
    _, labeling = make_complete_bipartite(3, 3)
    s = terminals(labeling, "x1,y1")
    # a1 = 2 = m1 - 1, leaving a single X vertex for the sub-bipartite CISTs
    with pytest.raises(DegenerateBranchError):
        build_pruned_cist_family(labeling, s, SurplusSide.X)
    catalog = build_catalog(labeling, s)
    assert SurplusSide.X in catalog.degenerate
    assert len(catalog.A2_2) == 0
    assert expected_sizes(3, 3, 2, 1).A2_2 == 0


def test_bipartite_cists() -> None:
    for m1, m2 in [(2, 2), (3, 5), (4, 4), (5, 7)]:
        family = build_cists_bipartite(m1, m2)
        assert len(family) == max(m1 // 2, 1)
        assert verify_definitional(family) is None


def test_arbitrary_terminal_sets_are_relabelled() -> None:
    _, labeling = make_complete_bipartite(4, 5)
    canonical_family = assemble_max_family(labeling, terminals(labeling, "x1,x2,y1,y2,y3"))
    scattered = assemble_max_family(labeling, terminals(labeling, "x4,x2,y5,y1,y3"))
    assert len(scattered) == len(canonical_family)
    assert verify_definitional(scattered) is None


@pytest.mark.slow
def test_family_sizes_and_unions_over_the_grid() -> None:
    for m2 in range(2, 9):
        for m1 in range(2, m2 + 1):
            _, labeling = make_complete_bipartite(m1, m2)
            for s in range(2, m1 + m2 + 1):
                for i in mixed_i_range(m1, m2, s):
                    t = s - i
                    catalog = build_catalog(labeling, canonical(labeling, i, t))
                    expected = expected_sizes(m1, m2, s, i)
                    sizes = catalog.sizes()
                    assert sizes["a1"] == expected.a1
                    assert sizes["A1"] == expected.a1
                    assert sizes["A2_1"] == expected.A2_1
                    assert sizes["A3_1"] == expected.A3_1
                    assert sizes["A3_2"] == expected.A3_2
                    assert sizes["A2_2"] == expected.A2_2, (m1, m2, s, i)

                    unions = []
                    if SurplusSide.X in catalog.branches:
                        unions.append(catalog.A1.extend(catalog.A2_1))
                        if SurplusSide.X not in catalog.degenerate:
                            unions.append(catalog.A1.extend(catalog.A2_2))
                    if SurplusSide.Y in catalog.branches:
                        unions.append(catalog.A1.extend(catalog.A3_1))
                        unions.append(catalog.A1.extend(catalog.A3_2))
                    for union in unions:
                        assert verify_characterization(union) is None, (m1, m2, s, i)
                        if m1 + m2 <= 10:
                            assert verify_definitional(union) is None, (m1, m2, s, i)

                    best = assemble_max_family(labeling, canonical(labeling, i, t))
                    assert len(best) >= lower_bound_bipartite(m1, m2, s, i)[0]
