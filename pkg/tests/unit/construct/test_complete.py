"""Constructions in K_n."""

from __future__ import annotations

import random

import pytest

from cisstkit.construct import build_cissts_complete, build_cists_complete, kappa_star_complete
from cisstkit.errors import InvalidSizeError, RangeError, TerminalSetError
from cisstkit.graph.trees import is_steiner_tree
from cisstkit.graph.types import TerminalSet
from cisstkit.verify import verify_characterization, verify_definitional

SUBSETS_PER_SIZE = 4


@pytest.mark.parametrize(("n", "s", "expected"), [(9, 8, 5), (4, 2, 3), (5, 3, 3), (4, 4, 2), (12, 12, 6)])
def test_kappa_star_formula(n: int, s: int, expected: int) -> None:
    assert kappa_star_complete(n, s) == expected


def test_kappa_star_ranges() -> None:
    with pytest.raises(RangeError):
        kappa_star_complete(3, 2)
    with pytest.raises(RangeError):
        kappa_star_complete(6, 7)
    with pytest.raises(RangeError):
        kappa_star_complete(6, 1)


def test_formula_respects_the_induced_bound() -> None:
    for n in range(4, 20):
        for s in range(4, n + 1):
            assert kappa_star_complete(n, s) <= kappa_star_complete(s, s) + (n - s)


def test_cists_need_four_vertices() -> None:
    with pytest.raises(InvalidSizeError):
        build_cists_complete(3)


def test_spanning_family_sizes() -> None:
    for n in range(4, 13):
        family = build_cists_complete(n)
        assert len(family) == n // 2
        assert all(len(tree.vertices) == n for tree in family)


def test_two_terminals_give_the_edge_plus_stars() -> None:
    family = build_cissts_complete(4, TerminalSet.of([0, 1]))
    assert len(family) == 3
    assert family[0].sorted_edges == ((0, 1),)
    assert family[1].sorted_edges == ((0, 2), (1, 2))
    assert family[2].sorted_edges == ((0, 3), (1, 3))


def test_terminals_must_fit_in_the_host() -> None:
    with pytest.raises(TerminalSetError):
        build_cissts_complete(4, TerminalSet.of([0, 5]))


@pytest.mark.slow
def test_constructions_match_the_formula_up_to_twelve() -> None:
    rng = random.Random(7)
    for n in range(4, 13):
        for s in range(2, n + 1):
            for _ in range(SUBSETS_PER_SIZE):
                terminals = TerminalSet.of(rng.sample(range(n), s))
                family = build_cissts_complete(n, terminals)
                assert len(family) == kappa_star_complete(n, s), (n, sorted(terminals))
                assert all(is_steiner_tree(family.host, terminals, tree) for tree in family)
                assert verify_characterization(family) is None
                if n <= 9:
                    assert verify_definitional(family) is None
