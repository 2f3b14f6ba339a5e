"""Cheap upper bounds."""

from __future__ import annotations

import random

import pytest

from cisstkit.errors import RangeError, TerminalSetError
from cisstkit.graph.generators import make_complete, make_complete_bipartite
from cisstkit.graph.types import Graph, TerminalSet
from cisstkit.search import SearchStatus, exact_kappa_star
from cisstkit.verify import (
    closed_neighbourhood_upper_bound,
    degree_upper_bound,
    max_family_upper_bound_induced,
)


def test_degree_bound_is_the_smallest_terminal_degree() -> None:
    host, _ = make_complete_bipartite(2, 4)
    assert degree_upper_bound(host, TerminalSet.of([0, 2])) == 2
    assert degree_upper_bound(host, TerminalSet.of([0, 1])) == 4


def test_closed_neighbourhood_bound_counts_the_single_edge() -> None:
    k4 = make_complete(4)
    assert closed_neighbourhood_upper_bound(k4, TerminalSet.of([0, 1])) == 5
    assert closed_neighbourhood_upper_bound(k4, TerminalSet.of([0, 1, 2])) == 4

    path = Graph(n=3, edges=frozenset({(0, 1), (1, 2)}))
    assert closed_neighbourhood_upper_bound(path, TerminalSet.of([0, 2])) == 2


def test_induced_bound_adds_one_per_outside_vertex() -> None:
    k6 = make_complete(6)
    assert max_family_upper_bound_induced(k6, TerminalSet.of([0, 1, 2]), 1) == 4
    with pytest.raises(RangeError):
        max_family_upper_bound_induced(k6, TerminalSet.of([0, 1]), -1)
    with pytest.raises(TerminalSetError):
        degree_upper_bound(k6, TerminalSet.of([0, 9]))


@pytest.mark.slow
def test_cheap_bounds_dominate_the_exact_value(connected_sample: list[Graph]) -> None:
    rng = random.Random(3)
    for host in connected_sample:
        for _ in range(3):
            s = TerminalSet.of(rng.sample(range(host.n), rng.randint(2, host.n)))
            result = exact_kappa_star(host, s)
            assert result.status is SearchStatus.EXACT
            assert result.value is not None
            assert result.value <= degree_upper_bound(host, s), (sorted(host.edges), sorted(s))
            assert result.value <= closed_neighbourhood_upper_bound(host, s), (sorted(host.edges), sorted(s))
