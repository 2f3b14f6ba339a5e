"""The two verifiers agree on valid families and on single-mutation corruptions."""

from __future__ import annotations

import random

import pytest
from networkx.utils import UnionFind

from cisstkit.construct import build_bipartite_family, build_cissts_complete
from cisstkit.errors import FamilyPreconditionError
from cisstkit.graph.generators import make_complete_bipartite
from cisstkit.graph.types import Graph, SteinerTree, TerminalSet, TreeFamily
from cisstkit.reduction.prune import prune_to_subset
from cisstkit.verify import verify_characterization, verify_definitional

FAMILIES = 1000


def random_steiner_tree(host: Graph, s: TerminalSet, rng: random.Random) -> SteinerTree:
    """Random spanning tree (Kruskal over shuffled edges) pruned down to ``s``."""
    edges = list(host.sorted_edges)
    rng.shuffle(edges)
    forest = UnionFind(range(host.n))
    chosen = []
    for u, v in edges:
        if forest[u] != forest[v]:
            forest.union(u, v)
            chosen.append((u, v))
    spanning = SteinerTree.from_edges(chosen, vertices=range(host.n))
    return prune_to_subset(spanning, TerminalSet.of(range(host.n)), s)


def base_family(rng: random.Random) -> TreeFamily:
    if rng.random() < 0.5:
        n = rng.randint(4, 10)
        s = TerminalSet.of(rng.sample(range(n), rng.randint(2, n)))
        return build_cissts_complete(n, s)
    m1 = rng.randint(2, 4)
    m2 = rng.randint(m1, 10 - m1)
    _, labeling = make_complete_bipartite(m1, m2)
    s = TerminalSet.of(rng.sample(range(labeling.n), rng.randint(2, labeling.n)))
    return build_bipartite_family(labeling, s)


def mutate(family: TreeFamily, rng: random.Random) -> TreeFamily:
    """Replace one tree by a random Steiner tree, or append one."""
    tree = random_steiner_tree(family.host, family.terminals, rng)
    trees = list(family.trees)
    if trees and rng.random() < 0.7:
        trees[rng.randrange(len(trees))] = tree
    else:
        trees.append(tree)
    return family.with_trees(trees)


def outcome(check, family: TreeFamily) -> str:
    try:
        violation = check(family)
    except FamilyPreconditionError:
        return "precondition"
    if violation is not None:
        assert violation.replay(family), violation.render()
        return "dependent"
    return "independent"


@pytest.mark.slow
def test_verifiers_agree_on_random_families() -> None:
    rng = random.Random(20240601)
    seen = {"independent": 0, "dependent": 0}
    for _ in range(FAMILIES):
        family = base_family(rng)
        if rng.random() < 0.6:
            family = mutate(family, rng)
        definitional = outcome(verify_definitional, family)
        characterization = outcome(verify_characterization, family)
        assert definitional == characterization
        seen[definitional] = seen.get(definitional, 0) + 1
    assert seen["independent"] > 0
    assert seen["dependent"] > 0
