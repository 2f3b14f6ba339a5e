"""Exact packing numbers of completely independent S-Steiner trees.

The default ``skeleton`` strategy searches over internal sets instead of
whole trees. A family is completely independent exactly when the trees'
internal sets are pairwise disjoint and their edges are pairwise disjoint.
Edges inside G[I] never collide with another tree, so the only shared state
beyond the used vertices is the set of terminal-terminal attachment edges.
A skeleton is a connected vertex set I that dominates S outside I; a
terminal with a non-terminal neighbour in I hangs there for free, the others
choose one of their terminal neighbours in I. The single-edge tree between
an adjacent terminal pair is the skeleton with I empty.

Skeletons are taken in strictly increasing canonical order. With
``use_symmetry`` each skeleton must also use the lowest free non-terminal
members of every twin class.

The ``trees`` strategy packs whole trees from :func:`enumerate_steiner_trees`
and is kept as an independent check for small hosts.
"""

from __future__ import annotations

import logging
import time
import typing
from dataclasses import dataclass
from itertools import product
from multiprocessing import Pool

import networkx as nx

from cisstkit.errors import InconsistencyError, RangeError
from cisstkit.graph.types import Edge, Graph, SteinerTree, TerminalSet, TreeFamily, make_edge
from cisstkit.reduction.prune import prune_to_subset
from cisstkit.search.config import SearchConfig
from cisstkit.search.enumerate import (
    MAX_ENUMERATION_VERTICES,
    bits,
    enumerate_steiner_trees,
    is_connected_mask,
    mask_of,
    terminals_connected,
)
from cisstkit.search.symmetry import TwinClasses, canonical_subsets, twin_classes
from cisstkit.search.types import ExactResult, GeneralizedResult, SearchStatus
from cisstkit.verify.checks import verify_definitional

if typing.TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)

_CLOCK_STRIDE = 1024

Attachment = tuple[tuple[int, int], ...]
Chain = tuple[tuple[int, Attachment], ...]


class _BudgetExhausted(Exception):
    pass


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Skeleton:
    """Internal set of one tree plus the terminals that must hang on terminals."""

    mask: int
    size: int
    key: tuple[typing.Any, ...]
    forced: tuple[tuple[int, tuple[int, ...]], ...] = ()
    single_edge: bool = False
    splits_on_pair_edge: bool = False


def build_skeletons(g: Graph, s: TerminalSet, twins: TwinClasses) -> list[Skeleton]:
    """Every candidate internal set, sorted by (size, twin counts, masks)."""
    terminal_mask = mask_of(s)
    pair_edge: typing.Optional[Edge] = None
    skeletons: list[Skeleton] = []
    if len(s) == 2 and g.has_edge(*s.ordered):
        pair_edge = make_edge(*s.ordered)
        skeletons.append(Skeleton(mask=0, size=0, key=(0,), single_edge=True))

    adjacency = g.adjacency_masks
    host = g.to_networkx()
    for mask in range(1, 1 << g.n):
        if _popcount(mask | terminal_mask) < 3 or not is_connected_mask(g, mask):
            continue
        outside = terminal_mask & ~mask
        forced = []
        feasible = True
        for r in bits(outside):
            reach = adjacency[r] & mask
            if not reach:
                feasible = False
                break
            if not reach & ~terminal_mask:
                forced.append((r, tuple(bits(reach))))
        if not feasible:
            continue
        size = _popcount(mask)
        # each vertex of I needs tree-degree two from G[I] and attachments
        if size == 1:
            if _popcount(adjacency[bits(mask)[0]] & outside) < 2:
                continue
        elif any(_popcount(adjacency[v] & (mask | outside)) < 2 for v in bits(mask)):
            continue

        splits = False
        if pair_edge is not None and mask >> pair_edge[0] & 1 and mask >> pair_edge[1] & 1:
            inner = nx.Graph(host.subgraph(bits(mask)))
            inner.remove_edge(*pair_edge)
            splits = not nx.is_connected(inner)
        skeletons.append(
            Skeleton(
                mask=mask,
                size=size,
                key=(size, twins.count_vector(mask), mask & ~terminal_mask, mask & terminal_mask),
                forced=tuple(forced),
                splits_on_pair_edge=splits,
            )
        )
    skeletons.sort(key=lambda sk: sk.key)
    return skeletons


class _SkeletonSearch:
    def __init__(self, g: Graph, s: TerminalSet, cfg: SearchConfig) -> None:
        self.g = g
        self.s = s
        self.cfg = cfg
        self.terminal_mask = mask_of(s)
        self.full = (1 << g.n) - 1
        self.twins = twin_classes(g, self.terminal_mask)
        self.skeletons = build_skeletons(g, s, self.twins)
        self.closed = [g.adjacency_masks[a] | (1 << a) for a in s]
        self.pair_edge = make_edge(*s.ordered) if len(s) == 2 else None
        self.has_single = bool(self.skeletons) and self.skeletons[0].single_edge
        self.best = 0
        self.best_chain: Chain = ()
        self.nodes = 0
        self.capped = False
        self.deadline = 0.0

    def upper_bound(self, used: int, used_edges: frozenset[Edge], start: int) -> int:
        free = self.full & ~used
        single = int(
            self.has_single and start == 0 and self.pair_edge not in used_edges
        )
        first_sized = start + 1 if self.has_single and start == 0 else start
        if first_sized >= len(self.skeletons):
            return single
        by_count = _popcount(free) // self.skeletons[first_sized].size
        by_neighbourhood = min(_popcount(c & free) for c in self.closed)
        return min(by_count, by_neighbourhood) + single

    def _attachments(self, sk: Skeleton, used_edges: frozenset[Edge]) -> Iterator[Attachment]:
        options = [
            [(r, w) for w in targets if make_edge(r, w) not in used_edges]
            for r, targets in sk.forced
        ]
        yield from product(*options)

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cfg.node_budget:
            raise _BudgetExhausted
        if self.nodes % _CLOCK_STRIDE == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted

    def _children(
        self,
        used: int,
        used_edges: frozenset[Edge],
        start: int,
        depth: int,
        only: typing.Optional[frozenset[int]],
    ) -> Iterator[tuple[int, int, frozenset[Edge], Attachment]]:
        free = self.full & ~used
        non_terminal = self.full & ~self.terminal_mask
        for index in range(start, len(self.skeletons)):
            if only is not None and index not in only:
                continue
            sk = self.skeletons[index]
            if sk.single_edge:
                if self.pair_edge not in used_edges:
                    assert self.pair_edge is not None
                    yield index, used, used_edges | {self.pair_edge}, ()
                continue
            if depth + _popcount(free) // sk.size <= self.best:
                break
            if sk.mask & used:
                continue
            if sk.splits_on_pair_edge and self.pair_edge in used_edges:
                continue
            if self.cfg.use_symmetry and not self.twins.takes_lowest(sk.mask, free, non_terminal):
                continue
            for attachment in self._attachments(sk, used_edges):
                edges = used_edges | {make_edge(r, w) for r, w in attachment}
                yield index, used | sk.mask, frozenset(edges), attachment

    def _dfs(
        self,
        used: int,
        used_edges: frozenset[Edge],
        start: int,
        chain: Chain,
        only: typing.Optional[frozenset[int]] = None,
    ) -> None:
        self._tick()
        depth = len(chain)
        if depth > self.best:
            self.best = depth
            self.best_chain = chain
            logger.debug("found %d trees after %d nodes", depth, self.nodes)
        if self.cfg.max_trees is not None and self.best >= self.cfg.max_trees:
            self.capped = True
            return
        if depth + self.upper_bound(used, used_edges, start) <= self.best:
            return
        for index, child_used, child_edges, attachment in self._children(
            used, used_edges, start, depth, only
        ):
            self._dfs(child_used, child_edges, index + 1, (*chain, (index, attachment)))
            if self.capped:
                return

    def run(self, only: typing.Optional[frozenset[int]] = None) -> bool:
        """Search the whole tree (or only the given first-level skeletons); False on budget exhaustion."""
        self.deadline = time.monotonic() + self.cfg.time_budget
        try:
            self._dfs(0, frozenset(), 0, (), only)
        except _BudgetExhausted:
            return False
        return True

    def realize(self, chain: Chain) -> TreeFamily:
        """Turn skeleton choices into concrete trees, in search order."""
        host = self.g.to_networkx()
        taken: set[Edge] = set()
        trees = []
        for index, attachment in chain:
            sk = self.skeletons[index]
            if sk.single_edge:
                assert self.pair_edge is not None
                tree = SteinerTree.from_edges([self.pair_edge])
            else:
                internal = bits(sk.mask)
                inner = nx.Graph(host.subgraph(internal))
                inner.remove_edges_from(taken)
                edges = [make_edge(u, v) for u, v in nx.bfs_edges(inner, internal[0])]
                hung = dict(attachment)
                for r in self.s:
                    if sk.mask >> r & 1:
                        continue
                    if r in hung:
                        edges.append(make_edge(r, hung[r]))
                    else:
                        spare = self.g.adjacency_masks[r] & sk.mask & ~self.terminal_mask
                        edges.append(make_edge(r, bits(spare)[0]))
                tree = SteinerTree.from_edges(edges, vertices=internal)
                tree = prune_to_subset(tree, TerminalSet.of(tree.vertices), self.s)
            taken.update(tree.tree_edges)
            trees.append(tree)
        return TreeFamily(host=self.g, terminals=self.s, trees=tuple(trees))


def _search_partition(
    job: tuple[Graph, TerminalSet, SearchConfig, frozenset[int]],
) -> tuple[int, Chain, int, bool]:
    g, s, cfg, only = job
    search = _SkeletonSearch(g, s, cfg)
    finished = search.run(only)
    return search.best, search.best_chain, search.nodes, finished


def _checked(family: TreeFamily) -> TreeFamily:
    violation = verify_definitional(family)
    if violation is not None:
        raise InconsistencyError(f"search produced a dependent family: {violation.render()}")
    return family


def _result(
    best: int,
    root_upper: int,
    nodes: int,
    finished: bool,
    capped: bool,
    witness: TreeFamily,
) -> ExactResult:
    upper = best if finished and not capped else max(best, root_upper)
    status = SearchStatus.EXACT if best == upper else SearchStatus.INDETERMINATE
    if status is SearchStatus.INDETERMINATE:
        logger.warning("search stopped after %d nodes: %d <= k <= %d", nodes, best, upper)
    return ExactResult(status=status, lower=best, upper=upper, nodes=nodes, witness=witness)


def _skeleton_strategy(g: Graph, s: TerminalSet, cfg: SearchConfig) -> ExactResult:
    search = _SkeletonSearch(g, s, cfg)
    root_upper = search.upper_bound(0, frozenset(), 0)
    logger.info(
        "skeleton search: n=%d |S|=%d, %d skeletons, bound %d",
        g.n,
        len(s),
        len(search.skeletons),
        root_upper,
    )

    if cfg.jobs <= 1 or len(search.skeletons) < 2:
        finished = search.run()
        family = _checked(search.realize(search.best_chain))
        return _result(search.best, root_upper, search.nodes, finished, search.capped, family)

    first_level = list(range(len(search.skeletons)))
    partitions = [frozenset(first_level[k :: cfg.jobs]) for k in range(cfg.jobs)]
    jobs = [(g, s, cfg, part) for part in partitions if part]
    with Pool(processes=len(jobs)) as pool:
        outcomes = pool.map(_search_partition, jobs)

    best = 0
    chain: Chain = ()
    for worker_best, worker_chain, _, _ in outcomes:
        if worker_best > best or (
            worker_best == best and worker_chain and (not chain or worker_chain[0][0] < chain[0][0])
        ):
            best, chain = worker_best, worker_chain
    nodes = sum(outcome[2] for outcome in outcomes)
    finished = all(outcome[3] for outcome in outcomes)
    capped = cfg.max_trees is not None and best >= cfg.max_trees
    family = _checked(search.realize(chain))
    return _result(best, root_upper, nodes, finished, capped, family)


class _TreePacking:
    """Branch and bound over whole enumerated trees."""

    def __init__(self, g: Graph, s: TerminalSet, cfg: SearchConfig) -> None:
        self.cfg = cfg
        self.trees = list(enumerate_steiner_trees(g, s))
        self.internal = [mask_of(tree.internal_vertices) for tree in self.trees]
        self.closed = [g.adjacency_masks[a] | (1 << a) for a in s]
        self.full = (1 << g.n) - 1
        self.has_single = bool(self.trees) and len(self.trees[0].tree_edges) == 1
        self.best: tuple[int, ...] = ()
        self.nodes = 0
        self.capped = False
        self.deadline = 0.0

    def upper_bound(self, used_internal: int, start: int) -> int:
        free = self.full & ~used_internal
        return min(_popcount(c & free) for c in self.closed) + int(self.has_single and start == 0)

    def _dfs(
        self,
        used_edges: frozenset[Edge],
        used_internal: int,
        start: int,
        chain: tuple[int, ...],
    ) -> None:
        self.nodes += 1
        if self.nodes > self.cfg.node_budget:
            raise _BudgetExhausted
        if self.nodes % _CLOCK_STRIDE == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        if len(chain) > len(self.best):
            self.best = chain
        if self.cfg.max_trees is not None and len(self.best) >= self.cfg.max_trees:
            self.capped = True
            return
        if len(chain) + self.upper_bound(used_internal, start) <= len(self.best):
            return
        for index in range(start, len(self.trees)):
            tree = self.trees[index]
            if self.internal[index] & used_internal or tree.tree_edges & used_edges:
                continue
            self._dfs(
                used_edges | tree.tree_edges,
                used_internal | self.internal[index],
                index + 1,
                (*chain, index),
            )
            if self.capped:
                return

    def run(self) -> bool:
        self.deadline = time.monotonic() + self.cfg.time_budget
        try:
            self._dfs(frozenset(), 0, 0, ())
        except _BudgetExhausted:
            return False
        return True


def _trees_strategy(g: Graph, s: TerminalSet, cfg: SearchConfig) -> ExactResult:
    packing = _TreePacking(g, s, cfg)
    root_upper = packing.upper_bound(0, 0)
    logger.info("tree packing: %d candidate trees, bound %d", len(packing.trees), root_upper)
    finished = packing.run()
    witness = TreeFamily(host=g, terminals=s, trees=tuple(packing.trees[k] for k in packing.best))
    return _result(
        len(packing.best), root_upper, packing.nodes, finished, packing.capped, _checked(witness)
    )


def exact_kappa_star(
    g: Graph,
    s: TerminalSet,
    cfg: typing.Optional[SearchConfig] = None,
) -> ExactResult:
    """Maximum number of completely independent S-Steiner trees in ``g``."""
    cfg = cfg or SearchConfig()
    s.require_within(g)
    if g.n > MAX_ENUMERATION_VERTICES:
        raise RangeError(f"exact search supports n <= {MAX_ENUMERATION_VERTICES}, got {g.n}")
    if not terminals_connected(g, s):
        logger.warning("terminals %s span several components; packing number is 0", list(s.ordered))
        empty = TreeFamily(host=g, terminals=s, trees=())
        return ExactResult(status=SearchStatus.EXACT, lower=0, upper=0, nodes=0, witness=empty)
    if cfg.strategy == "trees":
        return _trees_strategy(g, s, cfg)
    return _skeleton_strategy(g, s, cfg)


def exact_generalized_kappa_star(
    g: Graph,
    k: int,
    cfg: typing.Optional[SearchConfig] = None,
) -> GeneralizedResult:
    """Minimum of :func:`exact_kappa_star` over all k-element terminal sets."""
    cfg = cfg or SearchConfig()
    if not 2 <= k <= g.n:
        raise RangeError(f"need 2 <= k <= n={g.n}, got k={k}")
    lower: typing.Optional[int] = None
    upper: typing.Optional[int] = None
    worst: typing.Optional[TerminalSet] = None
    checked = 0
    for subset in canonical_subsets(g, k, cfg.use_symmetry):
        terminals = TerminalSet.of(subset)
        result = exact_kappa_star(g, terminals, cfg)
        checked += 1
        lower = result.lower if lower is None else min(lower, result.lower)
        if upper is None or result.upper < upper:
            upper, worst = result.upper, terminals
    assert lower is not None and upper is not None
    status = SearchStatus.EXACT if lower == upper else SearchStatus.INDETERMINATE
    logger.info("k=%d: checked %d terminal sets, value in [%d, %d]", k, checked, lower, upper)
    return GeneralizedResult(
        status=status,
        k=k,
        lower=lower,
        upper=upper,
        subsets_checked=checked,
        worst_terminals=worst,
    )
