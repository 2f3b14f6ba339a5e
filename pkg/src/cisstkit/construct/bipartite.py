"""Tree families for terminal sets in K_{m1,m2}.

Constructions are index-based: terminals on the X side are x_1..x_i and on
the Y side y_1..y_{s-i}. Arbitrary terminal sets are handled through a
:class:`_Frame` that lists each side with its terminals first, which is a
relabelling by an automorphism of K_{m1,m2}.
"""

from __future__ import annotations

import logging
import typing
from dataclasses import dataclass

from cisstkit.construct.bounds import lower_bound_bipartite
from cisstkit.construct.types import FamilyCatalog, SurplusSide, checked_family
from cisstkit.errors import (
    ConstructionError,
    DegenerateBranchError,
    WrongBranchError,
    WrongShapeError,
)
from cisstkit.graph.generators import make_complete_bipartite
from cisstkit.graph.types import BipartiteLabeling, Graph, SteinerTree, TerminalSet, TreeFamily
from cisstkit.reduction.prune import prune_to_subset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Frame:
    labeling: BipartiteLabeling
    host: Graph
    terminals: TerminalSet
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    i: int
    t: int

    @classmethod
    def of(cls, bl: BipartiteLabeling, s: TerminalSet) -> _Frame:
        host, _ = make_complete_bipartite(bl.m1, bl.m2)
        s.require_within(host)
        sx = [v for v in s.ordered if bl.side(v) == "X"]
        sy = [v for v in s.ordered if bl.side(v) == "Y"]
        xs = tuple(sx + [v for v in bl.x_ids if v not in s])
        ys = tuple(sy + [v for v in bl.y_ids if v not in s])
        return cls(labeling=bl, host=host, terminals=s, xs=xs, ys=ys, i=len(sx), t=len(sy))

    @property
    def m1(self) -> int:
        return self.labeling.m1

    @property
    def m2(self) -> int:
        return self.labeling.m2

    @property
    def a1(self) -> int:
        return min(self.m1 - self.i, self.m2 - self.t)

    @property
    def mixed(self) -> bool:
        return self.i >= 1 and self.t >= 1

    def x(self, k: int) -> int:
        return self.xs[k - 1]

    def y(self, k: int) -> int:
        return self.ys[k - 1]

    def x_range(self, first: int, last: int) -> list[int]:
        return [self.x(k) for k in range(first, last + 1)]

    def y_range(self, first: int, last: int) -> list[int]:
        return [self.y(k) for k in range(first, last + 1)]

    def family(self, trees: typing.Iterable[SteinerTree]) -> TreeFamily:
        return TreeFamily(host=self.host, terminals=self.terminals, trees=tuple(trees))

    def require_mixed(self, what: str) -> None:
        if not self.mixed:
            raise WrongShapeError(
                f"{what} needs terminals on both sides, got i={self.i}, s-i={self.t}"
            )

    def require_branch(self, branch: SurplusSide, what: str) -> None:
        holds = (
            self.a1 == self.m2 - self.t if branch is SurplusSide.X else self.a1 == self.m1 - self.i
        )
        if not holds:
            raise WrongBranchError(
                f"{what} needs the {branch} branch, but a1={self.a1} with "
                f"m1-i={self.m1 - self.i}, m2-(s-i)={self.m2 - self.t}"
            )

    def branches(self) -> tuple[SurplusSide, ...]:
        found = []
        if self.a1 == self.m2 - self.t:
            found.append(SurplusSide.X)
        if self.a1 == self.m1 - self.i:
            found.append(SurplusSide.Y)
        return tuple(found)


def _star(center: int, leaves: typing.Sequence[int]) -> SteinerTree:
    return SteinerTree.star(center, leaves)


def bipartite_cists(side_a: typing.Sequence[int], side_b: typing.Sequence[int]) -> list[SteinerTree]:
    """Spanning trees of the complete bipartite graph on two id lists.

    The shorter side P supplies floor(|P|/2) pairs (A, B) and the other side Q
    the matching pairs (C, D). Tree i has spine A_i-C_i-B_i-D_i; every foreign
    pair j hangs crosswise (C_j->A_i, D_j->B_i, A_j->D_i, B_j->C_i); unpaired
    Q vertices hang on A_i and an odd leftover of P on C_i. When P has one
    vertex the only tree is the star from it.
    """
    small, large = (side_a, side_b) if len(side_a) <= len(side_b) else (side_b, side_a)
    if not small:
        raise DegenerateBranchError("bipartite side is empty")
    if len(small) == 1:
        return [_star(small[0], large)]

    k = len(small) // 2
    quads = [(small[2 * j], small[2 * j + 1], large[2 * j], large[2 * j + 1]) for j in range(k)]
    surplus = list(large[2 * k :])
    leftover = small[2 * k] if len(small) % 2 else None

    trees = []
    for i, (a_i, b_i, c_i, d_i) in enumerate(quads):
        edges = [(a_i, c_i), (c_i, b_i), (b_i, d_i)]
        for j, (a_j, b_j, c_j, d_j) in enumerate(quads):
            if j != i:
                edges += [(c_j, a_i), (d_j, b_i), (a_j, d_i), (b_j, c_i)]
        edges += [(q, a_i) for q in surplus]
        if leftover is not None:
            edges.append((leftover, c_i))
        trees.append(SteinerTree.from_edges(edges, vertices=[*small, *large]))
    return trees


def build_star_family(bl: BipartiteLabeling, s: TerminalSet) -> TreeFamily:
    """One star per vertex of the opposite side, for S inside a single side."""
    frame = _Frame.of(bl, s)
    if frame.mixed:
        raise WrongShapeError(
            f"star family needs S inside one side, got i={frame.i}, s-i={frame.t}"
        )
    centres = bl.y_ids if frame.t == 0 else bl.x_ids
    family = frame.family(_star(c, s.ordered) for c in centres)
    return checked_family(family, "build_star_family")


def build_I_type(bl: BipartiteLabeling, s: TerminalSet) -> TreeFamily:
    """a1 trees, tree j relaying through the fresh pair x_{i+j}, y_{s-i+j}."""
    frame = _Frame.of(bl, s)
    frame.require_mixed("I-type family")
    i, t = frame.i, frame.t
    trees = []
    for j in range(1, frame.a1 + 1):
        rx, ry = frame.x(i + j), frame.y(t + j)
        edges = [(ry, x) for x in frame.x_range(1, i)]
        edges += [(rx, y) for y in frame.y_range(1, t)]
        edges.append((rx, ry))
        trees.append(SteinerTree.from_edges(edges))
    return checked_family(frame.family(trees), "build_I_type")


def build_IX_type(bl: BipartiteLabeling, s: TerminalSet) -> TreeFamily:
    """X-surplus trees: fresh x_{i+a1+k} spans the Y terminals and y_k spans the X terminals."""
    frame = _Frame.of(bl, s)
    frame.require_mixed("I_X-type family")
    frame.require_branch(SurplusSide.X, "I_X-type family")
    i, t, a1 = frame.i, frame.t, frame.a1
    count = max(min(t, frame.m1 - i - a1), 0)
    trees = []
    for k in range(1, count + 1):
        if t == 1:
            # the relay would be a non-terminal leaf; what remains is the star on y_1
            trees.append(_star(frame.y(1), frame.x_range(1, i)))
            continue
        relay = frame.x(i + a1 + k)
        edges = [(relay, y) for y in frame.y_range(1, t)]
        edges += [(frame.y(k), x) for x in frame.x_range(1, i)]
        trees.append(SteinerTree.from_edges(edges))
    return checked_family(frame.family(trees), "build_IX_type")


def build_IY_type(bl: BipartiteLabeling, s: TerminalSet) -> TreeFamily:
    """Y-surplus trees: fresh y_{s-i+a1+k} spans the X terminals and x_k spans the Y terminals."""
    frame = _Frame.of(bl, s)
    frame.require_mixed("I_Y-type family")
    frame.require_branch(SurplusSide.Y, "I_Y-type family")
    i, t, a1 = frame.i, frame.t, frame.a1
    count = max(min(i, frame.m2 - t - a1), 0)
    trees = []
    for k in range(1, count + 1):
        if i == 1:
            trees.append(_star(frame.x(1), frame.y_range(1, t)))
            continue
        relay = frame.y(t + a1 + k)
        edges = [(relay, x) for x in frame.x_range(1, i)]
        edges += [(frame.x(k), y) for y in frame.y_range(1, t)]
        trees.append(SteinerTree.from_edges(edges))
    return checked_family(frame.family(trees), "build_IY_type")


def build_cists_bipartite(m1: int, m2: int) -> TreeFamily:
    """floor(m1/2) completely independent spanning trees of K_{m1,m2}."""
    host, bl = make_complete_bipartite(m1, m2)
    family = TreeFamily(
        host=host,
        terminals=TerminalSet.of(range(bl.n)),
        trees=tuple(bipartite_cists(bl.x_ids, bl.y_ids)),
    )
    return checked_family(family, f"build_cists_bipartite({m1}, {m2})")


def build_pruned_cist_family(
    bl: BipartiteLabeling,
    s: TerminalSet,
    branch: SurplusSide,
) -> TreeFamily:
    """CISTs of the sub-bipartite graph left beside the I-type trees, pruned to S.

    X-surplus uses X' = S∩X plus x_{i+a1+1..m1} against Y' = S∩Y. Y-surplus
    uses S∩X against S∩Y plus y_{s-i+a1+1..m2}.
    """
    frame = _Frame.of(bl, s)
    frame.require_mixed("pruned CIST family")
    frame.require_branch(branch, "pruned CIST family")
    i, t, a1 = frame.i, frame.t, frame.a1

    if branch is SurplusSide.X:
        if frame.m1 - a1 <= 1:
            raise DegenerateBranchError(
                f"X-surplus sub-graph has m1-a1={frame.m1 - a1} X vertices"
            )
        side_x = frame.x_range(1, i) + frame.x_range(i + a1 + 1, frame.m1)
        side_y = frame.y_range(1, t)
    else:
        side_x = frame.x_range(1, i)
        side_y = frame.y_range(1, t) + frame.y_range(t + a1 + 1, frame.m2)

    sub_terminals = TerminalSet.of([*side_x, *side_y])
    trees = [prune_to_subset(tree, sub_terminals, s) for tree in bipartite_cists(side_x, side_y)]
    return checked_family(frame.family(trees), f"build_pruned_cist_family({branch})")


def _induced_star(frame: _Frame) -> typing.Optional[SteinerTree]:
    """The tree on S alone, which exists when one side holds a single terminal."""
    if frame.i == 1:
        return _star(frame.x(1), frame.y_range(1, frame.t))
    if frame.t == 1:
        return _star(frame.y(1), frame.x_range(1, frame.i))
    return None


def build_catalog(bl: BipartiteLabeling, s: TerminalSet) -> FamilyCatalog:
    """All families available for a mixed terminal set; inapplicable ones are empty."""
    frame = _Frame.of(bl, s)
    frame.require_mixed("family catalog")
    empty = frame.family(())
    branches = frame.branches()
    a2_1 = a2_2 = a3_1 = a3_2 = empty
    degenerate = []
    if SurplusSide.X in branches:
        a2_1 = build_IX_type(bl, s)
        try:
            a2_2 = build_pruned_cist_family(bl, s, SurplusSide.X)
        except DegenerateBranchError:
            degenerate.append(SurplusSide.X)
    if SurplusSide.Y in branches:
        a3_1 = build_IY_type(bl, s)
        a3_2 = build_pruned_cist_family(bl, s, SurplusSide.Y)
    return FamilyCatalog(
        i=frame.i,
        a1=frame.a1,
        A1=build_I_type(bl, s),
        A2_1=a2_1,
        A2_2=a2_2,
        A3_1=a3_1,
        A3_2=a3_2,
        branches=branches,
        degenerate=tuple(degenerate),
    )


def assemble_max_family(bl: BipartiteLabeling, s: TerminalSet) -> TreeFamily:
    """Largest of the admissible unions with the I-type family.

    Candidates in preference order: A1+A2_1, A1+A2_2, A1+A3_1, A1+A3_2, then
    the induced star plus A1. Ties keep the earlier candidate.
    """
    frame = _Frame.of(bl, s)
    frame.require_mixed("assemble_max_family")
    catalog = build_catalog(bl, s)

    candidates: list[tuple[str, TreeFamily]] = []
    if SurplusSide.X in catalog.branches:
        candidates.append(("A1+A2_1", catalog.A1.extend(catalog.A2_1)))
        if SurplusSide.X not in catalog.degenerate:
            candidates.append(("A1+A2_2", catalog.A1.extend(catalog.A2_2)))
    if SurplusSide.Y in catalog.branches:
        candidates.append(("A1+A3_1", catalog.A1.extend(catalog.A3_1)))
        candidates.append(("A1+A3_2", catalog.A1.extend(catalog.A3_2)))
    star = _induced_star(frame)
    if star is not None:
        candidates.append(("T0+A1", frame.family((star, *catalog.A1.trees))))

    name, best = candidates[0]
    for candidate_name, candidate in candidates[1:]:
        if len(candidate) > len(best):
            name, best = candidate_name, candidate

    bound, case = lower_bound_bipartite(frame.m1, frame.m2, len(s), frame.i)
    logger.info("assembled %s with %d trees (bound %d, %s)", name, len(best), bound, case)
    if len(best) < bound:
        raise ConstructionError(
            f"best assembly {name} has {len(best)} trees, below the {case} bound {bound}"
        )
    return checked_family(best, f"assemble_max_family({name})")


def build_bipartite_family(bl: BipartiteLabeling, s: TerminalSet) -> TreeFamily:
    """Star family for one-sided S, otherwise the assembled maximum family."""
    frame = _Frame.of(bl, s)
    return assemble_max_family(bl, s) if frame.mixed else build_star_family(bl, s)
