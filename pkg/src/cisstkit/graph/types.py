"""Graph-core domain types: hosts, bipartite labelings, terminal sets and trees.

Every type here is immutable after construction. Derived views (adjacency,
degrees, networkx projections) are cached per instance.
"""

from __future__ import annotations

import re
import typing
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from cisstkit.errors import (
    GraphFormatError,
    InvalidSizeError,
    MissingVertexError,
    TerminalSetError,
)

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

Edge = tuple[int, int]

_LABEL_PATTERN = re.compile(r"^\s*([xXyY])\s*(\d+)\s*$")


def make_edge(u: int, v: int) -> Edge:
    """Return the canonical (sorted) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


def _normalize_edges(edges: Iterable[typing.Sequence[int]]) -> frozenset[Edge]:
    return frozenset(make_edge(int(pair[0]), int(pair[1])) for pair in edges)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertex ids ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSizeError(f"graph must have at least one vertex, got n={self.n}")
        normalized = _normalize_edges(self.edges)
        for u, v in sorted(normalized):
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", field="edges")
            if u < 0 or v >= self.n:
                raise GraphFormatError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}", field="edges"
                )
        object.__setattr__(self, "edges", normalized)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(item) for item in neighbours)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit v set when v is a neighbour)."""
        masks = []
        for neighbours in self.adjacency:
            mask = 0
            for v in neighbours:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return make_edge(u, v) in self.edges

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges)
        return graph

    def is_connected(self) -> bool:
        return bool(nx.is_connected(self.to_networkx()))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Return G[vertices] relabelled to dense ids, plus the old-to-new id mapping."""
        kept = sorted(set(vertices))
        for v in kept:
            if v < 0 or v >= self.n:
                raise MissingVertexError(f"vertex {v} is not in the host graph")
        mapping = {old: new for new, old in enumerate(kept)}
        edges = frozenset(
            make_edge(mapping[u], mapping[v])
            for u, v in self.edges
            if u in mapping and v in mapping
        )
        return Graph(n=len(kept), edges=edges), mapping


@dataclass(frozen=True)
class BipartiteLabeling:
    """Maps 1-based x_i / y_j labels onto dense ids: x_i -> i-1, y_j -> m1+j-1."""

    m1: int
    m2: int

    def __post_init__(self) -> None:
        if self.m1 < 2 or self.m1 > self.m2:
            raise InvalidSizeError(
                f"bipartite sides must satisfy 2 <= m1 <= m2, got m1={self.m1}, m2={self.m2}"
            )

    @property
    def n(self) -> int:
        return self.m1 + self.m2

    def x(self, i: int) -> int:
        if not 1 <= i <= self.m1:
            raise MissingVertexError(f"x{i} is outside x1..x{self.m1}")
        return i - 1

    def y(self, j: int) -> int:
        if not 1 <= j <= self.m2:
            raise MissingVertexError(f"y{j} is outside y1..y{self.m2}")
        return self.m1 + j - 1

    def side(self, v: int) -> str:
        if 0 <= v < self.m1:
            return "X"
        if self.m1 <= v < self.n:
            return "Y"
        raise MissingVertexError(f"vertex {v} is not in K_{{{self.m1},{self.m2}}}")

    def index(self, v: int) -> int:
        """1-based index of ``v`` within its side."""
        return v + 1 if self.side(v) == "X" else v - self.m1 + 1

    def label(self, v: int) -> str:
        return f"{self.side(v).lower()}{self.index(v)}"

    def parse_label(self, token: str) -> int:
        match = _LABEL_PATTERN.match(token)
        if match is None:
            raise GraphFormatError(f"not a bipartite label: {token!r}", field="terminals")
        letter, number = match.group(1).lower(), int(match.group(2))
        return self.x(number) if letter == "x" else self.y(number)

    @property
    def x_ids(self) -> tuple[int, ...]:
        return tuple(range(self.m1))

    @property
    def y_ids(self) -> tuple[int, ...]:
        return tuple(range(self.m1, self.n))


@dataclass(frozen=True)
class TerminalSet:
    """The required vertex set S, |S| >= 2."""

    members: frozenset[int]

    def __post_init__(self) -> None:
        members = frozenset(int(v) for v in self.members)
        if len(members) < 2:
            raise TerminalSetError(f"terminal set needs at least 2 vertices, got {sorted(members)}")
        if min(members) < 0:
            raise TerminalSetError(f"terminal ids must be non-negative, got {sorted(members)}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> TerminalSet:
        return cls(members=frozenset(vertices))

    @cached_property
    def ordered(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.members)

    def require_within(self, graph: Graph) -> None:
        outside = [v for v in self.ordered if v >= graph.n]
        if outside:
            raise TerminalSetError(
                f"terminals {outside} are outside the host vertex range 0..{graph.n - 1}"
            )

    def is_subset_of(self, other: TerminalSet) -> bool:
        return self.members <= other.members


@dataclass(frozen=True)
class SteinerTree:
    """A candidate S-Steiner tree: an explicit vertex set plus its edges.

    Structural validity against a host and terminal set is checked by
    :func:`cisstkit.graph.trees.diagnose_steiner_tree`; construction only
    normalizes.
    """

    vertices: frozenset[int]
    tree_edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(int(v) for v in self.vertices))
        object.__setattr__(self, "tree_edges", _normalize_edges(self.tree_edges))

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[typing.Sequence[int]],
        vertices: typing.Optional[Iterable[int]] = None,
    ) -> SteinerTree:
        normalized = _normalize_edges(edges)
        vertex_set = set(vertices) if vertices is not None else set()
        for u, v in normalized:
            vertex_set.add(u)
            vertex_set.add(v)
        return cls(vertices=frozenset(vertex_set), tree_edges=normalized)

    @classmethod
    def star(cls, center: int, leaves: Iterable[int]) -> SteinerTree:
        leaf_list = list(leaves)
        return cls.from_edges(((center, leaf) for leaf in leaf_list), vertices=[center, *leaf_list])

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.tree_edges))

    @cached_property
    def degrees(self) -> dict[int, int]:
        counts = dict.fromkeys(self.vertices, 0)
        for u, v in self.tree_edges:
            counts[u] = counts.get(u, 0) + 1
            counts[v] = counts.get(v, 0) + 1
        return counts

    def degree(self, v: int) -> int:
        return self.degrees.get(v, 0)

    @cached_property
    def internal_vertices(self) -> frozenset[int]:
        """Vertices of tree-degree at least two."""
        return frozenset(v for v, d in self.degrees.items() if d >= 2)

    @cached_property
    def leaves(self) -> frozenset[int]:
        return frozenset(v for v, d in self.degrees.items() if d == 1)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        graph.add_edges_from(self.sorted_edges)
        return graph

    @cached_property
    def canonical_key(self) -> tuple[int, tuple[Edge, ...]]:
        """Stream order: edge count, then the lexicographic sorted edge list."""
        return (len(self.tree_edges), self.sorted_edges)

    def relabel(self, mapping: typing.Mapping[int, int]) -> SteinerTree:
        return SteinerTree(
            vertices=frozenset(mapping[v] for v in self.vertices),
            tree_edges=frozenset(make_edge(mapping[u], mapping[v]) for u, v in self.tree_edges),
        )


@dataclass(frozen=True)
class TreeFamily:
    """Ordered collection of candidate trees over a shared host and terminal set."""

    host: Graph
    terminals: TerminalSet
    trees: tuple[SteinerTree, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "trees", tuple(self.trees))
        self.terminals.require_within(self.host)

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[SteinerTree]:
        return iter(self.trees)

    def __getitem__(self, index: int) -> SteinerTree:
        return self.trees[index]

    def with_trees(self, trees: Iterable[SteinerTree]) -> TreeFamily:
        return TreeFamily(host=self.host, terminals=self.terminals, trees=tuple(trees))

    def extend(self, other: TreeFamily) -> TreeFamily:
        return self.with_trees((*self.trees, *other.trees))
