"""Graphviz DOT text for tree families."""

from __future__ import annotations

import typing
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from cisstkit.graph.types import BipartiteLabeling, SteinerTree, TreeFamily

PALETTE: tuple[str, ...] = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
    "#bcbd22",
    "#7f7f7f",
)


def tree_color(index: int) -> str:
    return PALETTE[index % len(PALETTE)]


def _node_lines(
    vertices: typing.Iterable[int],
    terminals: frozenset[int],
    labeling: typing.Optional[BipartiteLabeling],
) -> list[str]:
    lines = []
    for v in sorted(vertices):
        label = labeling.label(v) if labeling is not None else str(v)
        shape = "doublecircle" if v in terminals else "circle"
        lines.append(f'  {v} [label="{label}", shape={shape}];')
    return lines


def render_tree_dot(
    tree: SteinerTree,
    terminals: frozenset[int],
    *,
    index: int = 0,
    labeling: typing.Optional[BipartiteLabeling] = None,
) -> str:
    """One tree as an undirected graph; terminals are double-circled."""
    color = tree_color(index)
    lines = [f"graph T{index} {{", f'  edge [color="{color}", penwidth=2];']
    lines.extend(_node_lines(tree.vertices, terminals, labeling))
    for u, v in tree.sorted_edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_family_dot(
    family: TreeFamily,
    *,
    labeling: typing.Optional[BipartiteLabeling] = None,
    show_host: bool = True,
) -> str:
    """All trees over the host graph, one colour per tree.

    Host edges used by no tree are drawn dashed and grey when ``show_host`` is set.
    """
    terminals = family.terminals.members
    lines = ["graph family {", "  layout=neato;"]
    lines.extend(_node_lines(family.host.vertices(), terminals, labeling))

    owner: dict[tuple[int, int], int] = {}
    for index, tree in enumerate(family):
        for edge in tree.sorted_edges:
            owner.setdefault(edge, index)
    for u, v in family.host.sorted_edges:
        if (u, v) in owner:
            index = owner[(u, v)]
            lines.append(f'  {u} -- {v} [color="{tree_color(index)}", penwidth=2, label="T{index}"];')
        elif show_host:
            lines.append(f'  {u} -- {v} [color="#cccccc", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
