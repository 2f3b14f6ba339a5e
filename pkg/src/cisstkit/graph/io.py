"""JSON ingestion and serialization for host graphs and tree families.

Documents are first checked against the shipped JSON Schemas, then against
the graph-core invariants that a schema cannot express (edge endpoints below
``n``, duplicate edges, terminals inside the host). Every rejection raises
:class:`GraphFormatError` whose ``field`` names the offending location, or a
``line N`` location when the text is not JSON at all.
"""

from __future__ import annotations

import json
import logging
import typing
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from cisstkit.errors import CisstError, GraphFormatError, TerminalSetError
from cisstkit.graph.types import (
    BipartiteLabeling,
    Graph,
    SteinerTree,
    TerminalSet,
    TreeFamily,
    make_edge,
)
from cisstkit.schemas.validator import iter_schema_issues

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
GRAPH_SCHEMA = "graph"
FAMILY_SCHEMA = "family"


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph file: the host plus its optional labeling and terminals."""

    graph: Graph
    labeling: typing.Optional[BipartiteLabeling] = None
    terminals: typing.Optional[TerminalSet] = None


def parse_json_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, field=f"line {exc.lineno}") from exc


def _read(path: Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}", field=str(path)) from exc
    return parse_json_text(text)


def _require_schema(data: Any, schema_name: str) -> None:
    issues = iter_schema_issues(data, schema_name)
    if issues:
        first = issues[0]
        raise GraphFormatError(first.message, field=first.field or "$")


def _edges_from_rows(rows: list[list[int]], n: int, field_prefix: str) -> frozenset[tuple[int, int]]:
    seen: dict[tuple[int, int], int] = {}
    for index, (u, v) in enumerate(rows):
        location = f"{field_prefix}[{index}]"
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", field=location)
        if max(u, v) >= n:
            raise GraphFormatError(f"endpoint {max(u, v)} is not below n={n}", field=location)
        edge = make_edge(u, v)
        if edge in seen:
            raise GraphFormatError(
                f"duplicate of {field_prefix}[{seen[edge]}] {list(edge)}", field=location
            )
        seen[edge] = index
    return frozenset(seen)


def terminals_from_rows(rows: list[int], n: int) -> TerminalSet:
    """Terminal ids from a document; every rejection is a format error on ``terminals``."""
    for index, v in enumerate(rows):
        if v >= n:
            raise GraphFormatError(f"terminal {v} is not below n={n}", field=f"terminals[{index}]")
    try:
        return TerminalSet.of(rows)
    except TerminalSetError as exc:
        raise GraphFormatError(str(exc), field="terminals") from exc


def graph_from_dict(data: Any) -> GraphDocument:
    """Build a :class:`GraphDocument` from parsed JSON."""
    _require_schema(data, GRAPH_SCHEMA)
    n = int(data["n"])
    edges = _edges_from_rows(data["edges"], n, "edges")
    graph = Graph(n=n, edges=edges)

    labeling = None
    if "bipartite" in data:
        try:
            labeling = BipartiteLabeling(m1=data["bipartite"]["m1"], m2=data["bipartite"]["m2"])
        except CisstError as exc:
            raise GraphFormatError(str(exc), field="bipartite") from exc
        if labeling.n != n:
            raise GraphFormatError(
                f"m1+m2={labeling.n} does not match n={n}", field="bipartite"
            )
        for index, (u, v) in enumerate(data["edges"]):
            if labeling.side(u) == labeling.side(v):
                raise GraphFormatError(
                    f"edge {[u, v]} joins two {labeling.side(u)} vertices", field=f"edges[{index}]"
                )

    terminals = terminals_from_rows(data["terminals"], n) if "terminals" in data else None

    logger.debug("parsed graph n=%d m=%d", n, len(edges))
    return GraphDocument(graph=graph, labeling=labeling, terminals=terminals)


def graph_to_dict(
    graph: Graph,
    labeling: typing.Optional[BipartiteLabeling] = None,
    terminals: typing.Optional[TerminalSet] = None,
) -> dict[str, Any]:
    data: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "n": graph.n,
        "edges": [list(edge) for edge in graph.sorted_edges],
    }
    if labeling is not None:
        data["bipartite"] = {"m1": labeling.m1, "m2": labeling.m2}
    if terminals is not None:
        data["terminals"] = list(terminals.ordered)
    return data


def load_graph(path: Path) -> GraphDocument:
    return graph_from_dict(_read(path))


def family_to_dict(family: TreeFamily) -> dict[str, Any]:
    """One entry per tree: sorted vertices and sorted edges."""
    return {
        "schema_version": SCHEMA_VERSION,
        "n": family.host.n,
        "terminals": list(family.terminals.ordered),
        "trees": [
            {
                "vertices": sorted(tree.vertices),
                "edges": [list(edge) for edge in tree.sorted_edges],
            }
            for tree in family
        ],
    }


def family_from_dict(data: Any, host: Graph) -> TreeFamily:
    """Parse a family document against an already-loaded host.

    Trees are only normalized here; whether each is a Steiner tree is the
    verifier's question, not the parser's.
    """
    _require_schema(data, FAMILY_SCHEMA)
    if data["n"] != host.n:
        raise GraphFormatError(f"family is for n={data['n']} but host has n={host.n}", field="n")
    terminals = terminals_from_rows(data["terminals"], host.n)

    trees = []
    for index, entry in enumerate(data["trees"]):
        prefix = f"trees[{index}]"
        for v_index, v in enumerate(entry["vertices"]):
            if v >= host.n:
                raise GraphFormatError(
                    f"vertex {v} is not below n={host.n}", field=f"{prefix}.vertices[{v_index}]"
                )
        edges = _edges_from_rows(entry["edges"], host.n, f"{prefix}.edges")
        trees.append(SteinerTree(vertices=frozenset(entry["vertices"]), tree_edges=edges))
    return TreeFamily(host=host, terminals=terminals, trees=tuple(trees))


def load_family(path: Path, host: Graph) -> TreeFamily:
    return family_from_dict(_read(path), host)
