"""JSON ingestion for graphs and families."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from cisstkit.construct import build_cissts_complete
from cisstkit.errors import GraphFormatError, TerminalSetError
from cisstkit.graph.generators import make_complete, make_complete_bipartite
from cisstkit.graph.io import (
    family_from_dict,
    family_to_dict,
    graph_from_dict,
    graph_to_dict,
    load_family,
    load_graph,
    parse_json_text,
    terminals_from_rows,
)
from cisstkit.graph.types import TerminalSet


def test_graph_document_with_labeling_and_terminals() -> None:
    host, labeling = make_complete_bipartite(2, 3)
    data = graph_to_dict(host, labeling, TerminalSet.of([0, 2]))
    document = graph_from_dict(data)
    assert document.graph == host
    assert document.labeling == labeling
    assert document.terminals == TerminalSet.of([0, 2])


@pytest.mark.parametrize(
    ("data", "field"),
    [
        ({"edges": []}, "$"),
        ({"n": 3, "edges": [[0, "a"]]}, "edges[0][1]"),
        ({"n": 3, "edges": [], "extra": 1}, "$"),
        ({"n": 3, "edges": [[0, 1], [1, 1]]}, "edges[1]"),
        ({"n": 3, "edges": [[0, 1], [1, 0]]}, "edges[1]"),
        ({"n": 3, "edges": [[0, 3]]}, "edges[0]"),
        ({"n": 3, "edges": [], "terminals": [0, 5]}, "terminals[1]"),
        ({"n": 4, "edges": [], "bipartite": {"m1": 2, "m2": 3}}, "bipartite"),
        ({"n": 4, "edges": [[0, 1]], "bipartite": {"m1": 2, "m2": 2}}, "edges[0]"),
    ],
)
def test_malformed_graphs_name_the_offending_field(data: dict, field: str) -> None:
    with pytest.raises(GraphFormatError) as excinfo:
        graph_from_dict(data)
    assert excinfo.value.field == field
    assert excinfo.value.reason_code == "GRAPH_FORMAT"


def test_invalid_json_reports_line() -> None:
    with pytest.raises(GraphFormatError) as excinfo:
        parse_json_text('{\n  "n": 3,\n  "edges": [\n')
    assert excinfo.value.field.startswith("line ")


def test_family_files_round_trip(tmp_path: Path) -> None:
    family = build_cissts_complete(6, TerminalSet.of([0, 1, 2]))
    graph_path = tmp_path / "graph.json"
    family_path = tmp_path / "family.json"
    graph_path.write_text(json.dumps(graph_to_dict(family.host)), encoding="utf-8")
    family_path.write_text(json.dumps(family_to_dict(family)), encoding="utf-8")

    host = load_graph(graph_path).graph
    loaded = load_family(family_path, host)
    assert loaded.trees == family.trees
    assert loaded.terminals == family.terminals


def test_family_for_a_different_host_is_rejected() -> None:
    family = build_cissts_complete(6, TerminalSet.of([0, 1, 2]))
    with pytest.raises(GraphFormatError) as excinfo:
        family_from_dict(family_to_dict(family), make_complete(5))
    assert excinfo.value.field == "n"


def test_family_with_one_terminal_is_rejected_by_schema() -> None:
    data = {"n": 4, "terminals": [0], "trees": []}
    with pytest.raises(GraphFormatError) as excinfo:
        family_from_dict(data, make_complete(4))
    assert excinfo.value.field == "terminals"


def test_terminal_set_errors_are_not_format_errors() -> None:
    with pytest.raises(TerminalSetError):
        TerminalSet.of([3])


@pytest.mark.parametrize(("rows", "field"), [([3], "terminals"), ([0, -1], "terminals"), ([0, 4], "terminals[1]")])
def test_document_terminals_are_format_errors(rows: list, field: str) -> None:
    with pytest.raises(GraphFormatError) as excinfo:
        terminals_from_rows(rows, 4)
    assert excinfo.value.field == field


def test_document_terminals_parse() -> None:
    assert terminals_from_rows([2, 0], 4) == TerminalSet.of([0, 2])


def test_missing_file_is_a_format_error(tmp_path: Path) -> None:
    with pytest.raises(GraphFormatError):
        load_graph(tmp_path / "absent.json")
