"""Lookup of the graph, family and run-manifest schemas shipped in ``cisstkit_schemas``."""

from __future__ import annotations

import functools
import json
from importlib.resources import files
from typing import Any

SCHEMA_PACKAGE = "cisstkit_schemas"
SCHEMA_SUFFIX = ".schema.json"


def schema_name(name: str) -> str:
    """``graph.schema.json`` and ``graph`` name the same schema."""
    return name[: -len(SCHEMA_SUFFIX)] if name.endswith(SCHEMA_SUFFIX) else name


class SchemaRegistry:
    """Schemas found in the package data when the registry is created."""

    def __init__(self, package: str = SCHEMA_PACKAGE) -> None:
        self.package = package
        try:
            entries = [item.name for item in files(package).iterdir()]
        except (ModuleNotFoundError, FileNotFoundError):
            entries = []
        self.available: tuple[str, ...] = tuple(
            sorted(schema_name(entry) for entry in entries if entry.endswith(SCHEMA_SUFFIX))
        )
        self._loaded: dict[str, dict[str, Any]] = {}

    def get_json(self, name: str) -> dict[str, Any]:
        """Parsed schema; ``KeyError`` names the schemas that do exist."""
        key = schema_name(name)
        if key not in self.available:
            raise KeyError(f"no schema {key!r} in {self.package}; available: {', '.join(self.available)}")
        if key not in self._loaded:
            text = (files(self.package) / f"{key}{SCHEMA_SUFFIX}").read_text(encoding="utf-8")
            try:
                self._loaded[key] = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ValueError(f"schema {key!r} is not valid JSON: {exc}") from exc
        return self._loaded[key]


@functools.lru_cache(maxsize=None)
def get_registry() -> SchemaRegistry:
    return SchemaRegistry()
