"""Schema validation against the package-data registry."""

from __future__ import annotations

import typing
from dataclasses import dataclass
from typing import Any

from jsonschema.validators import Draft202012Validator

from cisstkit.utils.schema_registry import get_registry


@dataclass(frozen=True)
class SchemaIssue:
    """One validation failure: dotted/indexed location plus the validator message."""

    field: str
    message: str

    def render(self) -> str:
        return f"{self.field}: {self.message}" if self.field else self.message


def _render_path(path: typing.Iterable[Any]) -> str:
    rendered = ""
    for part in path:
        if isinstance(part, int):
            rendered += f"[{part}]"
        else:
            rendered += f".{part}" if rendered else str(part)
    return rendered


def iter_schema_issues(data: Any, schema_name: str) -> list[SchemaIssue]:
    """Return every issue, ordered by location so the first one is stable."""
    schema = get_registry().get_json(schema_name)
    validator = Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: (list(map(str, e.path)), e.message))
    return [SchemaIssue(field=_render_path(e.path), message=e.message) for e in errors]


def validate_data(
    data: Any,
    schema_name: str,
    strict: bool = True,
) -> tuple[bool, list[str]]:
    """Validate ``data`` against a named schema.

    Returns:
        Tuple of (is_valid, error_messages)

    Raises:
        KeyError: If the schema is not shipped
        ValueError: If validation fails and strict=True
    """
    issues = iter_schema_issues(data, schema_name)
    if not issues:
        return True, []
    messages = [issue.render() for issue in issues]
    if strict:
        raise ValueError(
            f"Schema validation failed for '{schema_name}':\n"
            + "\n".join(f"  - {msg}" for msg in messages)
        )
    return False, messages
