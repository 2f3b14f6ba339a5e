"""Run manifests: what a command was asked, what it found, and what it wrote."""

from __future__ import annotations

import json
import typing
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from cisstkit.artifacts.canonical_json import canonical_dumps, sha256_file, sha256_text, write_json
from cisstkit.schemas.validator import validate_data

MANIFEST_FILENAME = "RUN_MANIFEST.json"
MANIFEST_SCHEMA = "run_manifest"
SCHEMA_VERSION = "1.0"
DETERMINISTIC_TIMESTAMP = "1970-01-01T00:00:00Z"
TIMESTAMP_MODES: tuple[str, ...] = ("deterministic", "wallclock")


def get_timestamp(timestamp_mode: str) -> str:
    """Return timestamp for deterministic or wallclock mode."""
    if timestamp_mode == "deterministic":
        return DETERMINISTIC_TIMESTAMP
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat().replace("+00:00", "Z")


def manifest_path(out_dir: Path) -> Path:
    return Path(out_dir).resolve() / MANIFEST_FILENAME


def input_digest(parameters: typing.Mapping[str, Any], inputs: typing.Iterable[Path] = ()) -> str:
    """SHA-256 over the canonical parameters followed by each input file's digest."""
    parts = [canonical_dumps(dict(parameters))]
    parts.extend(sha256_file(Path(path)) for path in inputs)
    return sha256_text("\n".join(parts))


@dataclass
class RunManifest:
    """Audit record of one CLI run.

    ``result`` holds only the deterministic summary; timing lives in
    ``wall_time_seconds`` so reruns compare equal on ``result``.
    """

    command: str
    parameters: dict[str, Any]
    input_digest: str
    result: dict[str, Any] = field(default_factory=dict)
    wall_time_seconds: float = 0.0
    outputs: list[dict[str, str]] = field(default_factory=list)
    created_at: str = DETERMINISTIC_TIMESTAMP

    def record_output(self, out_dir: Path, path: Path, sha256: str) -> None:
        relative = Path(path).resolve().relative_to(Path(out_dir).resolve())
        self.outputs.append({"path": relative.as_posix(), "sha256": sha256})

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "created_at": self.created_at,
            "input_digest": self.input_digest,
            "parameters": self.parameters,
            "result": self.result,
            "wall_time_seconds": self.wall_time_seconds,
            "outputs": sorted(self.outputs, key=lambda item: item["path"]),
        }


def start_manifest(
    command: str,
    parameters: typing.Mapping[str, Any],
    *,
    inputs: typing.Iterable[Path] = (),
    timestamp_mode: str = "deterministic",
) -> RunManifest:
    params = dict(parameters)
    return RunManifest(
        command=command,
        parameters=params,
        input_digest=input_digest(params, inputs),
        created_at=get_timestamp(timestamp_mode),
    )


def save_manifest(
    manifest: RunManifest,
    out_dir: Path,
    *,
    wall_time_seconds: float = 0.0,
    timestamp_mode: str = "deterministic",
) -> Path:
    """Validate and write ``RUN_MANIFEST.json``; wall time is zeroed in deterministic mode."""
    manifest.wall_time_seconds = 0.0 if timestamp_mode == "deterministic" else round(wall_time_seconds, 3)
    payload = manifest.to_dict()
    validate_data(payload, MANIFEST_SCHEMA)
    path = manifest_path(out_dir)
    write_json(path, payload)
    return path


def load_manifest(out_dir: Path) -> typing.Optional[dict[str, Any]]:
    """Load manifest from an output dir, or None when absent."""
    path = manifest_path(out_dir)
    if not path.exists():
        return None
    with path.open(encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{path} is not a JSON object")
    return data


def recorded_digest(path: Path) -> typing.Optional[str]:
    """sha256 that the manifest beside ``path`` recorded for it, if any."""
    data = load_manifest(Path(path).parent)
    if data is None:
        return None
    name = Path(path).name
    for item in data.get("outputs", []):
        if isinstance(item, dict) and item.get("path") == name:
            digest = item.get("sha256")
            return digest if isinstance(digest, str) else None
    return None
