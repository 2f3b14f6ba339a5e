"""Run manifest module."""

from cisstkit.manifest.manifest import (
    DETERMINISTIC_TIMESTAMP,
    MANIFEST_FILENAME,
    TIMESTAMP_MODES,
    RunManifest,
    get_timestamp,
    input_digest,
    load_manifest,
    manifest_path,
    recorded_digest,
    save_manifest,
    start_manifest,
)

__all__ = [
    "DETERMINISTIC_TIMESTAMP",
    "MANIFEST_FILENAME",
    "TIMESTAMP_MODES",
    "RunManifest",
    "get_timestamp",
    "input_digest",
    "load_manifest",
    "manifest_path",
    "recorded_digest",
    "save_manifest",
    "start_manifest",
]
