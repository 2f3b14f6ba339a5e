"""Byte-stable artifact writers.

Graph, family and manifest JSON go through ``canonical_dumps`` so a rerun with the same
inputs reproduces every file and digest recorded in the run manifest.
"""

from __future__ import annotations

import hashlib
import json
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from pathlib import Path

_CHUNK = 1 << 16


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def sha256_file(path: Path) -> str:
    """Digest of a user-supplied input file, read in chunks."""
    digest = hashlib.sha256()
    with path.open("rb") as handle:
        for chunk in iter(lambda: handle.read(_CHUNK), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_text(path: Path, text: str) -> str:
    """Write ``text`` (a DOT file, usually) and return its sha256."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return sha256_text(text)


def write_json(path: Path, obj: Any) -> str:
    return write_text(path, canonical_dumps(obj))
