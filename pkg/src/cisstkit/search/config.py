"""Load and validate exact-search configuration."""

from __future__ import annotations

import typing
from collections.abc import Mapping
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any

import yaml  # type: ignore[import-untyped]

from cisstkit.errors import SearchConfigError

JOBS_ENV_VAR = "CISSTKIT_JOBS"
DEFAULT_CONFIG_RELATIVE_PATH = Path(".cisstkit/search.yaml")
STRATEGIES: tuple[str, ...] = ("skeleton", "trees")

_KNOWN_KEYS = ("jobs", "max_trees", "node_budget", "strategy", "time_budget", "use_symmetry")


@dataclass(frozen=True)
class SearchConfig:
    """Budgets and switches for exhaustive search.

    Exhausting ``node_budget`` or ``time_budget`` (seconds) ends the search
    with an INDETERMINATE result rather than a guess.
    """

    node_budget: int = 5_000_000
    time_budget: float = 600.0
    use_symmetry: bool = True
    max_trees: typing.Optional[int] = None
    jobs: int = 1
    strategy: str = "skeleton"

    def __post_init__(self) -> None:
        if self.node_budget <= 0:
            raise SearchConfigError(f"node_budget must be positive, got {self.node_budget}")
        if self.time_budget <= 0:
            raise SearchConfigError(f"time_budget must be positive, got {self.time_budget}")
        if self.max_trees is not None and self.max_trees <= 0:
            raise SearchConfigError(f"max_trees must be positive when set, got {self.max_trees}")
        if self.jobs < 1:
            raise SearchConfigError(f"jobs must be at least 1, got {self.jobs}")
        if self.strategy not in STRATEGIES:
            raise SearchConfigError(f"strategy must be one of {STRATEGIES}, got `{self.strategy}`")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def config_path_for_dir(base_dir: Path) -> Path:
    return base_dir.resolve() / DEFAULT_CONFIG_RELATIVE_PATH


def write_default_config(base_dir: Path, *, force: bool = False) -> Path:
    """Write the default configuration YAML deterministically."""
    output_path = config_path_for_dir(base_dir)
    if output_path.exists() and not force:
        raise FileExistsError(f"Search config already exists: {output_path}")
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(yaml.safe_dump(SearchConfig().to_dict(), sort_keys=True), encoding="utf-8")
    return output_path


def _as_int(raw: Any, key: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise SearchConfigError(f"search.yaml `{key}` must be an integer, got {raw!r}")
    return raw


def load_search_config(path: Path) -> SearchConfig:
    """Parse and validate a YAML search configuration; missing keys keep defaults."""
    try:
        raw = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise SearchConfigError(f"cannot read search config {path}: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise SearchConfigError(f"search.yaml parse error: {exc}") from exc
    if raw is None:
        return SearchConfig()
    if not isinstance(raw, dict):
        raise SearchConfigError("search.yaml parse error: expected mapping at top level")

    unknown = sorted(set(raw) - set(_KNOWN_KEYS))
    if unknown:
        raise SearchConfigError(f"search.yaml has unknown keys: {', '.join(map(str, unknown))}")

    values: dict[str, Any] = {}
    if "node_budget" in raw:
        values["node_budget"] = _as_int(raw["node_budget"], "node_budget")
    if "jobs" in raw:
        values["jobs"] = _as_int(raw["jobs"], "jobs")
    if raw.get("max_trees") is not None:
        values["max_trees"] = _as_int(raw["max_trees"], "max_trees")
    if "time_budget" in raw:
        budget = raw["time_budget"]
        if isinstance(budget, bool) or not isinstance(budget, (int, float)):
            raise SearchConfigError(f"search.yaml `time_budget` must be a number, got {budget!r}")
        values["time_budget"] = float(budget)
    if "use_symmetry" in raw:
        if not isinstance(raw["use_symmetry"], bool):
            raise SearchConfigError("search.yaml `use_symmetry` must be true or false")
        values["use_symmetry"] = raw["use_symmetry"]
    if "strategy" in raw:
        values["strategy"] = str(raw["strategy"]).strip().lower()
    return SearchConfig(**values)


def resolve_search_config(
    *,
    config_path: typing.Optional[Path] = None,
    base_dir: typing.Optional[Path] = None,
    env: typing.Optional[Mapping[str, str]] = None,
    overrides: typing.Optional[Mapping[str, Any]] = None,
) -> SearchConfig:
    """Layer flag overrides over the environment, the YAML file and the defaults.

    ``config_path`` must exist when given; otherwise ``.cisstkit/search.yaml``
    under ``base_dir`` is used if present.
    """
    if config_path is not None:
        config = load_search_config(config_path)
    else:
        default_path = config_path_for_dir(base_dir if base_dir is not None else Path.cwd())
        config = load_search_config(default_path) if default_path.exists() else SearchConfig()

    effective_env = env if env is not None else {}
    jobs_raw = effective_env.get(JOBS_ENV_VAR)
    if jobs_raw:
        try:
            config = replace(config, jobs=int(jobs_raw))
        except ValueError as exc:
            raise SearchConfigError(f"{JOBS_ENV_VAR} must be an integer, got `{jobs_raw}`") from exc

    set_overrides = {key: value for key, value in (overrides or {}).items() if value is not None}
    unknown = sorted(set(set_overrides) - set(_KNOWN_KEYS))
    if unknown:
        raise SearchConfigError(f"unknown search options: {', '.join(unknown)}")
    return replace(config, **set_overrides) if set_overrides else config
