from __future__ import annotations

from pathlib import Path

import pytest
import yaml

from cisstkit.errors import SearchConfigError
from cisstkit.search.config import (
    JOBS_ENV_VAR,
    SearchConfig,
    config_path_for_dir,
    load_search_config,
    resolve_search_config,
    write_default_config,
)


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


def test_missing_keys_keep_defaults(tmp_path: Path) -> None:
    config = load_search_config(_write(tmp_path / "search.yaml", "node_budget: 100\n"))
    assert config.node_budget == 100
    assert config.time_budget == SearchConfig().time_budget
    assert config.strategy == "skeleton"


def test_empty_file_is_the_default(tmp_path: Path) -> None:
    assert load_search_config(_write(tmp_path / "search.yaml", "")) == SearchConfig()


def test_full_file_round_trips_through_yaml(tmp_path: Path) -> None:
    path = _write(
        tmp_path / "search.yaml",
        "jobs: 3\nmax_trees: 4\nnode_budget: 10\nstrategy: Trees\ntime_budget: 2\nuse_symmetry: false\n",
    )
    config = load_search_config(path)
    assert config == SearchConfig(
        node_budget=10, time_budget=2.0, use_symmetry=False, max_trees=4, jobs=3, strategy="trees"
    )


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("colour: blue\n", "unknown keys: colour"),
        ("- 1\n- 2\n", "expected mapping"),
        ("node_budget: lots\n", "must be an integer"),
        ("node_budget: true\n", "must be an integer"),
        ("time_budget: soon\n", "must be a number"),
        ("use_symmetry: 1\n", "true or false"),
        ("strategy: guess\n", "strategy must be one of"),
        ("node_budget: 0\n", "must be positive"),
        ("jobs: 0\n", "at least 1"),
        ("node_budget: [\n", "parse error"),
    ],
)
def test_invalid_files_are_rejected(tmp_path: Path, text: str, message: str) -> None:
    with pytest.raises(SearchConfigError, match=message):
        load_search_config(_write(tmp_path / "search.yaml", text))


def test_unreadable_path_is_a_config_error(tmp_path: Path) -> None:
    with pytest.raises(SearchConfigError, match="cannot read"):
        load_search_config(tmp_path / "absent.yaml")


def test_precedence_is_flags_then_env_then_file(tmp_path: Path) -> None:
    config_path = config_path_for_dir(tmp_path)
    config_path.parent.mkdir(parents=True)
    _write(config_path, "jobs: 2\nnode_budget: 50\n")

    from_file = resolve_search_config(base_dir=tmp_path, env={})
    assert (from_file.jobs, from_file.node_budget) == (2, 50)

    from_env = resolve_search_config(base_dir=tmp_path, env={JOBS_ENV_VAR: "4"})
    assert from_env.jobs == 4

    from_flags = resolve_search_config(
        base_dir=tmp_path,
        env={JOBS_ENV_VAR: "4"},
        overrides={"jobs": 6, "node_budget": None},
    )
    assert (from_flags.jobs, from_flags.node_budget) == (6, 50)


def test_resolve_without_a_file_uses_defaults(tmp_path: Path) -> None:
    assert resolve_search_config(base_dir=tmp_path) == SearchConfig()


def test_bad_env_and_unknown_overrides(tmp_path: Path) -> None:
    with pytest.raises(SearchConfigError, match=JOBS_ENV_VAR):
        resolve_search_config(base_dir=tmp_path, env={JOBS_ENV_VAR: "many"})
    with pytest.raises(SearchConfigError, match="unknown search options: depth"):
        resolve_search_config(base_dir=tmp_path, overrides={"depth": 3})


def test_write_default_config(tmp_path: Path) -> None:
    path = write_default_config(tmp_path)
    assert path == config_path_for_dir(tmp_path)
    assert yaml.safe_load(path.read_text(encoding="utf-8")) == SearchConfig().to_dict()
    assert load_search_config(path) == SearchConfig()

    with pytest.raises(FileExistsError):
        write_default_config(tmp_path)
    assert write_default_config(tmp_path, force=True) == path
