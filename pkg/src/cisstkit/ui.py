"""Console helpers shared by CLI commands: the rich console, logging setup and a spinner."""

from __future__ import annotations

import logging
import typing
from collections.abc import Mapping
from dataclasses import dataclass

from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress, SpinnerColumn, TextColumn

if typing.TYPE_CHECKING:
    from collections.abc import Callable

_T = typing.TypeVar("_T")

LOG_LEVEL_ENV_VAR = "CISSTKIT_LOG_LEVEL"

console = Console()
err_console = Console(stderr=True)


def resolve_log_level(verbose: bool, env: Mapping[str, str]) -> int:
    """WARNING by default, INFO with --verbose; the environment variable wins when set."""
    raw = env.get(LOG_LEVEL_ENV_VAR, "").strip().upper()
    if raw:
        level = logging.getLevelName(raw)
        if isinstance(level, int):
            return level
    return logging.INFO if verbose else logging.WARNING


def configure_logging(level: int) -> None:
    """Install one RichHandler on the package logger; repeated calls only adjust the level."""
    logger = logging.getLogger("cisstkit")
    logger.setLevel(level)
    if not any(isinstance(handler, RichHandler) for handler in logger.handlers):
        handler = RichHandler(console=err_console, show_path=False, rich_tracebacks=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False


@dataclass(frozen=True)
class Spinner:
    message: str

    def run(self, fn: Callable[[], _T]) -> _T:
        if not err_console.is_terminal:
            return fn()

        with Progress(
            SpinnerColumn(style="cyan"),
            TextColumn("[bold cyan]{task.description}[/bold cyan]"),
            transient=True,
            console=err_console,
        ) as prog:
            task_id = prog.add_task(self.message, total=None)
            try:
                return fn()
            finally:
                prog.update(task_id, completed=1)
