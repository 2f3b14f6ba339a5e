"""cisst - construct, verify, bound and search completely independent Steiner tree families.

Exit codes: 0 ok, 1 verification failed, 2 usage or domain error, 3 unreadable
input, 4 internal inconsistency.
"""

import os
import time
import typing
from pathlib import Path
from typing import Any

import typer
from rich.markup import escape

from cisstkit import __version__
from cisstkit.artifacts.canonical_json import sha256_file, write_json, write_text
from cisstkit.construct import (
    bound_report,
    build_bipartite_family,
    build_catalog,
    build_cissts_complete,
)
from cisstkit.errors import (
    CisstError,
    FamilyPreconditionError,
    GraphFormatError,
    InconsistencyError,
    TerminalSetError,
)
from cisstkit.graph.generators import make_complete, make_complete_bipartite
from cisstkit.graph.io import family_to_dict, graph_to_dict, load_family, load_graph
from cisstkit.graph.types import BipartiteLabeling, Graph, TerminalSet, TreeFamily
from cisstkit.manifest import (
    MANIFEST_FILENAME,
    TIMESTAMP_MODES,
    RunManifest,
    recorded_digest,
    save_manifest,
    start_manifest,
)
from cisstkit.reduction.failover import failover
from cisstkit.render.dot import render_family_dot, render_tree_dot
from cisstkit.search import (
    ExactResult,
    GeneralizedResult,
    SearchStatus,
    exact_generalized_kappa_star,
    exact_kappa_star,
    resolve_search_config,
)
from cisstkit.search.config import STRATEGIES, write_default_config
from cisstkit.ui import Spinner, configure_logging, console, resolve_log_level
from cisstkit.verify import VerifyMode, Violation, verify_characterization, verify_definitional

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INCONSISTENT = 4

FAMILY_FILENAME = "family.json"
GRAPH_FILENAME = "graph.json"
COMBINED_DOT_FILENAME = "family.dot"

cli = typer.Typer(
    name="cisst",
    help="Completely independent S-Steiner trees: constructions, verification and exact search",
    no_args_is_help=True,
)
app = cli

construct_app = typer.Typer(help="Build explicit tree families.", no_args_is_help=True)
cli.add_typer(construct_app, name="construct")
config_app = typer.Typer(help="Exact-search configuration files.", no_args_is_help=True)
cli.add_typer(config_app, name="config")


def _version_option_callback(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@cli.callback()
def _cli_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log search progress (INFO)."),
    version: bool = typer.Option(
        False,
        "--version",
        help="Show cisstkit version and exit.",
        is_eager=True,
        callback=_version_option_callback,
    ),
) -> None:
    """Set up logging for every subcommand."""
    _ = version
    configure_logging(resolve_log_level(verbose, os.environ))


def _error_exit(exc: CisstError) -> typer.Exit:
    """Print a domain error and pick its exit code."""
    if isinstance(exc, InconsistencyError):
        code = EXIT_INCONSISTENT
    elif isinstance(exc, GraphFormatError):
        code = EXIT_PARSE
    else:
        code = EXIT_USAGE
    console.print(f"[bold red]Error:[/bold red] [{exc.reason_code}] {escape(str(exc))}")
    return typer.Exit(code)


def parse_terminals(text: str, labeling: typing.Optional[BipartiteLabeling] = None) -> TerminalSet:
    """Parse ``0,1,2`` or ``x1,y3``-style terminal lists; labels need a bipartite labeling."""
    members = []
    for token in (part.strip() for part in text.split(",")):
        if not token:
            continue
        if token.isdigit():
            members.append(int(token))
        elif labeling is not None:
            members.append(labeling.parse_label(token))
        else:
            raise TerminalSetError(f"`{token}` is not a vertex id and the host has no x/y labels")
    if len(set(members)) != len(members):
        raise TerminalSetError(f"terminal list `{text}` repeats a vertex")
    return TerminalSet.of(members)


def _parse_pair(text: str, option: str) -> tuple[int, int]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise typer.BadParameter(f"expected two integers like `5,6`, got `{text}`", param_hint=option)
    return int(parts[0]), int(parts[1])


def _write_family_outputs(
    out_dir: Path,
    manifest: RunManifest,
    family: TreeFamily,
    labeling: typing.Optional[BipartiteLabeling],
) -> None:
    """Write graph, family, per-tree DOT and combined DOT files into ``out_dir``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs: list[tuple[Path, str]] = []
    graph_path = out_dir / GRAPH_FILENAME
    outputs.append((graph_path, write_json(graph_path, graph_to_dict(family.host, labeling, family.terminals))))
    family_path = out_dir / FAMILY_FILENAME
    outputs.append((family_path, write_json(family_path, family_to_dict(family))))
    terminals = family.terminals.members
    for index, tree in enumerate(family):
        dot_path = out_dir / f"tree_{index}.dot"
        dot = render_tree_dot(tree, terminals, index=index, labeling=labeling)
        outputs.append((dot_path, write_text(dot_path, dot)))
    combined = out_dir / COMBINED_DOT_FILENAME
    outputs.append((combined, write_text(combined, render_family_dot(family, labeling=labeling))))
    for path, digest in outputs:
        manifest.record_output(out_dir, path, digest)


def _timestamp_mode_option() -> Any:
    return typer.Option(
        "deterministic",
        "--timestamp-mode",
        help="Manifest timestamps: deterministic or wallclock.",
    )


def _check_timestamp_mode(timestamp_mode: str) -> None:
    if timestamp_mode not in TIMESTAMP_MODES:
        raise typer.BadParameter(
            f"must be one of {', '.join(TIMESTAMP_MODES)}", param_hint="--timestamp-mode"
        )


def _finish_construct(
    command: str,
    parameters: dict[str, Any],
    family: TreeFamily,
    labeling: typing.Optional[BipartiteLabeling],
    out: Path,
    timestamp_mode: str,
    started: float,
) -> None:
    manifest = start_manifest(command, parameters, timestamp_mode=timestamp_mode)
    manifest.result = {"trees": len(family), "terminals": list(family.terminals.ordered)}
    _write_family_outputs(out, manifest, family, labeling)
    save_manifest(
        manifest,
        out,
        wall_time_seconds=time.monotonic() - started,
        timestamp_mode=timestamp_mode,
    )
    console.print(f"[green]✓ {len(family)} completely independent trees[/green]")
    console.print(f"[cyan]Output:[/cyan] {out.resolve()}")


@construct_app.command("complete")
def construct_complete_cmd(
    n: int = typer.Option(..., "--n", help="Number of vertices of K_n."),
    terminals: str = typer.Option(
        ..., "--s", "--terminals", help="Comma-separated terminal ids, e.g. 0,1,2."
    ),
    out: Path = typer.Option(Path("cisst-out"), "--out", help="Output directory."),
    timestamp_mode: str = _timestamp_mode_option(),
) -> None:
    """Completely independent S-Steiner trees in K_n."""
    _check_timestamp_mode(timestamp_mode)
    started = time.monotonic()
    try:
        s = parse_terminals(terminals)
        family = build_cissts_complete(n, s)
    except CisstError as exc:
        raise _error_exit(exc) from exc
    parameters = {"target": "complete", "n": n, "terminals": list(s.ordered)}
    _finish_construct("construct complete", parameters, family, None, out, timestamp_mode, started)


@construct_app.command("bipartite")
def construct_bipartite_cmd(
    m1: int = typer.Option(..., "--m1", help="Size of the smaller side X."),
    m2: int = typer.Option(..., "--m2", help="Size of the larger side Y."),
    terminals: str = typer.Option(
        ..., "--terminals", "--s", help="Terminals as ids or labels, e.g. x1,x2,y1."
    ),
    out: Path = typer.Option(Path("cisst-out"), "--out", help="Output directory."),
    timestamp_mode: str = _timestamp_mode_option(),
) -> None:
    """Completely independent S-Steiner trees in K_{m1,m2}."""
    _check_timestamp_mode(timestamp_mode)
    started = time.monotonic()
    try:
        _, labeling = make_complete_bipartite(m1, m2)
        s = parse_terminals(terminals, labeling)
        family = build_bipartite_family(labeling, s)
    except CisstError as exc:
        raise _error_exit(exc) from exc
    parameters = {"target": "bipartite", "m1": m1, "m2": m2, "terminals": list(s.ordered)}
    _finish_construct("construct bipartite", parameters, family, labeling, out, timestamp_mode, started)


def _load_inputs(graph_path: Path, family_path: Path) -> tuple[TreeFamily, typing.Optional[BipartiteLabeling]]:
    try:
        document = load_graph(graph_path)
        family = load_family(family_path, document.graph)
    except GraphFormatError as exc:
        raise _error_exit(exc) from exc
    except CisstError as exc:
        console.print(f"[bold red]Error:[/bold red] [{exc.reason_code}] {escape(str(exc))}")
        raise typer.Exit(EXIT_PARSE) from exc
    return family, document.labeling


def _print_violation(violation: Violation) -> None:
    console.print(f"[bold red]✗ Not completely independent:[/bold red] {violation.render()}")
    console.print(f"[cyan]kind:[/cyan] {violation.kind}")
    p, q = violation.tree_indices
    console.print(f"[cyan]trees:[/cyan] {p}, {q}")
    console.print(f"[cyan]witness:[/cyan] {violation.to_dict()['witness']}")


def _check_recorded_digest(family_path: Path) -> None:
    """Compare a family file with the digest its run manifest recorded, when one exists."""
    try:
        recorded = recorded_digest(family_path)
    except ValueError as exc:
        console.print(f"[yellow]⚠ {MANIFEST_FILENAME} unreadable:[/yellow] {escape(str(exc))}")
        return
    if recorded is None:
        return
    if recorded == sha256_file(family_path):
        console.print(f"[cyan]manifest:[/cyan] {family_path.name} matches {MANIFEST_FILENAME}")
    else:
        console.print(f"[yellow]⚠ {family_path.name} changed since {MANIFEST_FILENAME} was written[/yellow]")


@cli.command("verify")
def verify_cmd(
    graph: Path = typer.Argument(..., help="Host graph JSON."),
    family_file: Path = typer.Argument(..., help="Tree family JSON."),
    mode: VerifyMode = typer.Option(VerifyMode.BOTH, "--mode", help="Which verifier to run."),
) -> None:
    """Check that a family is completely independent."""
    family, _ = _load_inputs(graph, family_file)
    _check_recorded_digest(family_file)
    try:
        if mode is VerifyMode.DEFINITIONAL:
            violation = verify_definitional(family)
        elif mode is VerifyMode.CHARACTERIZATION:
            violation = verify_characterization(family)
        else:
            violation = verify_definitional(family)
            other = verify_characterization(family)
            if (violation is None) != (other is None):
                raise InconsistencyError(
                    f"definitional check says {violation.render() if violation else 'independent'}, "
                    f"characterization says {other.render() if other else 'independent'}"
                )
    except FamilyPreconditionError as exc:
        console.print(f"[bold red]✗ Invalid member:[/bold red] [{exc.reason_code}] {escape(str(exc))}")
        raise typer.Exit(EXIT_VERIFY_FAILED) from exc
    except CisstError as exc:
        raise _error_exit(exc) from exc

    if violation is not None:
        _print_violation(violation)
        raise typer.Exit(EXIT_VERIFY_FAILED)
    console.print(f"[green]✓ {len(family)} trees are completely independent ({mode})[/green]")


@cli.command("bound")
def bound_cmd(
    m1: int = typer.Option(..., "--m1", help="Size of the smaller side X."),
    m2: int = typer.Option(..., "--m2", help="Size of the larger side Y."),
    s: int = typer.Option(..., "--s", help="Number of terminals."),
) -> None:
    """Per-split lower bounds for K_{m1,m2} and their minimum."""
    try:
        report = bound_report(m1, m2, s)
    except CisstError as exc:
        raise _error_exit(exc) from exc

    console.print(f"[bold]K_{{{m1},{m2}}}, s={s}[/bold]")
    console.print(f"{'i':>3}  {'case':<7}  {'f(i)':>4}  {'upper':>5}")
    for row in report.per_i:
        marker = " exact" if row.exact else ""
        console.print(f"{row.i:>3}  {row.case!s:<7}  {row.value:>4}  {row.upper:>5}{marker}")
    console.print(f"[cyan]min:[/cyan] {report.minimum} (i={report.argmin_i})")
    if report.floor_bound is not None:
        console.print(f"[cyan]floor bound:[/cyan] {report.floor_bound}")
        console.print(f"[cyan]closed form:[/cyan] {report.closed_form}")


@cli.command("catalog")
def catalog_cmd(
    m1: int = typer.Option(..., "--m1", help="Size of the smaller side X."),
    m2: int = typer.Option(..., "--m2", help="Size of the larger side Y."),
    terminals: str = typer.Option(..., "--terminals", help="Mixed terminal set, e.g. x1,y1,y2."),
) -> None:
    """Sizes of every bipartite family for a mixed terminal set."""
    try:
        _, labeling = make_complete_bipartite(m1, m2)
        catalog = build_catalog(labeling, parse_terminals(terminals, labeling))
    except CisstError as exc:
        raise _error_exit(exc) from exc
    console.print(f"[cyan]i:[/cyan] {catalog.i}")
    for name, size in catalog.sizes().items():
        console.print(f"[cyan]{name}:[/cyan] {size}")
    console.print(f"[cyan]branches:[/cyan] {', '.join(map(str, catalog.branches)) or 'none'}")
    if catalog.degenerate:
        console.print(f"[yellow]degenerate:[/yellow] {', '.join(map(str, catalog.degenerate))}")


def _resolve_host(
    graph: typing.Optional[Path],
    complete: typing.Optional[int],
    bipartite: typing.Optional[str],
) -> tuple[Graph, typing.Optional[BipartiteLabeling], typing.Optional[TerminalSet], list[Path]]:
    given = [value for value in (graph, complete, bipartite) if value is not None]
    if len(given) != 1:
        raise typer.BadParameter("give exactly one of GRAPH, --complete or --bipartite")
    if graph is not None:
        try:
            document = load_graph(graph)
        except CisstError as exc:
            raise _error_exit(exc) from exc
        return document.graph, document.labeling, document.terminals, [graph]
    try:
        if complete is not None:
            return make_complete(complete), None, None, []
        m1, m2 = _parse_pair(typing.cast(str, bipartite), "--bipartite")
        host, labeling = make_complete_bipartite(m1, m2)
    except CisstError as exc:
        raise _error_exit(exc) from exc
    return host, labeling, None, []


def _print_exact(result: ExactResult) -> None:
    if result.status is SearchStatus.EXACT:
        console.print(f"[green]✓ κ* = {result.lower}[/green]")
    else:
        console.print(f"[yellow]INDETERMINATE[/yellow] {result.lower} <= κ* <= {result.upper}")
    console.print(f"[cyan]nodes:[/cyan] {result.nodes}")


def _print_generalized(result: GeneralizedResult) -> None:
    if result.status is SearchStatus.EXACT:
        console.print(f"[green]✓ κ*_{result.k} = {result.lower}[/green]")
    else:
        console.print(f"[yellow]INDETERMINATE[/yellow] {result.lower} <= κ*_{result.k} <= {result.upper}")
    console.print(f"[cyan]terminal sets checked:[/cyan] {result.subsets_checked}")
    if result.worst_terminals is not None:
        console.print(f"[cyan]worst terminals:[/cyan] {list(result.worst_terminals.ordered)}")


@cli.command("exact")
def exact_cmd(
    graph: typing.Optional[Path] = typer.Argument(None, help="Host graph JSON."),
    complete: typing.Optional[int] = typer.Option(None, "--complete", help="Use K_n."),
    bipartite: typing.Optional[str] = typer.Option(None, "--bipartite", help="Use K_{m1,m2}, given as m1,m2."),
    terminals: typing.Optional[str] = typer.Option(None, "--terminals", help="Terminal ids or x/y labels."),
    all_subsets: typing.Optional[int] = typer.Option(
        None, "--all-subsets", help="Minimise over every terminal set of this size."
    ),
    node_budget: typing.Optional[int] = typer.Option(None, "--node-budget", help="Search node limit."),
    time_budget: typing.Optional[float] = typer.Option(None, "--time-budget", help="Search time limit (s)."),
    jobs: typing.Optional[int] = typer.Option(None, "--jobs", help="Worker processes."),
    max_trees: typing.Optional[int] = typer.Option(None, "--max-trees", help="Stop once this many trees are found."),
    no_symmetry: bool = typer.Option(False, "--no-symmetry", help="Disable twin-class pruning."),
    strategy: typing.Optional[str] = typer.Option(
        None, "--strategy", help=f"Search strategy: {', '.join(STRATEGIES)}."
    ),
    config: typing.Optional[Path] = typer.Option(None, "--config", help="Search config YAML."),
    out: typing.Optional[Path] = typer.Option(None, "--out", help="Write witness and manifest here."),
    timestamp_mode: str = _timestamp_mode_option(),
) -> None:
    """Exact packing number of a small host, or certified bounds when a budget runs out."""
    _check_timestamp_mode(timestamp_mode)
    started = time.monotonic()
    host, labeling, file_terminals, inputs = _resolve_host(graph, complete, bipartite)
    overrides: dict[str, Any] = {
        "node_budget": node_budget,
        "time_budget": time_budget,
        "jobs": jobs,
        "max_trees": max_trees,
        "strategy": strategy,
        "use_symmetry": False if no_symmetry else None,
    }
    try:
        cfg = resolve_search_config(config_path=config, env=os.environ, overrides=overrides)
    except CisstError as exc:
        raise _error_exit(exc) from exc

    parameters: dict[str, Any] = {"n": host.n, "search": cfg.to_dict()}
    try:
        if all_subsets is not None:
            if terminals is not None:
                raise typer.BadParameter("--terminals and --all-subsets are exclusive")
            k = all_subsets
            parameters["all_subsets"] = k
            generalized = Spinner(f"Searching all {k}-subsets").run(
                lambda: exact_generalized_kappa_star(host, k, cfg)
            )
            _print_generalized(generalized)
            result_summary = generalized.to_dict()
            witness = None
        else:
            if terminals is not None:
                s = parse_terminals(terminals, labeling)
            elif file_terminals is not None:
                s = file_terminals
            else:
                raise typer.BadParameter("give --terminals, --all-subsets, or a graph file with terminals")
            parameters["terminals"] = list(s.ordered)
            result = Spinner("Searching").run(lambda: exact_kappa_star(host, s, cfg))
            _print_exact(result)
            result_summary = result.to_dict()
            witness = result.witness
    except CisstError as exc:
        raise _error_exit(exc) from exc

    if out is not None:
        manifest = start_manifest("exact", parameters, inputs=inputs, timestamp_mode=timestamp_mode)
        manifest.result = result_summary
        if witness is not None:
            _write_family_outputs(out, manifest, witness, labeling)
        save_manifest(
            manifest,
            out,
            wall_time_seconds=time.monotonic() - started,
            timestamp_mode=timestamp_mode,
        )
        console.print(f"[cyan]Output:[/cyan] {out.resolve()}")


@cli.command("failover")
def failover_cmd(
    graph: Path = typer.Argument(..., help="Host graph JSON."),
    family_file: Path = typer.Argument(..., help="Completely independent family JSON."),
    vertex: str = typer.Option(..., "--vertex", help="Failed vertex id or x/y label."),
    out: Path = typer.Option(Path("cisst-out"), "--out", help="Output directory."),
    timestamp_mode: str = _timestamp_mode_option(),
) -> None:
    """Remove a failed vertex and keep the surviving trees independent."""
    _check_timestamp_mode(timestamp_mode)
    started = time.monotonic()
    family, labeling = _load_inputs(graph, family_file)
    try:
        if vertex.strip().isdigit():
            failed = int(vertex)
        elif labeling is not None:
            failed = labeling.parse_label(vertex)
        else:
            raise TerminalSetError(f"`{vertex}` is not a vertex id and the host has no x/y labels")
        violation = verify_characterization(family)
        if violation is not None:
            _print_violation(violation)
            raise typer.Exit(EXIT_VERIFY_FAILED)
        survivors = failover(family, failed)
    except FamilyPreconditionError as exc:
        console.print(f"[bold red]✗ Invalid member:[/bold red] [{exc.reason_code}] {escape(str(exc))}")
        raise typer.Exit(EXIT_VERIFY_FAILED) from exc
    except CisstError as exc:
        raise _error_exit(exc) from exc

    manifest = start_manifest(
        "failover",
        {"vertex": failed},
        inputs=[graph, family_file],
        timestamp_mode=timestamp_mode,
    )
    manifest.result = {"trees_before": len(family), "trees_after": len(survivors)}
    _write_family_outputs(out, manifest, survivors, labeling)
    save_manifest(
        manifest,
        out,
        wall_time_seconds=time.monotonic() - started,
        timestamp_mode=timestamp_mode,
    )
    console.print(f"[green]✓ {len(survivors)} of {len(family)} trees survive[/green]")
    console.print(f"[cyan]Output:[/cyan] {out.resolve()}")


@config_app.command("init")
def config_init_cmd(
    directory: Path = typer.Option(Path("."), "--dir", help="Directory that gets .cisstkit/search.yaml."),
    force: bool = typer.Option(False, "--force", help="Overwrite an existing file."),
) -> None:
    """Write the default search configuration."""
    try:
        path = write_default_config(directory, force=force)
    except FileExistsError as exc:
        console.print(f"[bold red]Error:[/bold red] {exc}")
        raise typer.Exit(EXIT_USAGE) from exc
    console.print(f"[green]✓ Wrote {path}[/green]")


if __name__ == "__main__":
    cli()
