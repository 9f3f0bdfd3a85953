"""turanlab Command Line Interface.

Commands:
    turanlab construct <spec>          - Build a construction and print it
    turanlab split <spec>              - Split family of a graph
    turanlab decomp --forbid <specs>   - Decomposition family of a forbidden family
    turanlab contains --host --pattern - Subgraph containment with witness
    turanlab ex --n --forbid <specs>   - Exact extremal number with extremal graphs
    turanlab classify-tree <spec>      - Colour-class classification of a tree
    turanlab predict                   - Predicted extremal number for a blow-up
    turanlab verify figures|paths|freeness|tfree|split-family|lemma2|stars|theorem1|edge-law
    turanlab config                    - Show effective configuration
    turanlab version                   - Show version information

Spec lists (``--forbid``) are separated by ``;`` because commas belong to
the specs themselves (``turan:7,3``).
"""

import json
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, ParamSpec, TypeVar

import typer
from prometheus_client import start_http_server
from rich import print as rprint
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from turanlab.config.settings import OutputFormat, settings
from turanlab.constructions.spec import build, parse_spec, parse_spec_list
from turanlab.constructions.transforms import split_family
from turanlab.containment.search import contains as contains_search
from turanlab.decomposition.family import (
    DecompositionQuery,
    decomposition_family_blowup,
    decomposition_family_general,
)
from turanlab.errors import LabError, ensure_lab_error
from turanlab.graph.core import Graph
from turanlab.graph.family import GraphFamily
from turanlab.graph.graph6 import graph6_encode
from turanlab.lab.models import AggregateStatus, VerificationReport
from turanlab.lab.predictions import BlowupKind, predicted_value
from turanlab.lab.recipes import (
    parse_range,
    verify_edge_law,
    verify_figure_claims,
    verify_freeness_sweep,
    verify_path_blowup_claims,
    verify_split_family,
    verify_star_constant,
    verify_tfree,
)
from turanlab.lab.report import emit_report
from turanlab.lab.trees import classify_tree
from turanlab.observability._logging import configure_logging, get_logger
from turanlab.solver.extremal import ex as solve_ex
from turanlab.solver.models import ExtremalResult, SearchBudget, SolverMode
from turanlab.version import SOLVER_VERSION, __version__


# Exit codes: 0 pass, 1 failure or error, 2 incomplete (budget ran out)
EXIT_INCOMPLETE = 2


# ============================================================================
# Typed Decorator Wrappers for Typer
# ============================================================================

P = ParamSpec("P")
R = TypeVar("R")


def typed_callback(
    typer_app: typer.Typer,
) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Type-safe wrapper for @app.callback() decorator."""

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        typer_app.callback()(func)
        return func

    return decorator


def typed_command(
    typer_app: typer.Typer,
    name: str | None = None,
    **kwargs: Any,
) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Type-safe wrapper for @app.command() decorator.

    Args:
        typer_app: The Typer application instance
        name: Optional command name override
        **kwargs: Additional arguments passed to Typer's command decorator

    Returns:
        A decorator that registers the command and preserves types

    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        if name is not None:
            typer_app.command(name=name, **kwargs)(func)
        else:
            typer_app.command(**kwargs)(func)
        return func

    return decorator


# Initialize CLI app
app = typer.Typer(
    name="turanlab",
    help="turanlab - exact toolkit for Turán numbers of blow-ups",
    add_completion=False,
    no_args_is_help=True,
)

verify_app = typer.Typer(
    name="verify",
    help="Mechanically check finite claims; exit 0 iff every check passes.",
    no_args_is_help=True,
)
app.add_typer(verify_app, name="verify")

# Results go to stdout; panels and progress go to stderr.
console = Console()
err_console = Console(stderr=True)

log = get_logger(__name__)


# ============================================================================
# Shared state and helpers
# ============================================================================


@dataclass
class CliState:
    """Global flags, resolved once in the app callback."""

    fmt: OutputFormat = OutputFormat.JSON
    workers: int = 1
    cache: Path | None = None
    budget: SearchBudget = field(default_factory=SearchBudget.from_settings)


def _state(ctx: typer.Context) -> CliState:
    root = ctx.find_root()
    if not isinstance(root.obj, CliState):
        root.obj = CliState()
    return root.obj


def _print_error_panel(error: Exception, *, title: str = "turanlab Error") -> None:
    """Render a structured error panel on stderr."""
    lab_error = ensure_lab_error(error)
    details_block = ""
    if lab_error.details:
        details_json = json.dumps(lab_error.details, indent=2, sort_keys=True, ensure_ascii=True, default=str)
        details_block = f"\n\n[bold]Details:[/bold]\n{details_json}"

    err_console.print(
        Panel(
            f"[bold]Code:[/bold] {lab_error.code}\n"
            f"[bold]Phase:[/bold] {lab_error.phase}\n"
            f"[bold]Message:[/bold] {lab_error.message}{details_block}",
            title=f"[bold red]{title}[/bold red]",
            border_style="red",
        ),
    )


@contextmanager
def _lab_errors(command: str) -> Iterator[None]:
    """Turn a LabError into a panel and exit code 1."""
    try:
        yield
    except LabError as exc:
        log.error("command_failed", command=command, error=exc.to_dict())
        _print_error_panel(exc)
        raise typer.Exit(code=1) from None


def _write(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _forbidden_family(specs: list[str]) -> GraphFamily:
    family = GraphFamily()
    for text in specs:
        for spec in parse_spec_list(text):
            family.add(build(spec).graph)
    if len(family) == 0:
        raise LabError("no forbidden graphs given", code="family_empty", phase="cli")
    return family


def _solver_mode(text: str) -> SolverMode:
    try:
        return SolverMode(text)
    except ValueError:
        raise LabError(
            f"unknown solver mode {text!r}; use enum, bb or both",
            code="parameters_invalid",
            phase="cli",
            details={"mode": text},
        ) from None


def _emit_family(family: GraphFamily, fmt: OutputFormat, *, extra: dict[str, Any] | None = None) -> None:
    forms = [str(form) for form in family.canonical_strings()]
    if fmt in (OutputFormat.G6, OutputFormat.TSV):
        _write("".join(f"{form}\n" for form in forms))
    elif fmt is OutputFormat.JSON:
        payload = {"count": len(forms), "members": forms, **(extra or {})}
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        table = Table(title=f"{len(forms)} graphs")
        table.add_column("graph6", style="cyan")
        table.add_column("n", justify="right")
        table.add_column("edges", justify="right")
        for g, form in zip(family, forms, strict=True):
            table.add_row(form, str(g.n), str(g.num_edges))
        console.print(table)
        for key, value in sorted((extra or {}).items()):
            console.print(f"[bold]{key}:[/bold] {value}")


def _exit_for_report(report: VerificationReport) -> None:
    if report.aggregate is AggregateStatus.PASS:
        return
    code = EXIT_INCOMPLETE if report.aggregate is AggregateStatus.INCOMPLETE else 1
    raise typer.Exit(code=code)


def _emit_report(ctx: typer.Context, report: VerificationReport) -> None:
    _write(emit_report(report, _state(ctx).fmt).decode("utf-8"))
    _exit_for_report(report)


def _graph_summary(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": g.num_edges, "graph6": graph6_encode(g)}


# ============================================================================
# Global Options
# ============================================================================


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        rprint(f"[bold cyan]turanlab[/bold cyan] version [green]{__version__}[/green]")
        raise typer.Exit


@typed_callback(app)
def main(
    ctx: typer.Context,
    _version: bool | None = typer.Option(
        None,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
    debug: bool = typer.Option(
        False,
        "--debug",
        "-d",
        help="Enable debug logging",
    ),
    metrics_port: int | None = typer.Option(
        None,
        "--metrics-port",
        "-m",
        help="Port for the Prometheus metrics server (long runs)",
    ),
    fmt: OutputFormat = typer.Option(
        OutputFormat.JSON,
        "--format",
        "-f",
        help="Output format: json, tsv, human or g6 (graph lists only)",
    ),
    threads: int | None = typer.Option(
        None,
        "--threads",
        "-t",
        min=1,
        help="Worker processes for fan-out (default: SOLVER_WORKERS)",
    ),
    cache: Path | None = typer.Option(
        None,
        "--cache",
        help="JSON-lines result cache for ex (default: SOLVER_CACHE_PATH)",
    ),
    budget_nodes: int | None = typer.Option(
        None,
        "--budget-nodes",
        min=1,
        help="Search-node budget per solver run",
    ),
    budget_seconds: float | None = typer.Option(
        None,
        "--budget-seconds",
        min=0.001,
        help="Wall-clock budget per solver run",
    ),
) -> None:
    """turanlab - exact toolkit for Turán numbers of blow-ups."""
    if debug:
        settings.debug = True
        configure_logging("DEBUG")
        log.info("debug_mode_enabled")

    if metrics_port:
        try:
            start_http_server(metrics_port)
            log.info("metrics_server_started", port=metrics_port)
        except OSError:
            log.exception("metrics_server_failed", port=metrics_port)

    budget = SearchBudget.from_settings()
    updates: dict[str, Any] = {}
    if budget_nodes is not None:
        updates["max_nodes"] = budget_nodes
    if budget_seconds is not None:
        updates["max_seconds"] = budget_seconds
    if threads is not None:
        updates["workers"] = threads
    ctx.obj = CliState(
        fmt=fmt,
        workers=threads or settings.solver.workers,
        cache=cache or settings.solver.cache_path,
        budget=budget.model_copy(update=updates),
    )


# ============================================================================
# Graph commands
# ============================================================================


@typed_command(app)
def construct(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Construction spec, e.g. 'h:10,2,2' or 'blowup:cycle:5,3'"),
) -> None:
    """Build a construction and print its graph6 (g6) or a summary.

    Example:
        turanlab construct 'hstar:8'
        turanlab --format g6 construct 'join:(path:3)*empty:4'

    """
    fmt = _state(ctx).fmt
    with _lab_errors("construct"):
        construction = build(parse_spec(spec))
    g = construction.graph
    if fmt is OutputFormat.G6:
        _write(graph6_encode(g) + "\n")
    elif fmt is OutputFormat.TSV:
        _write("spec\tn\tedges\tgraph6\n" + f"{spec}\t{g.n}\t{g.num_edges}\t{graph6_encode(g)}\n")
    elif fmt is OutputFormat.JSON:
        payload = {"spec": str(parse_spec(spec)), **_graph_summary(g), "symmetry": [list(group) for group in construction.symmetry]}
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        table = Table(title=construction.label or spec)
        table.add_column("Field", style="cyan")
        table.add_column("Value")
        for key, value in _graph_summary(g).items():
            table.add_row(key, str(value))
        table.add_row("twin groups", str(len(construction.symmetry)))
        console.print(table)


@typed_command(app)
def split(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Base graph spec"),
) -> None:
    """Every graph obtained by splitting a vertex subset, up to isomorphism."""
    state = _state(ctx)
    with _lab_errors("split"):
        family = split_family(build(parse_spec(spec)).graph, workers=state.workers)
    _emit_family(family, state.fmt)


@typed_command(app)
def decomp(
    ctx: typer.Context,
    forbid: list[str] = typer.Option(
        [],
        "--forbid",
        help="Forbidden graph spec(s); repeat or separate with ';'",
    ),
    p: int | None = typer.Option(None, "--p", min=2, help="Threshold p (default: min chromatic number - 1)"),
    fast_blowup: str | None = typer.Option(
        None,
        "--fast-blowup",
        help="'<base spec>,<p>': split family of the base, valid for its (p+1)-blow-up",
    ),
    cross_check: bool = typer.Option(
        False,
        "--cross-check",
        help="With --fast-blowup: compare against the definition and print a report",
    ),
    exhaustive: bool = typer.Option(
        False,
        "--exhaustive",
        help="Also sweep every isolated-vertex-free edge subset of the forbidden graphs",
    ),
) -> None:
    """Decomposition family, by definition or through the blow-up fast path.

    Example:
        turanlab decomp --forbid 'blowup:cycle:3,3' --p 2
        turanlab decomp --fast-blowup 'path:4,3' --cross-check

    """
    state = _state(ctx)
    with _lab_errors("decomp"):
        if fast_blowup is not None:
            base_text, sep, p_text = fast_blowup.rpartition(",")
            if not sep or not p_text.strip().isdigit():
                raise LabError(
                    f"--fast-blowup expects '<spec>,<p>', got {fast_blowup!r}",
                    code="parameters_invalid",
                    phase="cli",
                )
            base = build(parse_spec(base_text)).graph
            blowup_p = int(p_text)
            if cross_check:
                report = verify_split_family(base, blowup_p, workers=state.workers)
            else:
                _emit_family(decomposition_family_blowup(base, blowup_p), state.fmt, extra={"p": blowup_p})
                return
        else:
            if cross_check:
                raise LabError("--cross-check needs --fast-blowup", code="parameters_invalid", phase="cli")
            result = decomposition_family_general(
                DecompositionQuery(
                    forbidden=_forbidden_family(forbid),
                    p=p,
                    exhaustive=exhaustive,
                    workers=state.workers,
                )
            )
            _emit_family(
                result.family,
                state.fmt,
                extra={
                    "p": result.p,
                    "authoritative": result.authoritative,
                    "undecided": [graph6_encode(g) for g in result.undecided],
                },
            )
            if not result.authoritative:
                err_console.print("[yellow]Some candidates ran out of budget; family is not authoritative[/yellow]")
                raise typer.Exit(code=EXIT_INCOMPLETE)
            return
    _emit_report(ctx, report)


@typed_command(app)
def contains(
    ctx: typer.Context,
    host: str = typer.Option(..., "--host", help="Host graph spec"),
    pattern: str = typer.Option(..., "--pattern", help="Pattern graph spec"),
    witness: bool = typer.Option(False, "--witness", help="Print the embedding as a JSON array"),
) -> None:
    """Is the pattern a (not necessarily induced) subgraph of the host?

    The witness lists, for each pattern vertex, the host vertex it maps to.
    """
    fmt = _state(ctx).fmt
    with _lab_errors("contains"):
        host_construction = build(parse_spec(host))
        found = contains_search(
            host_construction.graph,
            build(parse_spec(pattern)).graph,
            symmetry=host_construction.symmetry,
        )
    mapping = found.to_list() if found is not None else None

    if fmt is OutputFormat.JSON:
        payload: dict[str, Any] = {"contains": found is not None}
        if witness:
            payload["witness"] = mapping
        _write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt is OutputFormat.HUMAN:
        verdict = "[green]contained[/green]" if found is not None else "[yellow]absent[/yellow]"
        console.print(f"{pattern} in {host}: {verdict}")
        if witness and mapping is not None:
            console.print(json.dumps(mapping))
    else:
        _write(("present" if found is not None else "absent") + "\n")
        if witness and mapping is not None:
            _write(json.dumps(mapping) + "\n")


# ============================================================================
# Extremal numbers
# ============================================================================


def _emit_result(result: ExtremalResult, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.G6:
        _write("".join(f"{form}\n" for form in result.extremal))
    elif fmt is OutputFormat.TSV:
        lines = ["n\tmax_edges\tstatus\tmode\tgraph6"]
        lines.extend(
            f"{result.n}\t{result.max_edges}\t{result.status}\t{result.mode.value}\t{form}"
            for form in result.extremal
        )
        _write("\n".join(lines) + "\n")
    elif fmt is OutputFormat.JSON:
        _write(result.model_dump_json(indent=2) + "\n")
    else:
        status_style = "green" if result.complete else "yellow"
        console.print(
            Panel(
                f"[bold]ex({result.n}, F) = {result.max_edges}[/bold]\n"
                f"Status: [{status_style}]{result.status}[/{status_style}]\n"
                f"Mode: {result.mode.value}\n"
                f"Extremal classes: {len(result.extremal)}{' (overflow)' if result.witness_overflow else ''}\n"
                f"Nodes: {result.stats.nodes_expanded}",
                title="[bold cyan]Extremal number[/bold cyan]",
                border_style="blue",
            )
        )
        for form in result.extremal:
            console.print(f"  {form}")


@typed_command(app, name="ex")
def ex_command(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", min=0, help="Number of vertices"),
    forbid: list[str] = typer.Option(..., "--forbid", help="Forbidden graph spec(s); repeat or separate with ';'"),
    mode: str = typer.Option("enumerate", "--mode", help="enum, bb or both (long names enumerate, branch_bound)"),
    all_extremal: bool = typer.Option(False, "--all-extremal", help="Collect every extremal class"),
    budget_nodes: int | None = typer.Option(None, "--budget-nodes", min=1, help="Override the node budget"),
    budget_seconds: float | None = typer.Option(None, "--budget-seconds", min=0.001, help="Override the time budget"),
    threads: int | None = typer.Option(None, "--threads", min=1, help="Override the worker count"),
    cache: Path | None = typer.Option(None, "--cache", help="Override the result cache path"),
    fmt: OutputFormat | None = typer.Option(None, "--format", help="Override the output format"),
) -> None:
    """Exact ex(n, F) with its extremal graphs; exit 2 when the budget ran out.

    Example:
        turanlab ex --n 7 --forbid 'complete:4' --mode both
        turanlab ex --n 6 --forbid 'cycle:4' --mode bb
        turanlab ex --n 8 --forbid 'star:3;matching:3' --all-extremal --format g6

    """
    state = _state(ctx)
    updates: dict[str, Any] = {}
    if budget_nodes is not None:
        updates["max_nodes"] = budget_nodes
    if budget_seconds is not None:
        updates["max_seconds"] = budget_seconds
    if threads is not None:
        updates["workers"] = threads
    budget = state.budget.model_copy(update=updates)

    with _lab_errors("ex"):
        result = solve_ex(
            n,
            _forbidden_family(forbid),
            mode=_solver_mode(mode),
            budget=budget,
            all_extremal=all_extremal,
            cache=cache or state.cache,
        )
    _emit_result(result, fmt or state.fmt)
    if not result.complete:
        err_console.print("[yellow]Budget exhausted; max_edges is a lower bound[/yellow]")
        raise typer.Exit(code=EXIT_INCOMPLETE)


# ============================================================================
# Trees and predictions
# ============================================================================


@typed_command(app, name="classify-tree")
def classify_tree_command(
    ctx: typer.Context,
    spec: str = typer.Argument(..., help="Tree spec, e.g. 'path:5' or 'subdivided_star:3'"),
    n: int | None = typer.Option(None, "--n", help="Also name the predicted extremal graph at this n"),
    p: int = typer.Option(3, "--p", min=3, help="Clique parameter for the predicted graph"),
) -> None:
    """Classify a tree by its smaller colour class."""
    fmt = _state(ctx).fmt
    with _lab_errors("classify-tree"):
        result = classify_tree(build(parse_spec(spec)).graph)
    predicted = result.predicted(n, p) if n is not None else None
    payload: dict[str, Any] = {
        "tree": graph6_encode(result.tree),
        "verdict": result.verdict.value,
        "a": result.a,
        "b": result.b,
        "a_class": list(result.a_class),
        "b_class": list(result.b_class),
        "leaf_in_a": result.leaf_in_a,
        "alpha_equals_b": result.alpha_equals_b,
        "min_degree_a_is_two": result.min_degree_a_is_two,
        "overlap": result.overlap,
    }
    if n is not None:
        payload["predicted"] = str(predicted) if predicted is not None else None

    if fmt is OutputFormat.HUMAN:
        table = Table(title=f"Tree {spec}")
        table.add_column("Field", style="cyan")
        table.add_column("Value")
        for key, value in payload.items():
            table.add_row(key, str(value))
        console.print(table)
    else:
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


@typed_command(app)
def predict(
    ctx: typer.Context,
    kind: BlowupKind = typer.Option(..., "--kind", help="star, path, cycle or tree"),
    n: int = typer.Option(..., "--n", min=1, help="Number of vertices"),
    p: int = typer.Option(..., "--p", min=2, help="The blow-up uses cliques of size p + 1"),
    k: int | None = typer.Option(None, "--k", help="Star size, path edge count or cycle length"),
    tree: str | None = typer.Option(None, "--tree", help="Tree spec (kind=tree)"),
) -> None:
    """Predicted extremal number, annotated with its large-n threshold."""
    fmt = _state(ctx).fmt
    with _lab_errors("predict"):
        tree_graph = build(parse_spec(tree)).graph if tree is not None else None
        prediction = predicted_value(kind, n, p, k=k, tree=tree_graph)
    payload = {
        "kind": prediction.kind.value,
        "n": prediction.n,
        "p": prediction.p,
        "value": prediction.value,
        "construction": prediction.construction,
        "threshold": prediction.threshold,
        "threshold_met": prediction.threshold_met,
        "annotation": prediction.annotation(),
    }
    if fmt is OutputFormat.HUMAN:
        console.print(
            Panel(
                f"[bold]{prediction.value}[/bold] edges via {prediction.construction}\n{prediction.annotation()}",
                title=f"[bold cyan]{prediction.kind.value} blow-up[/bold cyan]",
                border_style="blue",
            )
        )
    else:
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# ============================================================================
# Verification recipes
# ============================================================================


@typed_command(verify_app, name="figures")
def verify_figures(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", help="Cycle length, 3..8"),
) -> None:
    """Membership and containment claims about the triangle blow-up of C_k."""
    with _lab_errors("verify figures"):
        report = verify_figure_claims(k, workers=_state(ctx).workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="paths")
def verify_paths(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", min=1, help="Number of path edges"),
) -> None:
    """Two hosts containing the triangle blow-up of a path with k edges."""
    with _lab_errors("verify paths"):
        report = verify_path_blowup_claims(k, workers=_state(ctx).workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="freeness")
def verify_freeness(
    ctx: typer.Context,
    construction: list[str] = typer.Option(
        ..., "--construction", help="Construction template with an {n} placeholder, e.g. 'hstar:{n}'"
    ),
    forbid: list[str] = typer.Option(..., "--forbid", help="Forbidden graph spec(s); repeat or separate with ';'"),
    n_range: str = typer.Option(..., "--n-range", help="Inclusive range A..B"),
) -> None:
    """Check that constructions avoid a forbidden family across a range of n.

    Example:
        turanlab verify freeness --construction 'hstar:{n}' --construction 'h:{n},2,2' \\
            --forbid 'blowup:cycle:3,3' --n-range 6..40

    """
    with _lab_errors("verify freeness"):
        forbidden = [str(spec) for text in forbid for spec in parse_spec_list(text)]
        report = verify_freeness_sweep(construction, forbidden, parse_range(n_range), workers=_state(ctx).workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="tfree")
def verify_tfree_command(
    ctx: typer.Context,
    tree: str = typer.Option(..., "--tree", help="Case-I tree spec"),
    m: int = typer.Option(..., "--m", min=1, help="Size of the independent side"),
) -> None:
    """K_(a-1) joined to I_m avoids every vertex split of a case-I tree."""
    with _lab_errors("verify tfree"):
        report = verify_tfree(build(parse_spec(tree)).graph, m, workers=_state(ctx).workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="split-family")
def verify_split_family_command(
    ctx: typer.Context,
    h: str = typer.Option(..., "--h", help="Base graph spec"),
    p: int = typer.Option(..., "--p", min=2, help="Blow-up with cliques of size p + 1"),
) -> None:
    """Decomposition family of the blow-up, by definition, against the split family."""
    with _lab_errors("verify split-family"):
        report = verify_split_family(build(parse_spec(h)).graph, p, workers=_state(ctx).workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="stars")
def verify_stars(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", min=1, help="Star size"),
    p: int = typer.Option(..., "--p", min=2, help="Blow-up with cliques of size p + 1"),
    m_range: str = typer.Option(..., "--m-range", help="Inclusive range A..B of orders"),
) -> None:
    """ex(m, {S_k, M_k}) equals the additive constant, by both solvers."""
    state = _state(ctx)
    with _lab_errors("verify stars"):
        report = verify_star_constant(k, p, parse_range(m_range), budget=state.budget, workers=state.workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="lemma2")
def verify_lemma2_command(
    ctx: typer.Context,
    h: str = typer.Argument(..., help="Base graph spec"),
    p: int = typer.Option(..., "--p", min=2, help="Blow-up with cliques of size p + 1"),
) -> None:
    """Same check as ``verify split-family``, with the base graph as an argument.

    Example:
        turanlab verify lemma2 'cycle:4' --p 3

    """
    with _lab_errors("verify lemma2"):
        report = verify_split_family(build(parse_spec(h)).graph, p, workers=_state(ctx).workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="theorem1")
def verify_theorem1_command(
    ctx: typer.Context,
    k: int = typer.Option(..., "--k", min=1, help="Star size"),
    p: int = typer.Option(..., "--p", min=2, help="Blow-up with cliques of size p + 1"),
    m_range: str = typer.Option(..., "--m-range", help="Inclusive range A..B of orders"),
) -> None:
    """Same check as ``verify stars``: the star-blow-up additive constant."""
    state = _state(ctx)
    with _lab_errors("verify theorem1"):
        report = verify_star_constant(k, p, parse_range(m_range), budget=state.budget, workers=state.workers)
    _emit_report(ctx, report)


@typed_command(verify_app, name="edge-law")
def verify_edge_law_command(
    ctx: typer.Context,
    n_range: str = typer.Option("6..40", "--n-range", help="Inclusive range A..B"),
) -> None:
    """e(H*(n)) - e(H(n,2,2)) is 1 exactly when 4 divides n."""
    with _lab_errors("verify edge-law"):
        report = verify_edge_law(parse_range(n_range))
    _emit_report(ctx, report)


# ============================================================================
# Configuration and version
# ============================================================================


@typed_command(app)
def config() -> None:
    """Show the effective configuration.

    Example:
        SOLVER_MAX_NODES=1000 turanlab config

    """
    log.info("showing_config")
    config_text = f"""
[bold]Application[/bold]
  Name: {settings.app_name}
  Version: {settings.app_version}
  Environment: {settings.environment.value}
  Debug: {settings.debug}

[bold]Graph[/bold]
  Max vertices: {settings.graph.max_vertices}
  Invariant cap: {settings.graph.invariant_cap}
  Split cap: {settings.graph.split_cap}

[bold]Containment[/bold]
  Max nodes: {settings.containment.max_nodes}
  Query cache: {settings.containment.query_cache_enabled} (size {settings.containment.query_cache_size})

[bold]Decomposition[/bold]
  Candidate vertex cap: {settings.decomposition.candidate_vertex_cap}
  Exhaustive edge cap: {settings.decomposition.exhaustive_edge_cap}

[bold]Solver[/bold]
  Max nodes: {settings.solver.max_nodes}
  Max seconds: {settings.solver.max_seconds}
  Workers: {settings.solver.workers}
  Witness cap: {settings.solver.witness_cap}
  Memo rows: {settings.solver.memo_rows}
  Cache path: {settings.solver.cache_path}

[bold]Observability[/bold]
  Log Level: {settings.observability.log_level.value}
  Log Format: {settings.observability.log_format}
  Prometheus: {settings.observability.prometheus_enabled}
"""
    console.print(Panel(config_text, title="[bold cyan]turanlab Configuration[/bold cyan]", border_style="blue"))


@typed_command(app)
def version() -> None:
    """Show turanlab version information."""
    console.print(f"[bold cyan]turanlab[/bold cyan] version [green]{__version__}[/green]")
    console.print(f"Solver: [yellow]{SOLVER_VERSION}[/yellow]")
    console.print(f"Python: [blue]{sys.version.split()[0]}[/blue]")


# ============================================================================
# Entry Point
# ============================================================================


def main_cli() -> None:
    """Main CLI entry point."""
    try:
        app()
    except typer.Exit:
        raise
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Interrupted by user[/yellow]")
        log.info("cli_interrupted")
        raise SystemExit(130) from None
    except Exception as e:
        err_console.print(f"\n[bold red]Error:[/bold red] {e}")
        log.error("cli_error", error=str(e))
        raise SystemExit(1) from None


if __name__ == "__main__":
    main_cli()
