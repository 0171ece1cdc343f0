"""Command-line interface for sighom."""

import functools
import logging
import sys
from collections.abc import Callable

import click
from rich.console import Console

from src.classify.classifier import ClassificationError
from src.classify.classifier import classify as classify_target
from src.construct.errors import ConstructionError
from src.construct.gadgets import (
    GadgetFamily,
    build_retraction_instance,
    build_retraction_target,
    gadget_path,
)
from src.construct.indicator import (
    Indicator,
    alternating_square_indicator,
    digon_indicator,
    indicator_result,
    symmetrize,
)
from src.construct.switching_graph import switching_graph
from src.construct.zaslavsky import zaslavsky_target
from src.cores.cores import CoreError, ec_core, s_core
from src.oracle.brute import (
    SizeBound,
    bf_colouring,
    bf_ec_hom,
    bf_equivalent,
    bf_plain_hom,
    bf_s_hom,
    within_bounds,
)
from src.sgraph.bipartite import NonBipartite
from src.sgraph.graph import SignedGraph, SignedGraphError
from src.sgraph.sgf import load, serialize, to_dot
from src.solve.colouring import colour as colour_graph
from src.solve.homs import ec_hom, ec_retract, hom, s_hom
from src.switching.equivalence import equivalent, is_balanced

console = Console(markup=False, highlight=False, soft_wrap=True)
err_console = Console(stderr=True, markup=False, highlight=False, soft_wrap=True)

logger = logging.getLogger(__name__)

# Configure logging
logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2
INPUT_ERRORS = (
    SignedGraphError,
    ConstructionError,
    CoreError,
    ClassificationError,
    NonBipartite,
    SizeBound,
    ValueError,
    OSError,
)

GRAPH_FILE = click.Path(exists=True, dir_okay=False)
FORMAT_OPTION = click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format",
)
WITNESS_OPTION = click.option("--witness", is_flag=True, help="Print the witness")
ORACLE_OPTION = click.option(
    "--oracle", is_flag=True, help="Cross-check the answer by brute force"
)
DOT_OPTION = click.option("--dot", is_flag=True, help="Print Graphviz DOT instead of SGF")


def setup_logging(verbose: bool):
    """Configure logging based on verbosity."""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.getLogger("src").setLevel(level)


def handle_errors(func: Callable) -> Callable:
    """Turn input errors into a one-line diagnostic and exit code 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except INPUT_ERRORS as exc:
            if ctx.find_root().obj.get("verbose"):
                logger.exception("Command failed")
            err_console.print(f"error: {exc}")
            ctx.exit(EXIT_ERROR)

    return wrapper


def emit_graph(g: SignedGraph, dot: bool, comments: tuple[str, ...] = ()) -> None:
    if dot:
        console.print(to_dot(g), end="")
    else:
        console.print(serialize(g, comments), end="")


def oracle_verdict(ctx: click.Context, answer: bool, truth: bool | None) -> None:
    """Report a brute-force cross-check; a disagreement is an error."""
    if truth is None:
        return
    if truth != answer:
        err_console.print(f"error: oracle disagrees (solver {answer}, oracle {truth})")
        ctx.exit(EXIT_ERROR)
    console.print("oracle: agree")


def merged_flags(
    ctx: click.Context, witness: bool = False, oracle: bool = False, output_format: str = "text"
) -> tuple[bool, bool, str]:
    """Command flags combined with the ones given before the subcommand."""
    root = ctx.find_root().obj or {}
    if output_format == "text":
        output_format = root.get("format", "text")
    witness = witness or root.get("witness", False)
    oracle = oracle or root.get("oracle", False)
    return witness, oracle, output_format


# -----------------------------------------------------------------------------
# Commands
# -----------------------------------------------------------------------------


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Enable verbose logging")
@click.option("--oracle", "oracle", is_flag=True, help="Cross-check every answer by brute force")
@click.option("--witness", "witness", is_flag=True, help="Print witnesses")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    help="Output format",
)
@click.pass_context
def main(ctx, verbose, oracle, witness, output_format):
    """sighom - signed graph homomorphisms, cores and complexity."""
    ctx.ensure_object(dict)
    ctx.obj.update(verbose=verbose, oracle=oracle, witness=witness, format=output_format)
    setup_logging(verbose)


@main.command()
@click.argument("first", type=GRAPH_FILE)
@click.argument("second", type=GRAPH_FILE)
@ORACLE_OPTION
@FORMAT_OPTION
@click.pass_context
@handle_errors
def equiv(ctx, first: str, second: str, oracle: bool, output_format: str):
    """Decide switching equivalence of two signatures on the same graph."""
    _, oracle, output_format = merged_flags(ctx, oracle=oracle, output_format=output_format)
    g, other = load(first), load(second)
    cert = equivalent(g, other)
    if output_format == "json":
        console.print_json(cert.model_dump_json())
    else:
        console.print(cert.to_text())
    if oracle:
        try:
            oracle_verdict(ctx, cert.is_cut, bf_equivalent(g, other))
        except SizeBound as exc:
            logger.warning("Oracle cross-check skipped: %s", exc)
    ctx.exit(EXIT_YES if cert.is_cut else EXIT_NO)


@main.command()
@click.argument("graph", type=GRAPH_FILE)
@FORMAT_OPTION
@click.pass_context
@handle_errors
def balance(ctx, graph: str, output_format: str):
    """Test balance; prints the switching to all-positive or a negative cycle."""
    _, _, output_format = merged_flags(ctx, output_format=output_format)
    balanced, cert = is_balanced(load(graph))
    if output_format == "json":
        console.print_json(cert.model_dump_json())
    else:
        console.print("balanced" if balanced else "unbalanced")
        console.print(cert.to_text())
    ctx.exit(EXIT_YES if balanced else EXIT_NO)


@main.command()
@click.argument("source", type=GRAPH_FILE)
@click.argument("target", type=GRAPH_FILE)
@click.option(
    "--mode", type=click.Choice(["s", "ec", "plain"]), default="s", help="Homomorphism kind"
)
@WITNESS_OPTION
@ORACLE_OPTION
@FORMAT_OPTION
@click.pass_context
@handle_errors
def solve(
    ctx, source: str, target: str, mode: str, witness: bool, oracle: bool, output_format: str
):
    """Search for a homomorphism SOURCE -> TARGET."""
    witness, oracle, output_format = merged_flags(ctx, witness, oracle, output_format)
    g, h = load(source), load(target)
    solver = {"s": s_hom, "ec": ec_hom, "plain": hom}[mode]
    found = solver(g, h)
    if output_format == "json":
        console.print_json(found.model_dump_json() if found else "null")
    else:
        console.print("yes" if found else "no")
        if witness and found:
            for line in found.to_lines():
                console.print(line)
    if oracle and within_bounds(g, h):
        brute = {
            "s": lambda: bf_s_hom(g, h),
            "ec": lambda: bf_ec_hom(g, h) is not None,
            "plain": lambda: bf_plain_hom(g, h) is not None,
        }[mode]
        oracle_verdict(ctx, found is not None, brute())
    ctx.exit(EXIT_YES if found else EXIT_NO)


@main.command()
@click.argument("source", type=GRAPH_FILE)
@click.argument("subgraph", type=GRAPH_FILE)
@WITNESS_OPTION
@ORACLE_OPTION
@FORMAT_OPTION
@click.pass_context
@handle_errors
def retract(
    ctx, source: str, subgraph: str, witness: bool, oracle: bool, output_format: str
):
    """Search for an ec-retraction of SOURCE onto SUBGRAPH."""
    witness, oracle, output_format = merged_flags(ctx, witness, oracle, output_format)
    g, h = load(source), load(subgraph)
    found = ec_retract(g, h)
    if output_format == "json":
        console.print_json(found.model_dump_json() if found else "null")
    else:
        console.print("yes" if found else "no")
        if witness and found:
            for line in found.to_lines():
                console.print(line)
    if oracle and within_bounds(g, h):
        fixed = {v: v for v in h.vertices}
        oracle_verdict(ctx, found is not None, bf_ec_hom(g, h, fixed) is not None)
    ctx.exit(EXIT_YES if found else EXIT_NO)


@main.command()
@click.argument("graph", type=GRAPH_FILE)
@click.option("--mode", type=click.Choice(["s", "ec"]), default="s", help="Core kind")
@WITNESS_OPTION
@DOT_OPTION
@FORMAT_OPTION
@click.pass_context
@handle_errors
def core(ctx, graph: str, mode: str, witness: bool, dot: bool, output_format: str):
    """Compute the s-core or ec-core."""
    witness, _, output_format = merged_flags(ctx, witness, output_format=output_format)
    g = load(graph)
    result = s_core(g) if mode == "s" else ec_core(g)
    if output_format == "json":
        payload = {
            "core": serialize(result.core),
            "retraction": result.retraction.model_dump(mode="json"),
            "core_switch": list(result.core_switch),
        }
        console.print_json(data=payload)
        ctx.exit(EXIT_YES)

    comments = ()
    if witness:
        comments = tuple(result.retraction.to_lines())
        if result.core_switch:
            comments += (" ".join(["core-switch", *result.core_switch]),)
    emit_graph(result.core, dot, comments)
    ctx.exit(EXIT_YES)


@main.command()
@click.argument("target", type=GRAPH_FILE)
@WITNESS_OPTION
@FORMAT_OPTION
@click.pass_context
@handle_errors
def classify(ctx, target: str, witness: bool, output_format: str):
    """Classify the complexity of s-homomorphism to TARGET."""
    witness, _, output_format = merged_flags(ctx, witness, output_format=output_format)
    result = classify_target(load(target))
    if output_format == "json":
        console.print_json(result.model_dump_json())
        ctx.exit(EXIT_YES)

    console.print(result.label)
    if witness:
        console.print(serialize(result.s_core, ("s-core",)), end="")
        w = result.witness
        if w is not None:
            console.print(" ".join(["cycle", *w.cycle]))
            if w.cycle_sign is not None:
                console.print(f"sign {w.cycle_sign.value}")
            if w.switch_set:
                console.print(" ".join(["switch", *w.switch_set]))
            if w.source_walk:
                console.print(" ".join(["walk", *w.source_walk]))
    ctx.exit(EXIT_YES)


@main.command()
@click.argument("graph", type=GRAPH_FILE)
@click.option("--k", "k", type=click.IntRange(min=1), required=True, help="Largest colour")
@click.option("--zero-free", is_flag=True, help="Do not use colour 0")
@ORACLE_OPTION
@FORMAT_OPTION
@click.pass_context
@handle_errors
def colour(ctx, graph: str, k: int, zero_free: bool, oracle: bool, output_format: str):
    """Find a proper Zaslavsky k-colouring."""
    _, oracle, output_format = merged_flags(ctx, oracle=oracle, output_format=output_format)
    g = load(graph)
    found = colour_graph(g, k, zero_free)
    if output_format == "json":
        console.print_json(found.model_dump_json() if found else "null")
    else:
        console.print("yes" if found else "no")
        if found:
            for line in found.to_lines():
                console.print(line)
    if oracle and within_bounds(g):
        oracle_verdict(ctx, found is not None, bf_colouring(g, k, zero_free) is not None)
    ctx.exit(EXIT_YES if found else EXIT_NO)


# -----------------------------------------------------------------------------
# Constructions
# -----------------------------------------------------------------------------


@main.group()
def build():
    """Build switching graphs, colouring targets, indicators and gadgets."""


@build.command()
@click.argument("graph", type=GRAPH_FILE)
@DOT_OPTION
@click.pass_context
@handle_errors
def perm(ctx, graph: str, dot: bool):
    """The switching graph P(GRAPH)."""
    emit_graph(switching_graph(load(graph)).graph, dot)
    ctx.exit(EXIT_YES)


@build.command()
@click.option("--k", "k", type=click.IntRange(min=1), required=True, help="Largest colour")
@click.option("--zero-free", is_flag=True, help="Delete vertex 0")
@DOT_OPTION
@click.pass_context
@handle_errors
def zk(ctx, k: int, zero_free: bool, dot: bool):
    """The Zaslavsky colouring target."""
    emit_graph(zaslavsky_target(k, zero_free), dot)
    ctx.exit(EXIT_YES)


@build.command()
@click.argument("target", type=GRAPH_FILE)
@click.option(
    "--builtin",
    type=click.Choice(["square", "digon"]),
    default="square",
    help="Built-in indicator (ignored with --indicator)",
)
@click.option("--indicator", "indicator_file", type=GRAPH_FILE, help="Indicator graph file")
@click.option("--i", "i", default="i", help="First distinguished vertex")
@click.option("--j", "j", default="j", help="Second distinguished vertex")
@click.option(
    "--symmetrize", "symmetric", is_flag=True, help="Glue two copies of the indicator first"
)
@DOT_OPTION
@click.pass_context
@handle_errors
def indicator(
    ctx,
    target: str,
    builtin: str,
    indicator_file: str | None,
    i: str,
    j: str,
    symmetric: bool,
    dot: bool,
):
    """Apply an indicator to TARGET."""
    if indicator_file:
        graph = load(indicator_file)
        ind = symmetrize(graph, i, j) if symmetric else Indicator(graph, i, j)
    else:
        ind = alternating_square_indicator() if builtin == "square" else digon_indicator()
    emit_graph(indicator_result(ind, load(target)), dot)
    ctx.exit(EXIT_YES)


@build.command("gadget-path")
@click.option(
    "--family", type=click.Choice([f.value for f in GadgetFamily]), required=True
)
@click.option("--length", type=int, required=True, help="l (P family) or k (Q family)")
@click.option("--index", type=int, default=None, help="Index for P_i / Q_j")
@DOT_OPTION
@click.pass_context
@handle_errors
def gadget_path_cmd(ctx, family: str, length: int, index: int | None, dot: bool):
    """A gadget path; its run word and distinguished vertex are written as comments."""
    path = gadget_path(GadgetFamily(family), length, index)
    comments = (f"word {path.word}", f"endpoint {path.endpoint} = {path.label}")
    emit_graph(path.graph, dot, comments)
    ctx.exit(EXIT_YES)


def _side(side_a: str | None) -> list[str] | None:
    return side_a.split(",") if side_a else None


@build.command("gadget-target")
@click.argument("graph", type=GRAPH_FILE)
@click.option("--side-a", default=None, help="Comma-separated side A of the bipartition")
@DOT_OPTION
@click.pass_context
@handle_errors
def gadget_target(ctx, graph: str, side_a: str | None, dot: bool):
    """The signed retraction target built from a bipartite GRAPH."""
    target = build_retraction_target(load(graph), _side(side_a))
    comments = (f"l {target.ell}", f"k {target.k}")
    emit_graph(target.graph, dot, comments)
    ctx.exit(EXIT_YES)


@build.command("gadget-instance")
@click.argument("graph", type=GRAPH_FILE)
@click.argument("subgraph", type=GRAPH_FILE)
@click.option("--side-a", default=None, help="Comma-separated side A of the subgraph")
@DOT_OPTION
@click.pass_context
@handle_errors
def gadget_instance(ctx, graph: str, subgraph: str, side_a: str | None, dot: bool):
    """The signed retraction instance built from GRAPH containing SUBGRAPH."""
    instance = build_retraction_instance(load(graph), load(subgraph), _side(side_a))
    emit_graph(instance.graph, dot)
    ctx.exit(EXIT_YES)


def run(argv: list[str] | None = None) -> int:
    """Entry point: run the CLI and return its exit code."""
    try:
        code = main.main(args=argv, prog_name="sighom", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except click.exceptions.Abort:
        err_console.print("aborted")
        return EXIT_ERROR
    return code if isinstance(code, int) else EXIT_YES


if __name__ == "__main__":
    sys.exit(run())
