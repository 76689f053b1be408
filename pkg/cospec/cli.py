"""
Command-line interface: ``cospec <command> ...``.

Graph arguments are graph6 lines or builder expressions such as ``P2(1,6)``
or ``A(3)+2K1``; ``-`` reads graph6 lines from standard input.

Exit codes: 0 success (DS for ``ds``), 10 NOT_DS, 2 usage error, 3 parse
error, 4 size-limit error, 1 any other failure.
"""

import argparse
import logging
import sys
import time
from typing import IO, Any, Dict, List, Optional, Sequence

from cospec import __version__
from cospec.charpoly import METHODS, charpoly
from cospec.context import search_settings
from cospec.exceptions import (
    ConfigurationError,
    CospecException,
    ErrorContext,
    GraphError,
    SerializationError,
    SizeLimitError,
)
from cospec.expressions import parse_graph_expression, parse_graph_input
from cospec.graph import Graph, gen_A_construction, gen_B_construction, gen_double_star, gen_R
from cospec.iso import forbidden_report
from cospec.polynomial import numeric_roots
from cospec.search import (
    EnumSpec,
    Verdict,
    abcd_decompose,
    classify_mate,
    collect_graphs,
    cospectral_mates,
    double_star_survey,
    ds_verdict,
    gprime_charpoly_formula,
    star_mate,
)
from cospec.serialization import (
    GRAPH6_MAX_VERTICES,
    make_document,
    read_graph6_lines,
    render_text,
    report_to_json,
    save_report,
    write_graph6,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_LIMIT = 4
EXIT_NOT_DS = 10

# family -> (parameter count, builder)
CONSTRUCTIONS: Dict[str, Any] = {
    "double-star": (2, gen_double_star),
    "A": (1, gen_A_construction),
    "B": (1, gen_B_construction),
    "R": (0, gen_R),
    "star-mate": (2, star_mate),
}


class UsageError(Exception):
    """Bad command-line arguments detected after argparse accepted them."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cospec",
        description="Exact spectra, cospectral mates and DS verdicts for small graphs.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    parser.add_argument("--report", choices=("text", "json"), default="text", help="output format")
    parser.add_argument("--output", help="also write the JSON report to this file")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for searches")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("charpoly", help="characteristic polynomial")
    sub.add_argument("graph", help="graph6 line, builder expression, or - for stdin")
    sub.add_argument("--method", choices=METHODS, default="exact")
    sub.add_argument("--roots", action="store_true", help="also print numeric eigenvalues")

    for name, text in (
        ("mates", "all cospectral mates"),
        ("ds", "is the graph determined by its spectrum"),
    ):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("graph", help="graph6 line, builder expression, or - for stdin")

    sub = commands.add_parser("construct", help="print a named construction as graph6")
    sub.add_argument("family", choices=sorted(CONSTRUCTIONS) + ["expr"])
    sub.add_argument("params", nargs="*", help="integer parameters, or one expression for 'expr'")

    sub = commands.add_parser("forbidden", help="induced forbidden-subgraph report")
    sub.add_argument("graph")

    sub = commands.add_parser("decompose", help="A/B/C/D partition and classification")
    sub.add_argument("graph")

    sub = commands.add_parser("enumerate", help="one graph6 line per isomorphism class")
    sub.add_argument("n", type=int)
    sub.add_argument("m", type=int)
    sub.add_argument("--bipartite", action="store_true")
    sub.add_argument("--connected", action="store_true")
    sub.add_argument("--max-degree", type=int, default=None)

    sub = commands.add_parser("survey", help="DS verdicts for every P2(a,b) up to an order")
    sub.add_argument("max_order", type=int)
    return parser


def _load_graphs(text: str, stdin: IO[str]) -> List[Graph]:
    if text == "-":
        with ErrorContext("standard input"):
            graphs = read_graph6_lines(stdin)
        if not graphs:
            raise UsageError("no graph6 lines on standard input")
        return graphs
    return [parse_graph_input(text)]


def _one_or_many(items: List[Any]) -> Any:
    return items[0] if len(items) == 1 else items


def _cmd_charpoly(args: argparse.Namespace, graphs: List[Graph], out: IO[str]) -> Any:
    results = []
    for g in graphs:
        poly = charpoly(g, args.method)
        entry: Dict[str, Any] = {"charpoly": str(poly)}
        if g.n <= GRAPH6_MAX_VERTICES:
            entry = {"graph6": write_graph6(g), **entry}
        if args.roots:
            entry["roots"] = [round(r, 9) for r in numeric_roots(poly)] if g.n else []
        results.append(entry)
        if args.report == "text":
            out.write(f"{poly}\n")
            if args.roots:
                out.write("roots: " + " ".join(f"{r:.9f}" for r in entry["roots"]) + "\n")
    return _one_or_many(results)


def _cmd_decompose(g: Graph) -> Dict[str, Any]:
    partition = abcd_decompose(g)
    isolated = g.n - sum(partition.sizes)
    formula = gprime_charpoly_formula(*partition.sizes).shift(isolated)
    return {
        "partition": partition,
        "classification": classify_mate(g, g.num_edges - 2),
        "charpoly_matches_formula": formula == charpoly(g),
    }


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
    stdin: Optional[IO[str]] = None,
) -> int:
    """
    Run one command and return its exit code.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv[1:]``
        stdout, stderr, stdin: Streams, defaulting to the process streams

    Returns:
        Exit code (see module docstring)
    """
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    source = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger = logging.getLogger("cospec")
    package_logger.addHandler(handler)
    previous_level = package_logger.level
    package_logger.setLevel([logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)])
    try:
        overrides: Dict[str, Any] = {"progress": args.progress}
        if args.workers is not None:
            overrides["workers"] = args.workers
        with search_settings(**overrides):
            return _dispatch(args, out, source)
    except UsageError as exc:
        err.write(f"cospec: usage error: {exc}\n")
        return EXIT_USAGE
    except SerializationError as exc:
        err.write(f"cospec: {exc}\n")
        return EXIT_PARSE
    except SizeLimitError as exc:
        err.write(f"cospec: {exc}\n")
        return EXIT_LIMIT
    except (GraphError, ConfigurationError) as exc:
        err.write(f"cospec: {exc}\n")
        return EXIT_USAGE
    except CospecException as exc:
        err.write(f"cospec: {exc}\n")
        return EXIT_FAILURE
    finally:
        package_logger.removeHandler(handler)
        package_logger.setLevel(previous_level)


def _dispatch(args: argparse.Namespace, out: IO[str], stdin: IO[str]) -> int:
    started = time.perf_counter()
    command = args.command
    code = EXIT_OK
    exhaustive: Optional[bool] = None
    inputs: Dict[str, Any] = {}
    emit_document = args.report == "json"

    if command == "construct":
        g = _construct(args.family, args.params)
        out.write(write_graph6(g) + "\n")
        inputs = {"family": args.family, "params": args.params}
        results: Any = {"graph": g}
        emit_document = False
    elif command == "enumerate":
        spec = EnumSpec(
            args.n,
            args.m,
            bipartite_only=args.bipartite,
            connected_only=args.connected,
            max_degree=args.max_degree,
        )
        found = collect_graphs(spec)
        inputs = {"n": args.n, "m": args.m}
        results = {"count": len(found), "graphs": [write_graph6(g) for _, g in found]}
        exhaustive = True
        if not emit_document:
            for line in results["graphs"]:
                out.write(line + "\n")
    elif command == "survey":
        rows = double_star_survey(args.max_order)
        inputs = {"max_order": args.max_order}
        results = rows
        exhaustive = True
        if not emit_document:
            for row in rows:
                out.write(f"P2({row.a},{row.b}) {row.verdict.value} mates={row.mates}\n")
    else:
        graphs = _load_graphs(args.graph, stdin)
        inputs = {"graph": args.graph}
        if command == "charpoly":
            inputs["method"] = args.method
            results = _cmd_charpoly(args, graphs, out)
        elif command == "mates":
            results = _one_or_many([cospectral_mates(g) for g in graphs])
            exhaustive = True
        elif command == "ds":
            verdicts = [ds_verdict(g) for g in graphs]
            results = _one_or_many(verdicts)
            exhaustive = True
            if any(v.verdict is Verdict.NOT_DS for v in verdicts):
                code = EXIT_NOT_DS
        elif command == "forbidden":
            results = _one_or_many([forbidden_report(g) for g in graphs])
        else:
            results = _one_or_many([_cmd_decompose(g) for g in graphs])

    document = make_document(command, inputs, results, exhaustive, time.perf_counter() - started)
    if emit_document:
        out.write(report_to_json(document) + "\n")
    elif command in ("mates", "ds", "forbidden", "decompose"):
        out.write(render_text(document) + "\n")
    if args.output:
        save_report(document, args.output)
    return code


def _construct(family: str, params: List[str]) -> Graph:
    if family == "expr":
        if len(params) != 1:
            raise UsageError("'construct expr' takes exactly one expression")
        return parse_graph_expression(params[0])
    arity, builder = CONSTRUCTIONS[family]
    if len(params) != arity:
        raise UsageError(f"'construct {family}' takes {arity} integer parameter(s)")
    try:
        values = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"parameters of '{family}' must be integers") from None
    return builder(*values)


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Console-script entry point."""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
