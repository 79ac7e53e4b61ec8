#!/usr/bin/env python3
"""ramseytype CLI - Command-line interface for the Ramsey-type toolkit.

Usage:
    ramseytype gen <name> | --family <thm>:<n>     Emit graphs as graph6
    ramseytype analyze [--param all|deg|alpha|c|adh] [--dot]
    ramseytype free --family <thm>:<n>             Freeness verdicts
    ramseytype le --left <family> --right <family> Decide the family order
    ramseytype witness --theorem <id> --n <k>      Extract family members
    ramseytype scan --checks <ids> (--enumerate <n> | --corpus <path>)
    ramseytype extremal --family <thm>:<n> --param <kind> --max-n <k>
    ramseytype ramsey certify-small | estimate-n0 --n <k> --max-order <m>
    ramseytype necessity --theorem <id> (--c <c> | --c1 <a> --c2 <b>)

Graphs are read from --input (default stdin) and written to stdout;
diagnostics and progress go to stderr. Exit codes: 0 success, 1 a check
failed, 2 usage error, 3 input, codec, configuration or search-limit error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Iterator, List, Optional, TextIO

from ramseytype import formatting
from ramseytype.codec import CorpusStream, encode_graph6, export_dot
from ramseytype.config import ConfigLoader, HarnessSettings, SearchLimits, Settings, WitnessSettings
from ramseytype.errors import ErrorCode, RamseyTypeError, make_error
from ramseytype.generators import parse_family, parse_graph_name, named_graph
from ramseytype.graph import Graph
from ramseytype.harness import (
    CHECK_IDS,
    certify_small_ramsey,
    enumerate_graphs,
    estimate_n0,
    extremal_search,
    scan_corpus,
)
from ramseytype.harness.enumeration import enumerate_up_to
from ramseytype.isomorphism import family_le, is_family_free
from ramseytype.params import CHAIN, ParamKind, h_index_of, parameter_table
from ramseytype.witnesses import NECESSITY_IDS, WITNESS_IDS, RamseyTable, only_if_certify, run_witness

logger = logging.getLogger("ramseytype")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_ERROR = 3

# codes caused by the argument vector rather than the input
USAGE_CODES = {ErrorCode.E004, ErrorCode.E106, ErrorCode.E302, ErrorCode.E303, ErrorCode.E402}


def _write(text: str) -> None:
    sys.stdout.write(text)


def _settings(args: argparse.Namespace) -> Settings:
    settings = Settings.default()
    settings.limits = SearchLimits(
        exact_cap=args.exact_cap,
        node_budget=args.node_budget,
        enumeration_cap=args.enumeration_cap,
    )
    settings.harness = HarnessSettings(jobs=args.jobs, lenient=args.lenient, progress=args.progress)
    mode = getattr(args, "mode", "best-effort")
    settings.witness = WitnessSettings(
        mode=mode,
        threshold=getattr(args, "threshold", None),
        exhaustive_fallback=not getattr(args, "no_fallback", False),
    )
    return settings


def _ramsey_table(args: argparse.Namespace) -> RamseyTable:
    if args.ramsey_table is None:
        return RamseyTable()
    return RamseyTable(ConfigLoader().load_ramsey_table(Path(args.ramsey_table)))


def _open_input(args: argparse.Namespace) -> TextIO:
    if args.input in (None, "-"):
        return sys.stdin
    return open(args.input, "r", encoding="ascii")


def _read_graphs(args: argparse.Namespace) -> Iterator[Graph]:
    handle = _open_input(args)
    source = "<stdin>" if handle is sys.stdin else args.input
    try:
        yield from CorpusStream(handle, args.input_format, source, args.lenient)
    finally:
        if handle is not sys.stdin:
            handle.close()


def cmd_gen(args: argparse.Namespace) -> int:
    """Emit one named graph, or every member of a theorem family."""
    if args.family:
        family = parse_family(args.family)
        members = [(str(m.name), m.graph) for m in family.members]
        title = str(family)
    elif args.name:
        name = parse_graph_name(args.name)
        members = [(str(name), named_graph(name))]
        title = str(name)
    else:
        raise make_error(ErrorCode.E402, details="gen needs a graph name or --family")
    if args.format is not None:
        data = {
            "family": title,
            "members": [
                {"name": name, "order": G.order, "graph6": encode_graph6(G)}
                for name, G in members
            ],
        }
        _write(formatting.render(data, args.format, formatting.table_family))
    else:
        _write(formatting.lines_of([encode_graph6(G) for _, G in members]))
    return EXIT_OK


def _kinds(param: str) -> List[ParamKind]:
    return list(CHAIN) if param == "all" else [ParamKind.parse(param)]


def cmd_analyze(args: argparse.Namespace) -> int:
    """Parameter tables and h-indices for every input graph."""
    settings = _settings(args)
    kinds = _kinds(args.param)
    graphs = []
    for index, G in enumerate(_read_graphs(args)):
        tables = {kind.value: parameter_table(G, kind, settings.limits) for kind in kinds}
        if args.dot:
            labels = {
                v: " ".join(f"{k}={tables[k][v]}" for k in tables) for v in range(G.order)
            }
            _write(export_dot(G, labels, name=f"G{index}"))
            continue
        graphs.append({
            "index": index,
            "graph6": encode_graph6(G),
            "order": G.order,
            "params": tables,
            "h_index": {k: h_index_of(values) for k, values in tables.items()},
        })
    if not args.dot:
        _write(formatting.render({"graphs": graphs}, args.format, formatting.table_analysis))
    return EXIT_OK


def cmd_free(args: argparse.Namespace) -> int:
    settings = _settings(args)
    family = parse_family(args.family)
    graphs = []
    for index, G in enumerate(_read_graphs(args)):
        verdict = is_family_free(G, family, settings.limits)
        graphs.append({
            "index": index,
            "graph6": encode_graph6(G),
            "free": verdict.free,
            "member": verdict.member,
            "embedding": list(verdict.embedding.mapping) if verdict.embedding else None,
        })
    data = {"family": str(family), "graphs": graphs}
    _write(formatting.render(data, args.format, formatting.table_freeness))
    return EXIT_OK


def cmd_le(args: argparse.Namespace) -> int:
    settings = _settings(args)
    left = parse_family(args.left)
    right = parse_family(args.right)
    verdict = family_le(left, right, settings.limits)
    data = {
        "left": str(left),
        "right": str(right),
        "holds": verdict.holds,
        "certificates": [
            {
                "right": c.right,
                "left": c.left,
                "embedding": list(c.embedding.mapping) if c.embedding else None,
            }
            for c in verdict.certificates
        ],
    }
    _write(formatting.render(data, args.format, formatting.table_order))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    """Run the witness pipeline of a theorem on every input graph."""
    settings = _settings(args)
    table = _ramsey_table(args)
    reports = []
    for index, G in enumerate(_read_graphs(args)):
        report = run_witness(G, args.theorem, args.n, connected=not args.disconnected,
                             settings=settings, table=table)
        data = report.to_dict()
        data["index"] = index
        data["graph6"] = encode_graph6(G)
        reports.append(data)
    _write(formatting.render({"reports": reports}, args.format, formatting.table_witness))
    return EXIT_OK


def _check_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def cmd_scan(args: argparse.Namespace) -> int:
    settings = _settings(args)
    family = parse_family(args.family) if args.family else None
    if args.enumerate is not None:
        if args.exact_order:
            graphs: Any = list(enumerate_graphs(args.enumerate, args.connected, settings.limits))
        else:
            graphs = enumerate_up_to(args.enumerate, args.connected, settings.limits)
        report = scan_corpus(graphs, _check_list(args.checks), settings, family)
    else:
        with open(args.corpus, "r", encoding="ascii") as handle:
            stream = CorpusStream(handle, args.input_format, args.corpus, args.lenient)
            report = scan_corpus(stream, _check_list(args.checks), settings, family)
    data = report.to_dict(include_records=args.records)
    _write(formatting.render(data, args.format, formatting.table_scan))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_extremal(args: argparse.Namespace) -> int:
    settings = _settings(args)
    family = parse_family(args.family)
    table = extremal_search(family, ParamKind.parse(args.param), args.threshold, args.max_n,
                            args.connected, settings)
    _write(formatting.render(table.to_dict(), args.format, formatting.table_extremal))
    return EXIT_OK


def cmd_ramsey(args: argparse.Namespace) -> int:
    settings = _settings(args)
    if args.ramsey_command == "certify-small":
        certificate = certify_small_ramsey(settings.limits, settings.harness.progress)
        _write(formatting.render(certificate.to_dict(), args.format,
                                 formatting.table_certificate))
        return EXIT_OK if certificate.holds else EXIT_CHECK_FAILED
    estimate = estimate_n0(args.n, args.max_order, settings)
    _write(formatting.render(estimate.to_dict(), args.format, formatting.table_shapes))
    return EXIT_OK


def cmd_necessity(args: argparse.Namespace) -> int:
    settings = _settings(args)
    report = only_if_certify(args.theorem, c=args.c, c1=args.c1, c2=args.c2,
                             limits=settings.limits)
    _write(formatting.render(report.to_dict(), args.format, formatting.table_necessity))
    return EXIT_OK if report.holds else EXIT_CHECK_FAILED


def _print_error(error: RamseyTypeError) -> None:
    """Print a ramseytype error in a user-friendly format."""
    location = ""
    if error.source and error.line:
        location = f"{error.source}:{error.line}"
        if error.column:
            location += f":{error.column}"
        location += ": "

    print(f"{location}Error [{error.code}]: {error.message}", file=sys.stderr)

    if error.hint:
        hint = error.hint.replace("\n", "\n        ")
        print(f"  Hint: {hint}", file=sys.stderr)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    defaults = SearchLimits()
    common.add_argument("--format", choices=formatting.FORMATS, default=None,
                        help="Output format (default: table; gen writes graph6 lines)")
    common.add_argument("--input", default="-", help="Input file (default: stdin)")
    common.add_argument("--input-format", choices=("graph6", "edge-list"), default="graph6",
                        help="Input encoding (default: graph6)")
    common.add_argument("--lenient", action="store_true",
                        help="Skip malformed records with a warning")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes for scans")
    common.add_argument("--progress", action="store_true", help="Progress bar on stderr")
    common.add_argument("--exact-cap", type=int, default=defaults.exact_cap,
                        help=f"Largest order for exact searches (default: {defaults.exact_cap})")
    common.add_argument("--node-budget", type=int, default=defaults.node_budget,
                        help=f"Search nodes before giving up (default: {defaults.node_budget})")
    common.add_argument("--enumeration-cap", type=int, default=defaults.enumeration_cap,
                        help=f"Largest enumerated order (default: {defaults.enumeration_cap})")
    common.add_argument("--ramsey-table", default=None,
                        help="JSON file of external Ramsey constants")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="ramseytype",
        description="Exact small-graph tools for Ramsey-type forbidden induced subgraph "
                    "characterizations",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    gen_parser = subparsers.add_parser("gen", parents=[common], help="Emit named graphs")
    gen_parser.add_argument("name", nargs="?", help="Graph name, e.g. CK3 or K2,4")
    gen_parser.add_argument("--family", help="Emit every member of <thm>:<n>")
    gen_parser.set_defaults(handler=cmd_gen)

    analyze_parser = subparsers.add_parser("analyze", parents=[common],
                                           help="Vertex parameter tables")
    analyze_parser.add_argument("--param", default="all",
                                choices=("all",) + tuple(kind.value for kind in CHAIN))
    analyze_parser.add_argument("--dot", action="store_true",
                                help="Emit DOT with parameter annotations")
    analyze_parser.set_defaults(handler=cmd_analyze)

    free_parser = subparsers.add_parser("free", parents=[common], help="Freeness verdicts")
    free_parser.add_argument("--family", required=True, help="<thm>:<n> or names joined by ';'")
    free_parser.set_defaults(handler=cmd_free)

    le_parser = subparsers.add_parser("le", parents=[common], help="Decide left <= right")
    le_parser.add_argument("--left", required=True)
    le_parser.add_argument("--right", required=True)
    le_parser.set_defaults(handler=cmd_le)

    witness_parser = subparsers.add_parser("witness", parents=[common],
                                           help="Extract an induced family member")
    witness_parser.add_argument("--theorem", required=True, choices=WITNESS_IDS)
    witness_parser.add_argument("--n", type=int, required=True)
    witness_parser.add_argument("--mode", choices=("best-effort", "paper"),
                                default="best-effort")
    witness_parser.add_argument("--threshold", type=int, default=None,
                                help="Override the working count threshold")
    witness_parser.add_argument("--disconnected", action="store_true",
                                help="Run the non-connected variant")
    witness_parser.add_argument("--no-fallback", action="store_true",
                                help="Never fall back to exhaustive family search")
    witness_parser.set_defaults(handler=cmd_witness)

    scan_parser = subparsers.add_parser("scan", parents=[common], help="Run invariant checks")
    scan_parser.add_argument("--checks", required=True,
                             help=f"Comma-separated ids or 'all': {', '.join(CHECK_IDS)}")
    source = scan_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--enumerate", type=int, metavar="N",
                        help="All classes on 1..N vertices")
    source.add_argument("--corpus", metavar="PATH", help="graph6 or edge-list corpus file")
    scan_parser.add_argument("--exact-order", action="store_true",
                             help="With --enumerate, only order N")
    scan_parser.add_argument("--connected", action="store_true",
                             help="With --enumerate, connected classes only")
    scan_parser.add_argument("--family", help="Also record freeness against a family")
    scan_parser.add_argument("--records", action="store_true", help="Include per-graph records")
    scan_parser.set_defaults(handler=cmd_scan)

    extremal_parser = subparsers.add_parser("extremal", parents=[common],
                                            help="Max nontrivial count over free graphs")
    extremal_parser.add_argument("--family", required=True)
    extremal_parser.add_argument("--param", required=True,
                                 choices=tuple(kind.value for kind in CHAIN))
    extremal_parser.add_argument("--threshold", type=int, default=2)
    extremal_parser.add_argument("--max-n", type=int, required=True)
    extremal_parser.add_argument("--connected", action="store_true")
    extremal_parser.set_defaults(handler=cmd_extremal)

    ramsey_parser = subparsers.add_parser("ramsey", help="Small Ramsey certificates")
    ramsey_sub = ramsey_parser.add_subparsers(dest="ramsey_command", required=True)
    ramsey_sub.add_parser("certify-small", parents=[common],
                          help="Certify R_2(3) = 6 exhaustively")
    n0_parser = ramsey_sub.add_parser("estimate-n0", parents=[common],
                                      help="Orders that force P_n, K_n or K_1,n")
    n0_parser.add_argument("--n", type=int, required=True)
    n0_parser.add_argument("--max-order", type=int, required=True)
    ramsey_parser.set_defaults(handler=cmd_ramsey)

    necessity_parser = subparsers.add_parser("necessity", parents=[common],
                                             help="Measured necessity table")
    necessity_parser.add_argument("--theorem", required=True, choices=NECESSITY_IDS)
    necessity_parser.add_argument("--c", type=int, default=None)
    necessity_parser.add_argument("--c1", type=int, default=None)
    necessity_parser.add_argument("--c2", type=int, default=None)
    necessity_parser.set_defaults(handler=cmd_necessity)

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the ramseytype CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_OK

    _configure_logging(args.verbose)
    if args.format is None and args.command != "gen":
        args.format = "table"
    logger.debug("command %s with %s", args.command, vars(args))
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")

    try:
        return int(args.handler(args))
    except RamseyTypeError as e:
        _print_error(e)
        return EXIT_USAGE if e.code in USAGE_CODES else EXIT_ERROR
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("Interrupted.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
