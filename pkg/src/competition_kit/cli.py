"""
Command line interface.

Exit codes: 0 on success (or a valid certificate), 1 for an invalid
certificate or a reproduction mismatch, 2 for usage and input errors.
"""

import argparse
import logging
import sys

from . import settings
from .bounds import best_lower_bound, restricted_cover_for_subset
from .budget import Budget, SearchTracker
from .competition import read_certificate, verify_certificate
from .covers import incidence_lower_bound, theta_E, theta_V
from .exceptions import CompetitionKitError
from .generators import FAMILIES, generate
from .reports import RunReport, Stopwatch, graph_summary, reproduction_report
from .search import exact_competition_number
from .serialization import (
    dumps,
    read_graph,
    render_edgelist,
    render_graph_json,
    write_graph,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _non_negative(text):
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _positive(text):
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _vertex_list(text):
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a comma separated list of vertices"
        ) from exc


def _budget(args):
    return Budget(
        max_ms=args.budget_ms,
        max_nodes=args.budget_nodes,
        max_vertices=args.max_vertices,
    )


def _emit(args, report, text):
    if args.json:
        sys.stdout.write(dumps(report.to_dict(deterministic=args.deterministic)))
    else:
        sys.stdout.write(text)


def _summary_line(graph):
    degrees = " ".join(str(d) for d in graph.degree_sequence())
    return f"graph: n={graph.n} m={graph.m} degrees=[{degrees}]\n"


def cmd_generate(args):
    graph = generate(args.family, *args.params)
    if args.output:
        write_graph(args.output, graph)
    elif args.json:
        sys.stdout.write(render_graph_json(graph))
    else:
        sys.stdout.write(render_edgelist(graph))
    return EXIT_OK


def cmd_bounds(args):
    graph = read_graph(args.graph)
    watch = Stopwatch()
    tracker = SearchTracker()
    bound_report = best_lower_bound(graph, args.m_max, tracker, graph_id=args.graph)
    report = RunReport(
        "bounds",
        {"graph": args.graph, "m_max": args.m_max},
        graph_summary(graph),
        bound_report.to_dict(),
        watch.elapsed_ms,
        tracker.nodes,
    )
    lines = [_summary_line(graph), f"{'bound':<16}{'value':>6}  {'kind':<6} theorem\n"]
    for entry in bound_report.entries:
        lines.append(
            f"{entry.name:<16}{entry.value:>6}  {entry.kind.value:<6} {entry.theorem}\n"
        )
    lines.append(f"best lower bound: {bound_report.best_lower}")
    lines.append(f" ({bound_report.note})\n" if bound_report.note else "\n")
    if bound_report.exact is not None:
        lines.append(f"exact: {bound_report.exact}\n")
    _emit(args, report, "".join(lines))
    return EXIT_OK


def cmd_exact(args):
    graph = read_graph(args.graph)
    watch = Stopwatch()
    result = exact_competition_number(
        graph, _budget(args), args.m_max, graph_id=args.graph
    )
    report = RunReport(
        "exact",
        {
            "graph": args.graph,
            "m_max": args.m_max,
            "budget_ms": args.budget_ms,
            "budget_nodes": args.budget_nodes,
            "max_vertices": args.max_vertices,
        },
        graph_summary(graph),
        result.to_dict(),
        watch.elapsed_ms,
        result.nodes,
    )
    lines = [_summary_line(graph), f"status: {result.status.value}\n"]
    if result.is_exact:
        lines.append(f"k = {result.value}\n")
    else:
        lines.append(f"{result.lower} <= k <= {result.upper}\n")
        lines.append(f"reason: {result.reason}\n")
    lines.append(f"certificate ({result.source}): k = {result.certificate.k}\n")
    for position, (vertex, clique) in enumerate(
        zip(result.certificate.order, result.certificate.assignment)
    ):
        if len(clique):
            lines.append(f"  {position:>3}: {clique} -> {vertex}\n")
    _emit(args, report, "".join(lines))
    return EXIT_OK


def cmd_theta_e(args):
    graph = read_graph(args.graph)
    watch = Stopwatch()
    tracker = SearchTracker()
    if args.subset is not None:
        cover = restricted_cover_for_subset(graph, args.subset, tracker)
        results = {
            "subset": sorted(set(args.subset)),
            "theta_E_restricted": cover.size,
            "cover": cover.to_list(),
        }
        headline = f"theta_E(E[U]; N[U]) = {cover.size} for U = {results['subset']}\n"
    else:
        cover = theta_E(graph, tracker)
        incidence = incidence_lower_bound(graph, tracker)
        results = {
            "theta_E": cover.size,
            "incidence_bound": incidence,
            "cover": cover.to_list(),
        }
        headline = f"theta_E = {cover.size} (incidence bound {incidence})\n"
    report = RunReport(
        "theta-e",
        {"graph": args.graph, "subset": args.subset},
        graph_summary(graph),
        results,
        watch.elapsed_ms,
        tracker.nodes,
    )
    lines = [_summary_line(graph), headline]
    lines.extend(f"  {clique}\n" for clique in cover.cliques)
    _emit(args, report, "".join(lines))
    return EXIT_OK


def cmd_theta_v(args):
    graph = read_graph(args.graph)
    watch = Stopwatch()
    tracker = SearchTracker()
    cover = theta_V(graph, tracker)
    report = RunReport(
        "theta-v",
        {"graph": args.graph},
        graph_summary(graph),
        {"theta_V": cover.size, "cover": cover.to_list()},
        watch.elapsed_ms,
        tracker.nodes,
    )
    lines = [_summary_line(graph), f"theta_V = {cover.size}\n"]
    lines.extend(f"  {clique}\n" for clique in cover.cliques)
    _emit(args, report, "".join(lines))
    return EXIT_OK


def cmd_verify(args):
    cert = read_certificate(args.certificate)
    watch = Stopwatch()
    verification = verify_certificate(cert)
    report = RunReport(
        "verify",
        {"certificate": args.certificate},
        graph_summary(cert.graph),
        {"k": cert.k, **verification.to_dict()},
        watch.elapsed_ms,
    )
    if verification.valid:
        text = f"valid: k(G) <= {cert.k}\n"
    else:
        text = "invalid\n" + "".join(
            f"  {line}\n" for line in verification.diagnostics()
        )
    _emit(args, report, _summary_line(cert.graph) + text)
    return EXIT_OK if verification.valid else EXIT_FAILURE


def cmd_paper_report(args):
    watch = Stopwatch()
    tracker = SearchTracker()
    reproduced = reproduction_report(_budget(args), tracker)
    report = RunReport(
        "paper-report", {}, None, reproduced.to_dict(), watch.elapsed_ms, tracker.nodes
    )
    _emit(args, report, reproduced.render())
    return EXIT_OK if reproduced.ok else EXIT_FAILURE


def _add_budget_arguments(parser):
    parser.add_argument(
        "--budget-ms",
        type=_non_negative,
        default=settings.DEFAULT_BUDGET_MS,
        help="wall-clock limit in milliseconds",
    )
    parser.add_argument(
        "--budget-nodes",
        type=_non_negative,
        default=settings.DEFAULT_BUDGET_NODES,
        help="search node limit",
    )
    parser.add_argument(
        "--max-vertices",
        type=_non_negative,
        default=settings.DEFAULT_EXACT_MAX_VERTICES,
        help="largest graph the exact search accepts",
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="print machine readable JSON"
    )
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="zero the timing fields of JSON output",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for info, -vv for debug logging",
    )

    parser = argparse.ArgumentParser(
        prog="competition-kit",
        description="Competition numbers, clique covers and their certificates.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", parents=[common], help="generate a graph family")
    gen.add_argument("family", help=f"one of: {', '.join(sorted(FAMILIES))}")
    gen.add_argument(
        "params", nargs="*", type=int, help="integer parameters of the family"
    )
    gen.add_argument(
        "-o", "--output", help="file to write, .json selects JSON; stdout when omitted"
    )
    gen.set_defaults(handler=cmd_generate)

    bounds = subparsers.add_parser(
        "bounds", parents=[common], help="closed forms and lower bounds"
    )
    bounds.add_argument("graph", help="edge list or .json graph file")
    bounds.add_argument(
        "--m-max",
        type=_positive,
        default=settings.DEFAULT_M_MAX,
        help="largest Sano subset size",
    )
    bounds.set_defaults(handler=cmd_bounds)

    exact = subparsers.add_parser(
        "exact", parents=[common], help="exact competition number with certificate"
    )
    exact.add_argument("graph", help="edge list or .json graph file")
    exact.add_argument(
        "--m-max",
        type=_positive,
        default=settings.DEFAULT_M_MAX,
        help="largest Sano subset size",
    )
    _add_budget_arguments(exact)
    exact.set_defaults(handler=cmd_exact)

    theta_e_parser = subparsers.add_parser(
        "theta-e", parents=[common], help="edge clique cover number"
    )
    theta_e_parser.add_argument("graph", help="edge list or .json graph file")
    theta_e_parser.add_argument(
        "--subset",
        type=_vertex_list,
        help="comma separated U, computes theta_E(E[U]; N[U]) instead",
    )
    theta_e_parser.set_defaults(handler=cmd_theta_e)

    theta_v_parser = subparsers.add_parser(
        "theta-v", parents=[common], help="vertex clique cover number"
    )
    theta_v_parser.add_argument("graph", help="edge list or .json graph file")
    theta_v_parser.set_defaults(handler=cmd_theta_v)

    verify = subparsers.add_parser(
        "verify", parents=[common], help="check a certificate file"
    )
    verify.add_argument("certificate", help="certificate JSON file")
    verify.set_defaults(handler=cmd_verify)

    report = subparsers.add_parser(
        "paper-report", parents=[common], help="recompute the Platonic solid results"
    )
    _add_budget_arguments(report)
    report.set_defaults(handler=cmd_paper_report)
    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except CompetitionKitError as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        sys.stderr.write(f"competition-kit: error: {exc}\n")
        return EXIT_USAGE
