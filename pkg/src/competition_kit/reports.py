"""
Run reports and the Platonic-solid reproduction report.
"""

import logging
import time
from dataclasses import dataclass, field

from . import settings
from .bounds import closed_form_entries, lemma_case_table, sano_bound
from .budget import SearchTracker
from .competition import verify_certificate
from .covers import incidence_lower_bound, theta_E
from .fixtures import icosahedron_certificate
from .generators import POLYHEDRA, icosahedron
from .graph import is_isomorphic
from .search import exact_competition_number

logger = logging.getLogger(__name__)


def graph_summary(graph):
    return {
        "n": graph.n,
        "m": graph.m,
        "degree_sequence": list(graph.degree_sequence()),
    }


@dataclass
class RunReport:
    """
    What one CLI invocation computed.

    Attributes:
        command (str): Subcommand name.
        arguments (dict): The arguments that influence the results.
        graph (dict, optional): `graph_summary` of the input graph.
        results (dict): Command specific results.
        timing_ms (float): Wall-clock time of the computation.
        nodes (int): Search nodes explored.
    """

    command: str
    arguments: dict = field(default_factory=dict)
    graph: dict | None = None
    results: dict = field(default_factory=dict)
    timing_ms: float = 0.0
    nodes: int = 0

    def to_dict(self, deterministic=False):
        """
        JSON-ready form. With `deterministic` the timing is zeroed so
        that equal inputs give byte-identical output.
        """
        return {
            "command": {"name": self.command, "arguments": self.arguments},
            "graph": self.graph,
            "results": self.results,
            "timing_ms": 0 if deterministic else round(self.timing_ms, 3),
            "nodes": self.nodes,
        }


class Stopwatch:
    def __init__(self):
        self.started = time.perf_counter()

    @property
    def elapsed_ms(self):
        return (time.perf_counter() - self.started) * 1000


@dataclass(frozen=True)
class PolyhedronRow:
    """
    One line of the polyhedra table.

    Attributes:
        name (str): Solid name.
        expected (int): Known competition number.
        value (int, optional): Value established here, None if nothing settled it.
        method (str): How the value was established.
        detail (dict): Supporting values.
    """

    name: str
    expected: int
    value: int | None
    method: str
    detail: dict = field(default_factory=dict)

    @property
    def matches(self):
        return self.value == self.expected

    def to_dict(self):
        return {
            "name": self.name,
            "expected": self.expected,
            "value": self.value,
            "method": self.method,
            "matches": self.matches,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ReproductionReport:
    rows: tuple
    theta_e: dict
    lemma_cases: dict
    mismatches: tuple

    @property
    def ok(self):
        return not self.mismatches

    def to_dict(self):
        return {
            "polyhedra": [row.to_dict() for row in self.rows],
            "theta_E_icosahedron": self.theta_e,
            "lemma_cases": self.lemma_cases,
            "mismatches": list(self.mismatches),
            "ok": self.ok,
        }

    def render(self):
        lines = [f"{'solid':<14}{'k':>4}{'expected':>10}  method"]
        for row in self.rows:
            value = "?" if row.value is None else str(row.value)
            lines.append(f"{row.name:<14}{value:>4}{row.expected:>10}  {row.method}")
        lines.append("")
        lines.append(
            f"theta_E(icosahedron) = {self.theta_e['value']} "
            f"(expected {self.theta_e['expected']}, "
            f"incidence bound {self.theta_e['incidence_bound']})"
        )
        lines.append("")
        lines.append(f"{'3-subset type':<18}{'subsets':>8}{'cover':>7}{'expected':>10}")
        for name, entry in self.lemma_cases.items():
            values = ",".join(str(v) for v in entry["values"])
            lines.append(
                f"{name:<18}{entry['count']:>8}{values:>7}{entry['expected']:>10}"
            )
        lines.append("")
        if self.ok:
            lines.append("all values match")
        else:
            lines.extend(f"MISMATCH: {message}" for message in self.mismatches)
        return "\n".join(lines) + "\n"


def _closed_form(graph):
    entries = closed_form_entries(graph)
    if not entries:
        return None, None
    return entries[0].value, entries[0].name


def _solved_row(name, graph, expected, budget, tracker):
    """
    A value that a closed form and the exact solver must both produce.
    """
    closed, theorem = _closed_form(graph)
    result = exact_competition_number(
        graph, budget, graph_id=name, use_closed_forms=False
    )
    tracker.nodes += result.nodes
    detail = {
        "closed_form": closed,
        "theorem": theorem,
        "exact_status": result.status.value,
        "exact_value": result.value,
        "certificate_source": result.source,
    }
    if result.value is not None and result.value == closed:
        return PolyhedronRow(
            name, expected, closed, f"closed form ({theorem}) and exact search", detail
        )
    return PolyhedronRow(
        name, expected, None, "closed form and exact search disagree", detail
    )


def _closed_form_row(name, graph, expected):
    closed, theorem = _closed_form(graph)
    return PolyhedronRow(
        name, expected, closed, f"closed form ({theorem})", {"closed_form": closed}
    )


def _icosahedron_row(expected, tracker):
    """
    Sano lower bound at m = 3 against the shipped k = 4 certificate.
    """
    graph = icosahedron()
    bound = sano_bound(graph, 3, tracker)
    cert = icosahedron_certificate()
    verification = verify_certificate(cert)
    same_graph = is_isomorphic(cert.graph, graph)
    detail = {
        "sano_bound": bound.value,
        "sano_subset": bound.witness["subset"],
        "certificate_k": cert.k,
        "certificate_valid": verification.valid,
        "certificate_graph_is_icosahedron": same_graph,
    }
    if verification.valid and same_graph and bound.value == cert.k:
        return PolyhedronRow(
            "icosahedron",
            expected,
            cert.k,
            "Sano bound and verified certificate",
            detail,
        )
    return PolyhedronRow(
        "icosahedron", expected, None, "lower bound and certificate do not meet", detail
    )


def reproduction_report(budget=None, tracker=None):
    """
    Recompute the competition numbers of the five Platonic solids, θ_E of
    the icosahedron and its table of restricted cover values per 3-subset type.

    Returns:
        ReproductionReport: With a mismatch message for every value that differs
            from the expected one.
    """
    tracker = tracker or SearchTracker()
    expected = settings.POLYHEDRA_COMPETITION_NUMBERS
    rows = []
    for name, build in POLYHEDRA.items():
        graph = build()
        if name in ("tetrahedron", "octahedron"):
            rows.append(_solved_row(name, graph, expected[name], budget, tracker))
        elif name == "icosahedron":
            rows.append(_icosahedron_row(expected[name], tracker))
        else:
            rows.append(_closed_form_row(name, graph, expected[name]))

    graph = icosahedron()
    cover = theta_E(graph, tracker)
    theta_e = {
        "value": cover.size,
        "expected": settings.ICOSAHEDRON_THETA_E,
        "witness_valid": cover.is_valid(graph),
        "incidence_bound": incidence_lower_bound(graph, tracker),
        "cover": cover.to_list(),
    }
    cases = lemma_case_table(graph, 3, tracker)
    lemma_cases = {
        name: {**cases.get(name, {"count": 0, "values": []}), "expected": value}
        for name, value in settings.ICOSAHEDRON_LEMMA_CASES.items()
    }

    mismatches = [
        f"k({row.name}) = {row.value}, expected {row.expected}"
        for row in rows
        if not row.matches
    ]
    if theta_e["value"] != theta_e["expected"] or not theta_e["witness_valid"]:
        mismatches.append(
            f"theta_E(icosahedron) = {theta_e['value']}, expected {theta_e['expected']}"
        )
    for name, entry in lemma_cases.items():
        if entry["values"] != [entry["expected"]]:
            mismatches.append(
                f"{name} subsets have cover values {entry['values']}, "
                f"expected {entry['expected']}"
            )
    for message in mismatches:
        logger.error("Reproduction mismatch: %s", message)
    return ReproductionReport(tuple(rows), theta_e, lemma_cases, tuple(mismatches))
