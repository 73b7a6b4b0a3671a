"""
Closed forms and lower bounds for the competition number k(G).

Closed forms (exact values, each with its own hypothesis):

* chordal graphs without isolated vertices: k(G) = 1 (Roberts)
* connected triangle-free graphs with more than one vertex:
  k(G) = |E| - |V| + 2 (Roberts)
* K_{n,n,n} with n >= 2: k = n^2 - 3n + 4 (Kim and Sano)

Lower bounds:

* Opsut: k(G) >= θ_E(G) - |V| + 2
* Opsut: k(G) >= min_v θ_V(N_G(v))
* Sano: k(G) >= min over m-subsets U of θ_E(E_G[U]; N_G[U]) - m + 1
"""

import enum
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from . import settings
from .budget import SearchTracker
from .cliques import Clique, is_clique_mask
from .covers import (
    CliqueCover,
    CoverKind,
    neighborhood_theta_V,
    theta_E,
    theta_E_restricted,
)
from .exceptions import GraphError
from .graph import (
    bits,
    incident_edges,
    induced_subgraph,
    neighborhood_closed,
    vertex_subset,
)

logger = logging.getLogger(__name__)


class BoundKind(enum.Enum):
    LOWER = "lower"
    EXACT = "exact"


@dataclass(frozen=True)
class BoundEntry:
    """
    One value in a `BoundReport`.

    Attributes:
        name (str): Short identifier, e.g. ``"sano(m=3)"``.
        value (int): The bound or exact value, negative values are kept as computed.
        kind (BoundKind): Lower bound or exact value.
        theorem (str): The result the value instantiates.
        witness (dict): JSON-ready data backing the value (covers, argmin subsets).
        note (str): Applicability remark.
    """

    name: str
    value: int
    kind: BoundKind
    theorem: str
    witness: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self):
        return {
            "name": self.name,
            "value": self.value,
            "kind": self.kind.value,
            "theorem": self.theorem,
            "witness": self.witness,
            "note": self.note,
        }


@dataclass(frozen=True)
class BoundReport:
    """
    Every applicable closed form and lower bound for one graph.

    Attributes:
        graph_id (str): Name of the graph the report is about.
        entries (tuple): The `BoundEntry` values.
        best_lower (int): Largest lower bound, floored at 0.
        note (str): ``"trivial floor"`` when every lower bound was negative.
    """

    graph_id: str
    entries: tuple
    best_lower: int
    note: str = ""

    @property
    def lower_entries(self):
        return tuple(entry for entry in self.entries if entry.kind is BoundKind.LOWER)

    @property
    def exact_entries(self):
        return tuple(entry for entry in self.entries if entry.kind is BoundKind.EXACT)

    @property
    def exact(self):
        """
        The exact value if some closed form applies, otherwise None.
        """
        entries = self.exact_entries
        return entries[0].value if entries else None

    def best_entry(self):
        """
        The lower-bound entry attaining `best_lower` (the first one on ties), or None.
        """
        lowers = self.lower_entries
        if not lowers:
            return None
        return max(lowers, key=lambda entry: entry.value)

    def is_consistent(self):
        """
        Every lower bound is at most every exact value, and all exact values agree.
        """
        exact_values = {entry.value for entry in self.exact_entries}
        if len(exact_values) > 1:
            return False
        return all(
            entry.value <= value
            for entry in self.lower_entries
            for value in exact_values
        )

    def to_dict(self):
        return {
            "graph": self.graph_id,
            "entries": [entry.to_dict() for entry in self.entries],
            "best_lower": self.best_lower,
            "exact": self.exact,
            "note": self.note,
        }


def maximum_cardinality_search(graph):
    """
    Visit order of maximum cardinality search, ties broken by lowest label.
    """
    weight = [0] * graph.n
    visited = 0
    order = []
    for _ in range(graph.n):
        vertex = max(
            (v for v in graph.vertices if not visited >> v & 1),
            key=lambda v: (weight[v], -v),
        )
        order.append(vertex)
        visited |= 1 << vertex
        for neighbor in bits(graph.adjacency[vertex] & ~visited):
            weight[neighbor] += 1
    return order


def perfect_elimination_ordering(graph):
    """
    A perfect elimination ordering of `graph`, or None if it is not chordal.

    The reverse of a maximum cardinality search order is a perfect
    elimination ordering exactly when the graph is chordal, i.e. when every
    vertex's earlier-visited neighbors form a clique.
    """
    order = maximum_cardinality_search(graph)
    visited = 0
    for vertex in order:
        if not is_clique_mask(graph.adjacency, graph.adjacency[vertex] & visited):
            return None
        visited |= 1 << vertex
    return tuple(reversed(order))


def is_chordal(graph):
    return perfect_elimination_ordering(graph) is not None


def chordal_exact(graph):
    """
    k(G) = 1 for a chordal graph without isolated vertices.

    Returns:
        int or None: 1, or None when the hypothesis fails.
    """
    if graph.n == 0 or graph.isolated_vertices():
        return None
    return 1 if is_chordal(graph) else None


def triangle_free_exact(graph):
    """
    k(G) = |E(G)| - |V(G)| + 2 for a connected triangle-free graph with |V(G)| > 1.

    Returns:
        int or None: The value, or None when the hypothesis fails.
    """
    if graph.n <= 1 or not graph.is_connected() or not graph.is_triangle_free():
        return None
    return graph.m - graph.n + 2


def tripartite_exact(n):
    """
    k(K_{n,n,n}) = n^2 - 3n + 4, stated for n >= 2; None otherwise.
    """
    if n < 2:
        return None
    return n * n - 3 * n + 4


def bipartite_exact(n, m):
    """
    k(K_{n,m}) = nm - n - m + 2 for n, m >= 1 (a connected triangle-free graph).
    """
    if n < 1 or m < 1:
        return None
    return n * m - n - m + 2


def complete_tripartite_part_size(graph):
    """
    Return n if `graph` is K_{n,n,n} with n >= 2, otherwise None.

    In a complete multipartite graph, non-adjacency (with every vertex
    counted as non-adjacent to itself) is an equivalence whose classes are
    the parts.
    """
    if graph.n < 6 or graph.n % 3:
        return None
    full = graph.all_vertices_mask
    classes = {full & ~graph.adjacency[v] for v in graph.vertices}
    if len(classes) != 3:
        return None
    first, second, third = classes
    if first & second or first & third or second & third:
        return None
    part = graph.n // 3
    if any(mask.bit_count() != part for mask in classes):
        return None
    return part


def opsut_edge_bound(graph, tracker=None):
    """
    k(G) >= θ_E(G) - |V(G)| + 2. The value may be negative.

    The inequality needs at least one edge: on K1 it would claim k >= 1
    while k(K1) = 0. Edgeless graphs get the trivial value min(formula, 0).

    Returns:
        BoundEntry: The bound, with the minimum edge clique cover as witness.
    """
    cover = theta_E(graph, tracker)
    value = cover.size - graph.n + 2
    note = ""
    if not graph.m:
        value = min(value, 0)
        note = "no edges, the bound is trivial"
    return BoundEntry(
        name="opsut_edge",
        value=value,
        kind=BoundKind.LOWER,
        theorem="Opsut: k(G) >= θ_E(G) - |V(G)| + 2",
        witness={"theta_E": cover.size, "cover": cover.to_list()},
        note=note,
    )


def opsut_vertex_bound(graph, tracker=None):
    """
    k(G) >= min over v of θ_V(N_G(v)).

    An isolated vertex has an empty neighborhood with θ_V = 0, so the bound
    is 0 for any graph with an isolated vertex.

    Returns:
        BoundEntry: The bound; the witness names the first minimizing vertex.

    Raises:
        GraphError: If the graph has no vertices.
    """
    if graph.n == 0:
        raise GraphError(
            "the neighborhood bound needs a graph with at least one vertex"
        )
    values = [neighborhood_theta_V(graph, v, tracker) for v in graph.vertices]
    best = min(values)
    return BoundEntry(
        name="opsut_vertex",
        value=best,
        kind=BoundKind.LOWER,
        theorem="Opsut: k(G) >= min_v θ_V(N_G(v))",
        witness={"vertex": values.index(best)},
    )


def restricted_cover_for_subset(graph, subset, tracker=None):
    """
    θ_E(E_G[U]; N_G[U]) for one vertex subset U.

    The cover is computed inside the subgraph induced by N_G[U] and reported
    with the labels of `graph`.

    Returns:
        CliqueCover: A minimum cover of E_G[U] by cliques of N_G[U].
    """
    subset = vertex_subset(graph, subset)
    edges = incident_edges(graph, subset)
    if not edges:
        return CliqueCover((), (), CoverKind.EDGE)
    host, label_map = induced_subgraph(graph, neighborhood_closed(graph, subset))
    relabel = {old: new for new, old in enumerate(label_map)}
    local = theta_E_restricted(
        [(relabel[u], relabel[v]) for u, v in edges], host, tracker
    )
    return CliqueCover(
        tuple(
            sorted(
                Clique(tuple(label_map[v] for v in clique)) for clique in local.cliques
            )
        ),
        edges,
        CoverKind.EDGE,
    )


def sano_bound(graph, m, tracker=None):
    """
    k(G) >= min over m-subsets U of θ_E(E_G[U]; N_G[U]) - m + 1.

    All C(n, m) subsets are evaluated in lexicographic order; ties keep the
    lexicographically least minimizing subset.

    Returns:
        BoundEntry: The bound, with the minimizing subset and its cover as witness.

    Raises:
        GraphError: If m is not in ``1 .. |V(G)|``.
    """
    if not isinstance(m, int) or m < 1 or m > graph.n:
        raise GraphError(f"subset size m must satisfy 1 <= m <= {graph.n}, got {m!r}")
    best_subset, best_cover = None, None
    for subset in combinations(graph.vertices, m):
        cover = restricted_cover_for_subset(graph, subset, tracker)
        if best_cover is None or cover.size < best_cover.size:
            best_subset, best_cover = subset, cover
    logger.debug(
        "Sano bound m=%d on %s: minimum %d at %s",
        m,
        graph,
        best_cover.size,
        best_subset,
    )
    return BoundEntry(
        name=f"sano(m={m})",
        value=best_cover.size - m + 1,
        kind=BoundKind.LOWER,
        theorem="Sano: k(G) >= min_U θ_E(E_G[U]; N_G[U]) - m + 1",
        witness={
            "subset": list(best_subset),
            "theta_E_restricted": best_cover.size,
            "cover": best_cover.to_list(),
        },
    )


THREE_VERTEX_TYPES = {
    3: "triangle",
    2: "path",
    1: "edge_plus_vertex",
    0: "independent",
}


def induced_type_name(subgraph):
    """
    Name of the isomorphism type of a small induced subgraph.

    Three-vertex graphs are determined by their edge count; larger ones get
    a descriptive key from vertex count, edge count and degree sequence.
    """
    if subgraph.n == 3:
        return THREE_VERTEX_TYPES[subgraph.m]
    degrees = "".join(str(d) for d in subgraph.degree_sequence())
    return f"n{subgraph.n}_m{subgraph.m}_d{degrees}"


def lemma_case_table(graph, m=3, tracker=None):
    """
    Group every m-subset U by the type of G[U] and collect θ_E(E_G[U]; N_G[U]).

    Returns:
        dict: ``{type name: {"count": subsets, "values": sorted distinct values}}``.
    """
    grouped = defaultdict(list)
    for subset in combinations(graph.vertices, m):
        subgraph, _ = induced_subgraph(graph, subset)
        grouped[induced_type_name(subgraph)].append(
            restricted_cover_for_subset(graph, subset, tracker).size
        )
    return {
        name: {"count": len(values), "values": sorted(set(values))}
        for name, values in sorted(grouped.items())
    }


def closed_form_entries(graph):
    entries = []
    if chordal_exact(graph) is not None:
        entries.append(
            BoundEntry(
                name="chordal",
                value=1,
                kind=BoundKind.EXACT,
                theorem="Roberts: k(G) = 1 for chordal G without isolated vertices",
                witness={
                    "elimination_order": list(perfect_elimination_ordering(graph)),
                },
            )
        )
    value = triangle_free_exact(graph)
    if value is not None:
        entries.append(
            BoundEntry(
                name="triangle_free",
                value=value,
                kind=BoundKind.EXACT,
                theorem=(
                    "Roberts: k(G) = |E(G)| - |V(G)| + 2 for connected triangle-free G"
                ),
                witness={"edges": graph.m, "vertices": graph.n},
            )
        )
    part = complete_tripartite_part_size(graph)
    if part is not None:
        entries.append(
            BoundEntry(
                name="tripartite",
                value=tripartite_exact(part),
                kind=BoundKind.EXACT,
                theorem="Kim-Sano: k(K_{n,n,n}) = n^2 - 3n + 4",
                witness={"part_size": part},
            )
        )
    return entries


def best_lower_bound(graph, m_max=settings.DEFAULT_M_MAX, tracker=None, graph_id=None):
    """
    Evaluate every applicable closed form and lower bound.

    Args:
        graph (Graph): The graph.
        m_max (int): Largest subset size for the Sano bound; values above
            |V(G)| are capped at |V(G)|.
        tracker (SearchTracker, optional): Node counter and budget shared by the
            cover solves.
        graph_id (str, optional): Name recorded in the report.

    Returns:
        BoundReport: All entries, with the best lower bound floored at 0.
    """
    tracker = tracker or SearchTracker()
    entries = closed_form_entries(graph)
    if graph.n:
        entries.append(opsut_edge_bound(graph, tracker))
        entries.append(opsut_vertex_bound(graph, tracker))
        for m in range(1, min(m_max, graph.n) + 1):
            entries.append(sano_bound(graph, m, tracker))
    lowers = [entry.value for entry in entries if entry.kind is BoundKind.LOWER]
    best = max(lowers, default=0)
    note = ""
    if best < 0:
        logger.debug("Every lower bound is negative, using the trivial floor 0")
        note = "trivial floor"
    report = BoundReport(graph_id or str(graph), tuple(entries), max(best, 0), note)
    if not report.is_consistent():
        logger.error(
            "Inconsistent bound report for %s: %s", report.graph_id, report.to_dict()
        )
    return report
