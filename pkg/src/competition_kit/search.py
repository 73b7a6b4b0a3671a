"""
Exact competition numbers and certified upper bounds.

Every certificate this module produces has the canonical shape: the base
vertices come first in some order, each base position receives a maximal
clique of the graph induced by the vertices placed before it, and the k
added vertices take one clique each of a minimum cover of the edges that
are still uncovered. Growing an assigned clique never hurts, so maximal
cliques suffice, and the competition number is the smallest k reachable
over all orders.
"""

import enum
import logging
from collections import deque
from dataclasses import dataclass

from . import settings
from .bounds import (
    best_lower_bound,
    maximum_cardinality_search,
    perfect_elimination_ordering,
)
from .budget import Budget, SearchTracker
from .cliques import Clique, maximal_clique_masks
from .competition import ConstructionCertificate, verify_certificate
from .covers import greedy_edge_cover, theta_E_restricted
from .exceptions import BudgetExceeded
from .graph import bits

logger = logging.getLogger(__name__)


class Status(enum.Enum):
    EXACT = "exact"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class UpperBound:
    """
    A certified upper bound k(G) <= k.

    Attributes:
        k (int): The bound.
        certificate (ConstructionCertificate): A valid certificate with this k.
        strategy (str): The construction that produced it.
    """

    k: int
    certificate: ConstructionCertificate
    strategy: str

    def to_dict(self):
        return {
            "k": self.k,
            "strategy": self.strategy,
            "certificate": self.certificate.to_dict(),
        }


@dataclass(frozen=True)
class CompetitionResult:
    """
    Outcome of `exact_competition_number`.

    An exact result has ``lower == upper`` and a certificate for that
    value. An inconclusive one carries the sandwich ``lower <= k(G) <= upper``
    known when the budget ran out, with the certificate of the upper bound.

    Attributes:
        status (Status): Exact or inconclusive.
        lower (int): Proven lower bound.
        upper (int): Certified upper bound.
        certificate (ConstructionCertificate): Certificate for `upper`.
        source (str): ``"search"`` or the heuristic strategy the certificate comes from.
        bounds (BoundReport, optional): Lower bounds, None if they could not be
            finished.
        nodes (int): Search nodes spent.
        reason (str): Why the result is inconclusive.
    """

    status: Status
    lower: int
    upper: int
    certificate: ConstructionCertificate
    source: str
    bounds: object = None
    nodes: int = 0
    reason: str = ""

    @property
    def value(self):
        return self.upper if self.status is Status.EXACT else None

    @property
    def is_exact(self):
        return self.status is Status.EXACT

    def to_dict(self):
        return {
            "status": self.status.value,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "source": self.source,
            "certificate": self.certificate.to_dict(),
            "bounds": self.bounds.to_dict() if self.bounds is not None else None,
            "nodes": self.nodes,
            "reason": self.reason,
        }


class EdgeMasks:
    """
    Translates clique bitsets into bitsets over the edge indices of a graph.
    """

    def __init__(self, graph):
        self.graph = graph
        self.full = (1 << graph.m) - 1
        self._covered = {}

    def covered(self, clique):
        mask = self._covered.get(clique)
        if mask is None:
            mask = 0
            members = list(bits(clique))
            for i, u in enumerate(members):
                for v in members[i + 1 :]:
                    mask |= 1 << self.graph.edge_index[(u, v)]
            self._covered[clique] = mask
        return mask

    def edges(self, uncovered):
        return [self.graph.edges[i] for i in bits(uncovered)]


def _certificate(graph, order, base_cliques, tail, k):
    n = graph.n
    assignment = [Clique.from_mask(clique) for clique in base_cliques]
    assignment.extend(Clique.from_mask(clique) for clique in tail)
    assignment.extend(Clique() for _ in range(k - len(tail)))
    return ConstructionCertificate(
        graph=graph,
        k=k,
        order=tuple(order) + tuple(range(n, n + k)),
        assignment=tuple(assignment),
    )


def _chordal_certificate(graph):
    """
    The k <= 1 construction for chordal graphs.

    Along a maximum cardinality search order every vertex together with its
    earlier neighbors is a clique; the clique of each vertex becomes the
    in-neighborhood of the next one, and the last clique goes to one added
    vertex.
    """
    if not graph.n or perfect_elimination_ordering(graph) is None:
        return None
    order = maximum_cardinality_search(graph)
    placed = 0
    cliques = []
    for v in order:
        clique = graph.adjacency[v] & placed | 1 << v
        cliques.append(clique if clique.bit_count() > 1 else 0)
        placed |= 1 << v
    tail = [cliques[-1]] if cliques and cliques[-1] else []
    return _certificate(graph, order, [0] + cliques[:-1], tail, len(tail))


def _leftover_cover(graph, masks, uncovered):
    if not uncovered:
        return []
    edges = masks.edges(uncovered)
    tracker = SearchTracker(
        Budget(max_ms=None, max_nodes=settings.HEURISTIC_COVER_NODES)
    )
    try:
        cover = theta_E_restricted(edges, graph, tracker)
    except BudgetExceeded:
        logger.debug("Falling back to a greedy cover for %d leftover edges", len(edges))
        cover = greedy_edge_cover(graph, edges)
    return [clique.mask for clique in cover.cliques]


def greedy_certificate(graph, order, masks=None):
    """
    Greedy construction along a fixed base order.

    Each position gets the maximal clique of its prefix covering the most
    uncovered edges (the first in lexicographic order on ties, the empty
    clique when nothing is left to gain); one added vertex is appended per
    clique of a cover of the remaining edges.
    """
    masks = masks or EdgeMasks(graph)
    uncovered = masks.full
    placed = 0
    cliques = []
    for v in order:
        best, gain = 0, 0
        for clique in maximal_clique_masks(graph.adjacency, placed):
            covered = (masks.covered(clique) & uncovered).bit_count()
            if covered > gain:
                best, gain = clique, covered
        cliques.append(best)
        uncovered &= ~masks.covered(best)
        placed |= 1 << v
    tail = _leftover_cover(graph, masks, uncovered)
    return _certificate(graph, order, cliques, tail, len(tail))


def breadth_first_order(graph):
    """
    Breadth-first order from a vertex of maximum degree, neighbors by
    decreasing degree. Every prefix within a component is connected.
    """
    degree = [adj.bit_count() for adj in graph.adjacency]
    seen = 0
    order = []
    for root in sorted(graph.vertices, key=lambda v: (-degree[v], v)):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = deque([root])
        while queue:
            vertex = queue.popleft()
            order.append(vertex)
            for neighbor in sorted(
                bits(graph.adjacency[vertex] & ~seen), key=lambda v: (-degree[v], v)
            ):
                seen |= 1 << neighbor
                queue.append(neighbor)
    return order


def degree_order(graph):
    return sorted(graph.vertices, key=lambda v: (-graph.adjacency[v].bit_count(), v))


GREEDY_ORDERS = (
    ("breadth_first", breadth_first_order),
    ("max_cardinality", maximum_cardinality_search),
    ("degree", degree_order),
)


def heuristic_upper_bound(graph):
    """
    Best certified upper bound over a few polynomial constructions.

    Chordal graphs use the elimination order construction; every graph
    also tries the greedy construction along each order of
    `GREEDY_ORDERS`. The smallest k wins, the first strategy on ties.

    Returns:
        UpperBound: With a certificate that `verify_certificate` accepts.
    """
    masks = EdgeMasks(graph)
    candidates = []
    chordal = _chordal_certificate(graph)
    if chordal is not None:
        candidates.append(("chordal", chordal))
    for name, make_order in GREEDY_ORDERS:
        candidates.append((name, greedy_certificate(graph, make_order(graph), masks)))
    best = None
    for name, cert in candidates:
        if not verify_certificate(cert):
            logger.error("Strategy %s built an invalid certificate for %s", name, graph)
            continue
        if best is None or cert.k < best.k:
            best = UpperBound(cert.k, cert, name)
    logger.debug("Heuristic upper bound for %s: %d (%s)", graph, best.k, best.strategy)
    return best


class PrefixSearch:
    """
    Decides whether k(G) <= k by searching canonical certificates.

    A state is the set of placed base vertices together with the set of
    uncovered edges; the next vertex may be any unplaced one, tried by
    descending degree, and its clique any maximal clique of the placed
    vertices whose newly covered edges are not a strict subset of another
    option's. States proven infeasible are remembered for the duration of
    one `run`.

    Args:
        graph (Graph): The graph.
        tracker (SearchTracker): Node counter and budget.
    """

    def __init__(self, graph, tracker):
        self.graph = graph
        self.tracker = tracker
        self.masks = EdgeMasks(graph)
        self.full = graph.all_vertices_mask
        self.preference = degree_order(graph)
        cliques = maximal_clique_masks(graph.adjacency, self.full)
        self.edge_candidates = [0] * graph.m
        for index, clique in enumerate(cliques):
            for edge in bits(self.masks.covered(clique)):
                self.edge_candidates[edge] |= 1 << index
        self.by_scarcity = sorted(
            range(graph.m), key=lambda e: (self.edge_candidates[e].bit_count(), e)
        )
        self._options = {}
        self._covers = {}
        self.k = 0
        self.failed = set()
        self.order = []
        self.cliques = []
        self.tail = []

    def packing_bound(self, uncovered):
        """
        Edges no two of which lie in a common maximal clique each need their own clique.
        """
        used = 0
        count = 0
        for edge in self.by_scarcity:
            if uncovered >> edge & 1 and not self.edge_candidates[edge] & used:
                count += 1
                used |= self.edge_candidates[edge]
        return count

    def options(self, placed, uncovered):
        key = (placed, uncovered)
        found = self._options.get(key)
        if found is not None:
            return found
        gains = {}
        for clique in maximal_clique_masks(self.graph.adjacency, placed):
            gain = self.masks.covered(clique) & uncovered
            if gain and gain not in gains:
                gains[gain] = clique
        kept = [
            (gain, clique)
            for gain, clique in gains.items()
            if not any(gain != other and (gain & other) == gain for other in gains)
        ]
        kept.sort(key=lambda item: (-item[0].bit_count(), tuple(bits(item[1]))))
        found = [clique for _, clique in kept] or [0]
        self._options[key] = found
        return found

    def leftover(self, uncovered):
        """
        A minimum cover of the uncovered edges, as clique bitsets.
        """
        cover = self._covers.get(uncovered)
        if cover is None:
            found = theta_E_restricted(
                self.masks.edges(uncovered), self.graph, self.tracker
            )
            cover = [clique.mask for clique in found.cliques]
            self._covers[uncovered] = cover
        return cover

    def run(self, k):
        """
        Returns:
            ConstructionCertificate or None: A certificate with this k, or None if
            none exists.

        Raises:
            BudgetExceeded: If the tracker's budget runs out first.
        """
        self.k = k
        self.failed = set()
        self.order, self.cliques, self.tail = [], [], []
        if not self._extend(0, self.masks.full):
            return None
        return _certificate(self.graph, self.order, self.cliques, self.tail, k)

    def _extend(self, placed, uncovered):
        self.tracker.tick()
        if placed == self.full:
            if self.packing_bound(uncovered) > self.k:
                return False
            cover = self.leftover(uncovered)
            if len(cover) > self.k:
                return False
            self.tail = cover
            return True
        key = (placed, uncovered)
        if key in self.failed:
            return False
        unplaced = (self.full & ~placed).bit_count()
        slots = self.k + unplaced - (0 if placed else 1)
        if self.packing_bound(uncovered) > slots:
            self.failed.add(key)
            return False
        options = self.options(placed, uncovered)
        for vertex in self.preference:
            if placed >> vertex & 1:
                continue
            for clique in options:
                self.order.append(vertex)
                self.cliques.append(clique)
                if self._extend(
                    placed | 1 << vertex, uncovered & ~self.masks.covered(clique)
                ):
                    return True
                self.order.pop()
                self.cliques.pop()
        self.failed.add(key)
        return False


def exact_competition_number(
    graph,
    budget=None,
    m_max=settings.DEFAULT_M_MAX,
    graph_id=None,
    use_closed_forms=True,
):
    """
    k(G) with a certificate, or the best sandwich when the budget runs out.

    The search starts from the best lower bound (raised to a closed-form
    value when one applies) and tries k = lower, lower + 1, ... below the
    heuristic upper bound; the first k with a certificate is k(G). When no
    smaller k works, the heuristic certificate is optimal.

    Args:
        graph (Graph): The graph.
        budget (Budget, optional): Search limits, `Budget()` defaults when omitted.
        m_max (int): Largest subset size for the Sano lower bound.
        graph_id (str, optional): Name recorded in the bound report.
        use_closed_forms (bool): Start from a closed-form value when one applies;
            False makes the answer rest on lower bounds, search and certificates only.

    Returns:
        CompetitionResult: Exact, or inconclusive with ``lower <= k(G) <= upper``.
    """
    budget = budget or Budget()
    tracker = SearchTracker(budget)
    heuristic = heuristic_upper_bound(graph)
    upper = heuristic.k

    def inconclusive(lower, bounds, reason):
        logger.warning(
            "k(%s) inconclusive in [%d, %d]: %s", graph, lower, upper, reason
        )
        return CompetitionResult(
            Status.INCONCLUSIVE,
            lower,
            upper,
            heuristic.certificate,
            heuristic.strategy,
            bounds,
            tracker.nodes,
            reason,
        )

    try:
        bounds = best_lower_bound(graph, m_max, tracker, graph_id)
    except BudgetExceeded as exc:
        return inconclusive(0, None, f"{exc} while computing lower bounds")
    lower = bounds.best_lower
    if use_closed_forms and bounds.exact is not None:
        lower = max(lower, bounds.exact)
    if lower > upper:
        logger.error(
            "Lower bound %d exceeds certified upper bound %d for %s",
            lower,
            upper,
            graph,
        )
    if lower >= upper:
        return CompetitionResult(
            Status.EXACT,
            upper,
            upper,
            heuristic.certificate,
            heuristic.strategy,
            bounds,
            tracker.nodes,
        )
    if budget.max_vertices is not None and graph.n > budget.max_vertices:
        return inconclusive(
            lower,
            bounds,
            f"exact search is limited to {budget.max_vertices} vertices, "
            f"the graph has {graph.n}",
        )
    search = PrefixSearch(graph, tracker)
    k = lower
    try:
        while k < upper:
            cert = search.run(k)
            if cert is not None:
                logger.info("k(%s) = %d after %d nodes", graph, k, tracker.nodes)
                return CompetitionResult(
                    Status.EXACT, k, k, cert, "search", bounds, tracker.nodes
                )
            logger.debug("No certificate with k = %d for %s", k, graph)
            k += 1
    except BudgetExceeded as exc:
        return inconclusive(k, bounds, str(exc))
    logger.info("k(%s) = %d, the heuristic certificate is optimal", graph, upper)
    return CompetitionResult(
        Status.EXACT,
        upper,
        upper,
        heuristic.certificate,
        heuristic.strategy,
        bounds,
        tracker.nodes,
    )
