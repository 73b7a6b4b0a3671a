"""
Exact clique covers.

Edge clique covers, restricted edge clique covers θ_E(F; G) and vertex
clique covers are all set-cover problems over the maximal cliques of the
graph: any clique of a cover can be grown to a maximal one without
uncovering anything. One branch-and-bound engine, `SetCoverSolver`, solves
all three.
"""

import enum
import logging
import math
from dataclasses import dataclass

from .budget import SearchTracker
from .cliques import Clique, clique_number, maximal_clique_masks
from .exceptions import CoverError
from .graph import bits, induced_subgraph

logger = logging.getLogger(__name__)


class CoverKind(enum.Enum):
    EDGE = "edge-cover"
    VERTEX = "vertex-cover"


@dataclass(frozen=True)
class CliqueCover:
    """
    A family of cliques together with the target it covers.

    Attributes:
        cliques (tuple): The cliques of the cover, sorted.
        target (tuple): Edges ``(u, v)`` for an edge cover, vertex labels for a
            vertex cover.
        kind (CoverKind): What `target` holds.
    """

    cliques: tuple
    target: tuple
    kind: CoverKind

    @property
    def size(self):
        return len(self.cliques)

    def uncovered(self):
        """
        Target elements that no clique of the family covers.
        """
        if self.kind is CoverKind.EDGE:
            return tuple(
                (u, v)
                for u, v in self.target
                if not any(u in clique and v in clique for clique in self.cliques)
            )
        return tuple(
            v for v in self.target if not any(v in clique for clique in self.cliques)
        )

    def is_valid(self, graph=None):
        """
        Check the covering invariant, and that every member is a clique of
        `graph` when given.
        """
        if graph is not None and not all(
            clique.is_clique_of(graph) for clique in self.cliques
        ):
            return False
        return not self.uncovered()

    def to_list(self):
        return [list(clique.members) for clique in self.cliques]

    def __len__(self):
        return self.size


class SetCoverSolver:
    """
    Minimum set cover by depth-first branch and bound.

    Branching picks the uncovered element with the fewest candidate sets and
    tries those sets by decreasing gain. Pruning uses a packing bound: a
    greedy collection of uncovered elements no two of which share a
    candidate set needs one set each.

    Args:
        element_count (int): Elements are ``0 .. element_count-1``, all must be covered.
        sets (list): Bitsets of elements, one per candidate set.
        tracker (SearchTracker, optional): Node counter and budget.

    Raises:
        CoverError: If some element is in no candidate set.
    """

    def __init__(self, element_count, sets, tracker=None):
        self.element_count = element_count
        self.sets = list(sets)
        self.tracker = tracker or SearchTracker()
        self.candidates = [[] for _ in range(element_count)]
        for index, mask in enumerate(self.sets):
            for element in bits(mask):
                self.candidates[element].append(index)
        for element, options in enumerate(self.candidates):
            if not options:
                raise CoverError(
                    f"element {element} is not contained in any candidate set"
                )
        self.candidate_masks = [
            sum(1 << index for index in options) for options in self.candidates
        ]
        self.by_scarcity = sorted(
            range(element_count), key=lambda e: (len(self.candidates[e]), e)
        )
        self.best = None

    def greedy(self):
        """
        Greedy cover (largest gain first, lowest index on ties), an upper bound.
        """
        uncovered = (1 << self.element_count) - 1
        chosen = []
        while uncovered:
            index = max(
                range(len(self.sets)),
                key=lambda i: ((self.sets[i] & uncovered).bit_count(), -i),
            )
            chosen.append(index)
            uncovered &= ~self.sets[index]
        return chosen

    def lower_bound(self, uncovered):
        used = 0
        count = 0
        for element in self.by_scarcity:
            if uncovered >> element & 1 and not self.candidate_masks[element] & used:
                count += 1
                used |= self.candidate_masks[element]
        return count

    def solve(self):
        """
        Returns:
            list: Indices of the sets of a minimum cover, ascending. Among all
            minimum covers this is the lexicographically least index list.
        """
        self.best = self.greedy()
        logger.debug(
            "Set cover of %d elements: greedy incumbent %d",
            self.element_count,
            len(self.best),
        )
        self._search((1 << self.element_count) - 1, [])
        return self._least_cover(len(self.best))

    def _least_cover(self, size):
        """
        The lexicographically least ascending index list of `size` sets that
        covers everything.
        """
        uncovered = (1 << self.element_count) - 1
        chosen = []
        start = 0
        failed = set()
        while uncovered:
            for index in range(start, len(self.sets)):
                rest = uncovered & ~self.sets[index]
                if rest == uncovered:
                    continue
                if self._coverable(rest, size - len(chosen) - 1, index + 1, failed):
                    chosen.append(index)
                    uncovered = rest
                    start = index + 1
                    break
            else:
                raise CoverError(f"no cover of size {size} among the candidate sets")
        return chosen

    def _coverable(self, uncovered, budget, start, failed):
        self.tracker.tick()
        if not uncovered:
            return True
        if budget <= 0 or self.lower_bound(uncovered) > budget:
            return False
        key = (uncovered, budget, start)
        if key in failed:
            return False
        element = min(bits(uncovered), key=lambda e: (len(self.candidates[e]), e))
        for index in self.candidates[element]:
            if index >= start and self._coverable(
                uncovered & ~self.sets[index], budget - 1, start, failed
            ):
                return True
        failed.add(key)
        return False

    def _search(self, uncovered, chosen):
        self.tracker.tick()
        if not uncovered:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
                logger.debug("Set cover incumbent improved to %d", len(chosen))
            return
        if len(chosen) + self.lower_bound(uncovered) >= len(self.best):
            return
        element = min(bits(uncovered), key=lambda e: (len(self.candidates[e]), e))
        options = sorted(
            self.candidates[element],
            key=lambda i: (-(self.sets[i] & uncovered).bit_count(), i),
        )
        for index in options:
            chosen.append(index)
            self._search(uncovered & ~self.sets[index], chosen)
            chosen.pop()


def _normalize_edges(graph, edges):
    normalized = set()
    for edge in edges:
        u, v = edge
        pair = (min(u, v), max(u, v))
        if pair not in graph.edge_set:
            raise CoverError(f"{edge} is not an edge of {graph}")
        normalized.add(pair)
    return tuple(sorted(normalized))


def _edge_cover_sets(graph, target):
    """
    Candidate sets for covering `target`: the maximal cliques as bitsets over
    target indices, keeping the first clique of every distinct bitset.
    """
    seen = {}
    for clique in maximal_clique_masks(graph.adjacency, graph.all_vertices_mask):
        covered = 0
        for index, (u, v) in enumerate(target):
            if clique >> u & 1 and clique >> v & 1:
                covered |= 1 << index
        if covered and covered not in seen:
            seen[covered] = clique
    return list(seen.keys()), list(seen.values())


def theta_E_restricted(edges, graph, tracker=None):  # pylint: disable=invalid-name
    """
    θ_E(F; G): the fewest cliques of `graph` covering every edge of `edges`.

    Args:
        edges (iterable): The edge set F, pairs in either orientation.
        graph (Graph): The host graph G.
        tracker (SearchTracker, optional): Node counter and budget.

    Returns:
        CliqueCover: A minimum edge cover of F; its `size` is θ_E(F; G).

    Raises:
        CoverError: If F is not a subset of E(G).
    """
    target = _normalize_edges(graph, edges)
    if not target:
        return CliqueCover((), (), CoverKind.EDGE)
    sets, cliques = _edge_cover_sets(graph, target)
    chosen = SetCoverSolver(len(target), sets, tracker).solve()
    cover = CliqueCover(
        tuple(sorted(Clique.from_mask(cliques[i]) for i in chosen)),
        target,
        CoverKind.EDGE,
    )
    logger.debug("θ_E(F; %s) = %d for |F| = %d", graph, cover.size, len(target))
    return cover


def theta_E(graph, tracker=None):  # pylint: disable=invalid-name
    """
    θ_E(G), the edge clique cover number, with a minimum cover as witness.
    """
    return theta_E_restricted(graph.edges, graph, tracker)


def theta_V(graph, tracker=None):  # pylint: disable=invalid-name
    """
    θ_V(G), the vertex clique cover number, with a minimum cover as witness.

    The graph without vertices has θ_V = 0 (the empty cover).
    """
    target = tuple(graph.vertices)
    if not target:
        return CliqueCover((), (), CoverKind.VERTEX)
    cliques = maximal_clique_masks(graph.adjacency, graph.all_vertices_mask)
    chosen = SetCoverSolver(graph.n, cliques, tracker).solve()
    return CliqueCover(
        tuple(sorted(Clique.from_mask(cliques[i]) for i in chosen)),
        target,
        CoverKind.VERTEX,
    )


def greedy_edge_cover(graph, edges=None):
    """
    A greedy edge clique cover; only an upper bound on θ_E(F; G).
    """
    target = _normalize_edges(graph, graph.edges if edges is None else edges)
    if not target:
        return CliqueCover((), (), CoverKind.EDGE)
    sets, cliques = _edge_cover_sets(graph, target)
    chosen = SetCoverSolver(len(target), sets).greedy()
    return CliqueCover(
        tuple(sorted(Clique.from_mask(cliques[i]) for i in chosen)),
        target,
        CoverKind.EDGE,
    )


def neighborhood_theta_V(graph, vertex, tracker=None):  # pylint: disable=invalid-name
    """
    θ_V of the subgraph induced by the open neighborhood N_G(v).
    """
    subgraph, _ = induced_subgraph(graph, graph.neighbors(vertex))
    return theta_V(subgraph, tracker).size


def incidence_lower_bound(graph, tracker=None):
    """
    Double-counting lower bound on θ_E(G).

    In an edge clique cover every non-isolated vertex v lies in at least
    θ_V(N_G(v)) cliques, and a clique holds at most ω(G) vertices, so
    θ_E(G) >= ceil(sum_v θ_V(N_G(v)) / ω(G)).
    """
    if not graph.m:
        return 0
    incidences = sum(
        neighborhood_theta_V(graph, v, tracker)
        for v in graph.vertices
        if graph.adjacency[v]
    )
    return math.ceil(incidences / clique_number(graph))
