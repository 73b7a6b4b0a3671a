"""
Simple undirected graphs and digraphs over dense integer labels.

Vertices are always the labels ``0 .. n-1``. Both types are immutable value
objects; adjacency is kept as integer bitsets so the search code can do set
algebra with ``&`` and ``|``.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .exceptions import GraphError

logger = logging.getLogger(__name__)


def bits(mask):
    """
    Yield the set bits of `mask` in ascending order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _check_label(n, v):
    if not isinstance(v, int) or isinstance(v, bool):
        raise GraphError(f"vertex label {v!r} is not an integer")
    if v < 0 or v >= n:
        raise GraphError(f"vertex {v} is out of range for a graph on {n} vertices")


@dataclass(frozen=True)
class Graph:
    """
    A simple undirected graph on the vertices ``0 .. n-1``.

    Use `make_graph` to build one from arbitrary input; the constructor
    expects already normalized data.

    Attributes:
        n (int): Number of vertices, isolated vertices included.
        edges (tuple): Sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(
                f"vertex count must be a non-negative integer, got {self.n!r}"
            )
        previous = None
        for edge in self.edges:
            u, v = edge
            _check_label(self.n, u)
            _check_label(self.n, v)
            if u >= v:
                raise GraphError(f"edge {edge} is not normalized as (u, v) with u < v")
            if previous is not None and edge <= previous:
                raise GraphError("edges must be sorted and free of duplicates")
            previous = edge

    @property
    def m(self):
        return len(self.edges)

    @property
    def vertices(self):
        return range(self.n)

    @cached_property
    def adjacency(self):
        """
        Tuple of neighbor bitsets, one per vertex.
        """
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_set(self):
        return frozenset(self.edges)

    @cached_property
    def edge_index(self):
        """
        Map from edge pair to its position in `edges`.
        """
        return {edge: i for i, edge in enumerate(self.edges)}

    @property
    def all_vertices_mask(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return u != v and bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v):
        _check_label(self.n, v)
        return tuple(bits(self.adjacency[v]))

    def degree(self, v):
        _check_label(self.n, v)
        return self.adjacency[v].bit_count()

    def degree_sequence(self):
        """
        Degrees sorted in non-increasing order.
        """
        return tuple(sorted((adj.bit_count() for adj in self.adjacency), reverse=True))

    def regular_degree(self):
        """
        Return the common degree if the graph is regular, otherwise None.
        """
        degrees = set(adj.bit_count() for adj in self.adjacency)
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def isolated_vertices(self):
        return tuple(v for v in self.vertices if not self.adjacency[v])

    def is_connected(self):
        """
        Connectivity test; the empty graph and K_1 count as connected.
        """
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adjacency[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.all_vertices_mask

    def is_triangle_free(self):
        return all(not self.adjacency[u] & self.adjacency[v] for u, v in self.edges)

    def union_isolated(self, k):
        """
        Return G ∪ I_k, the graph with `k` extra isolated vertices labeled n .. n+k-1.
        """
        if k < 0:
            raise GraphError(
                "the number of isolated vertices to add must be non-negative"
            )
        return Graph(self.n + k, self.edges)

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices)
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Digraph:
    """
    A loopless digraph on the vertices ``0 .. n-1``.

    Acyclicity is not enforced, use `is_acyclic` to query it.

    Attributes:
        n (int): Number of vertices.
        arcs (tuple): Sorted tuple of ``(u, v)`` arcs, ``u != v``.
    """

    n: int
    arcs: tuple = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(
                f"vertex count must be a non-negative integer, got {self.n!r}"
            )
        previous = None
        for arc in self.arcs:
            u, v = arc
            _check_label(self.n, u)
            _check_label(self.n, v)
            if u == v:
                raise GraphError(f"arc {arc} is a loop")
            if previous is not None and arc <= previous:
                raise GraphError("arcs must be sorted and free of duplicates")
            previous = arc

    @cached_property
    def in_neighbors(self):
        """
        Tuple of in-neighbor bitsets, one per vertex (the predators of each prey).
        """
        preds = [0] * self.n
        for u, v in self.arcs:
            preds[v] |= 1 << u
        return tuple(preds)

    @cached_property
    def out_neighbors(self):
        succs = [0] * self.n
        for u, v in self.arcs:
            succs[u] |= 1 << v
        return tuple(succs)

    def to_networkx(self):
        nx_digraph = nx.DiGraph()
        nx_digraph.add_nodes_from(range(self.n))
        nx_digraph.add_edges_from(self.arcs)
        return nx_digraph


@dataclass(frozen=True)
class VertexOrdering:
    """
    A permutation of the vertex labels ``0 .. n-1``.
    """

    order: tuple

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise GraphError(
                f"ordering {list(self.order)} is not a permutation "
                f"of 0..{len(self.order) - 1}"
            )

    @cached_property
    def positions(self):
        position = [0] * len(self.order)
        for i, v in enumerate(self.order):
            position[v] = i
        return tuple(position)

    def validates(self, digraph):
        """
        Check that every arc of `digraph` goes from an earlier to a later position.
        """
        if digraph.n != len(self.order):
            return False
        return all(self.positions[u] < self.positions[v] for u, v in digraph.arcs)

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


@dataclass(frozen=True)
class AcyclicityResult:
    """
    Outcome of `is_acyclic`: an acyclic ordering witness or a directed cycle witness.
    """

    acyclic: bool
    ordering: VertexOrdering | None = None
    cycle: tuple | None = None

    def __bool__(self):
        return self.acyclic


def _normalize_pair(pair, n, what):
    try:
        u, v = pair
    except (TypeError, ValueError) as exc:
        raise GraphError(f"{what} {pair!r} is not a pair of vertices") from exc
    _check_label(n, u)
    _check_label(n, v)
    if u == v:
        raise GraphError(f"{what} {pair!r} is a loop")
    return u, v


def make_graph(n, edges=()):
    """
    Build a normalized graph from a vertex count and an iterable of pairs.

    Duplicate edges (in either orientation) are merged.

    Args:
        n (int): Number of vertices.
        edges (iterable): Pairs of vertex labels.

    Returns:
        Graph: The normalized graph.

    Raises:
        GraphError: If an edge is a loop or has an endpoint outside ``0 .. n-1``.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    normalized = set()
    count = 0
    for pair in edges:
        u, v = _normalize_pair(pair, n, "edge")
        normalized.add((min(u, v), max(u, v)))
        count += 1
    if count != len(normalized):
        logger.warning("Dropped %d duplicate edges", count - len(normalized))
    return Graph(n, tuple(sorted(normalized)))


def make_digraph(n, arcs=()):
    """
    Build a digraph from a vertex count and an iterable of ``(tail, head)`` pairs.

    Raises:
        GraphError: If an arc is a loop or has an endpoint outside ``0 .. n-1``.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    normalized = set(_normalize_pair(pair, n, "arc") for pair in arcs)
    return Digraph(n, tuple(sorted(normalized)))


def vertex_subset(graph, members):
    """
    Validate `members` against `graph` and return them as a frozenset.

    Raises:
        GraphError: If a member is not a vertex of the graph.
    """
    subset = frozenset(members)
    for v in subset:
        _check_label(graph.n, v)
    return subset


def is_acyclic(digraph):
    """
    Decide whether `digraph` is acyclic.

    Returns:
        AcyclicityResult: With the lexicographically least acyclic ordering
        when acyclic, or the vertices of a directed cycle otherwise.
    """
    nx_digraph = digraph.to_networkx()
    try:
        order = tuple(nx.lexicographical_topological_sort(nx_digraph))
    except nx.NetworkXUnfeasible:
        cycle = nx.find_cycle(nx_digraph, orientation="original")
        return AcyclicityResult(False, cycle=tuple(u for u, _, _ in cycle))
    return AcyclicityResult(True, ordering=VertexOrdering(order))


def open_neighborhood(graph, v):
    """
    N_G(v) as a frozenset.
    """
    return frozenset(graph.neighbors(v))


def neighborhood_closed(graph, subset):
    """
    N_G[U]: the members of `subset` together with every vertex adjacent to one of them.
    """
    subset = vertex_subset(graph, subset)
    mask = to_mask(subset)
    for v in subset:
        mask |= graph.adjacency[v]
    return frozenset(bits(mask))


def incident_edges(graph, subset):
    """
    E_G[U]: the edges with at least one endpoint in `subset`, as a sorted tuple.
    """
    subset = vertex_subset(graph, subset)
    return tuple(edge for edge in graph.edges if edge[0] in subset or edge[1] in subset)


def induced_subgraph(graph, subset):
    """
    G[W] relabeled onto ``0 .. |W|-1``.

    Members keep their relative order, so the new label of a vertex is its
    rank inside `subset`.

    Returns:
        tuple: ``(subgraph, label_map)`` where ``label_map[i]`` is the
        original label of new vertex ``i``.
    """
    label_map = tuple(sorted(vertex_subset(graph, subset)))
    relabel = {old: new for new, old in enumerate(label_map)}
    edges = tuple(
        (relabel[u], relabel[v])
        for u, v in graph.edges
        if u in relabel and v in relabel
    )
    return Graph(len(label_map), edges), label_map


def is_isomorphic(first, second):
    """
    Exhaustive isomorphism test, meant for the small graphs of the test suite.
    """
    if (first.n, first.m, first.degree_sequence()) != (
        second.n,
        second.m,
        second.degree_sequence(),
    ):
        return False
    return nx.is_isomorphic(first.to_networkx(), second.to_networkx())
