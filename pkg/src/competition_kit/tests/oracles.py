"""
Brute-force reference implementations.

Nothing here imports the package's clique, cover or search code; graphs
are read through their edge lists and handed to networkx.
"""

from functools import lru_cache
from itertools import combinations, permutations, product

import networkx as nx
from hypothesis import strategies as st

from ..graph import make_digraph, make_graph


@st.composite
def graphs(draw, min_vertices=0, max_vertices=7):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return make_graph(n)
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return make_graph(n, chosen)


@st.composite
def digraphs(draw, max_vertices=7):
    n = draw(st.integers(2, max_vertices))
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return make_digraph(n, draw(st.lists(st.sampled_from(arcs), unique=True)))


def atlas_graphs(max_vertices, connected=False):
    """
    Every graph with at most `max_vertices` vertices, one per isomorphism class.
    """
    for nx_graph in nx.graph_atlas_g():
        if nx_graph.number_of_nodes() > max_vertices:
            break
        if connected and (
            nx_graph.number_of_nodes() == 0 or not nx.is_connected(nx_graph)
        ):
            continue
        yield make_graph(nx_graph.number_of_nodes(), nx_graph.edges())


def _is_clique(edges, vertices):
    return all((u, v) in edges for u, v in combinations(sorted(vertices), 2))


def all_cliques(graph):
    """
    Every clique including the empty one, by scanning all vertex subsets.
    """
    edges = set(graph.edges)
    return [
        frozenset(subset)
        for size in range(graph.n + 1)
        for subset in combinations(range(graph.n), size)
        if _is_clique(edges, subset)
    ]


def maximal_cliques(graph):
    return sorted(
        tuple(sorted(clique)) for clique in nx.find_cliques(graph.to_networkx())
    )


def _pairs(clique):
    return {(u, v) for u, v in combinations(sorted(clique), 2)}


def _smallest_cover(targets, candidates, covers):
    if not targets:
        return 0
    for size in range(1, len(candidates) + 1):
        for chosen in combinations(candidates, size):
            if all(
                any(covers(candidate, target) for candidate in chosen)
                for target in targets
            ):
                return size
    return None


def theta_E(graph):  # pylint: disable=invalid-name
    return _smallest_cover(
        set(graph.edges), maximal_cliques(graph), lambda c, e: e[0] in c and e[1] in c
    )


def theta_V(graph):  # pylint: disable=invalid-name
    return _smallest_cover(
        set(range(graph.n)), maximal_cliques(graph), lambda c, v: v in c
    )


def competition_number(graph):
    """
    min k over every order of the vertices and every choice of a clique of
    each prefix, the empty one included, the added vertices covering what
    is left with as few cliques as possible.
    """
    cliques = all_cliques(graph)
    edge_cliques = [clique for clique in cliques if len(clique) > 1]
    all_edges = frozenset(graph.edges)

    @lru_cache(maxsize=None)
    def leftover(remaining):
        return _smallest_cover(
            remaining, edge_cliques, lambda c, e: e[0] in c and e[1] in c
        )

    best = leftover(all_edges)
    for order in permutations(range(graph.n)):
        options = [
            [clique for clique in cliques if clique <= frozenset(order[:i])]
            for i in range(graph.n)
        ]
        seen = set()
        for choice in product(*options):
            covered = frozenset().union(*(_pairs(clique) for clique in choice))
            if covered in seen:
                continue
            seen.add(covered)
            best = min(best, leftover(all_edges - covered))
            if best == 0:
                return 0
    return best


def competition_graph_edges(n, predators_of):
    edges = set()
    for predators in predators_of.values():
        edges |= _pairs(predators)
    return edges


def digraph_competition_number(graph, k_max=3):
    """
    Smallest k <= k_max such that some acyclic digraph D on n + k vertices
    has C(D) = G ∪ I_k, by enumerating the digraphs directly.

    Every order of the n + k labels is tried as a topological order, and
    each vertex gets any set of earlier vertices, added ones included, as
    its in-neighborhood as long as that set is a clique of G ∪ I_k (any
    other set would create an edge outside G ∪ I_k). Meant for graphs with
    at most 4 vertices.
    """
    target = set(graph.edges)
    for k in range(k_max + 1):
        total = graph.n + k
        for order in permutations(range(total)):
            choices = []
            for i, prey in enumerate(order):
                earlier = sorted(order[:i])
                subsets = [
                    subset
                    for size in range(len(earlier) + 1)
                    for subset in combinations(earlier, size)
                    if _is_clique(target, subset)
                ]
                choices.append([(prey, subset) for subset in subsets])
            for arcs in product(*choices):
                if competition_graph_edges(total, dict(arcs)) == target:
                    return k
    return None


def least_cover(graph, kind):
    """
    The lexicographically least minimum cover by maximal cliques, `kind`
    being "edge" or "vertex", as a list of sorted member tuples.
    """
    candidates = maximal_cliques(graph)
    if kind == "edge":
        targets = [set(edge) for edge in graph.edges]
    else:
        targets = [{v} for v in range(graph.n)]
    if not targets:
        return []
    for size in range(1, len(candidates) + 1):
        for chosen in combinations(candidates, size):
            if all(any(target <= set(c) for c in chosen) for target in targets):
                return list(chosen)
    return None
