"""
Clique enumeration over bitset adjacency.

All enumerations iterate labels in ascending order and sort their output,
so results are reproducible from run to run.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .graph import bits, to_mask, vertex_subset

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Clique:
    """
    A set of vertex labels, stored sorted.

    A clique does not keep a reference to its host graph; use
    `is_clique_of` to check it against one. Cliques order lexicographically
    by their sorted members.
    """

    members: tuple = ()

    @classmethod
    def of(cls, vertices):
        return cls(tuple(sorted(set(vertices))))

    @classmethod
    def from_mask(cls, mask):
        return cls(tuple(bits(mask)))

    @cached_property
    def mask(self):
        return to_mask(self.members)

    def pairs(self):
        """
        The vertex pairs inside the clique, i.e. the edges it covers.
        """
        return tuple(combinations(self.members, 2))

    def is_clique_of(self, graph):
        return all(v < graph.n for v in self.members) and is_clique_mask(
            graph.adjacency, self.mask
        )

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, vertex):
        return vertex in self.members

    def __str__(self):
        return "{" + ", ".join(str(v) for v in self.members) + "}"


def is_clique_mask(adjacency, mask):
    for v in bits(mask):
        if mask & ~(1 << v) & ~adjacency[v]:
            return False
    return True


def _expand(adjacency, clique, candidates, excluded, found):
    if not candidates and not excluded:
        found.append(clique)
        return
    # Tomita pivot: the vertex covering most candidates; ties go to the lowest label.
    pivot = max(
        bits(candidates | excluded),
        key=lambda u: (adjacency[u] & candidates).bit_count(),
    )
    for v in bits(candidates & ~adjacency[pivot]):
        bit = 1 << v
        _expand(
            adjacency,
            clique | bit,
            candidates & adjacency[v],
            excluded & adjacency[v],
            found,
        )
        candidates &= ~bit
        excluded |= bit


def maximal_clique_masks(adjacency, within):
    """
    Bitsets of the maximal cliques of the subgraph induced by `within`.

    Args:
        adjacency (tuple): Neighbor bitsets of the host graph.
        within (int): Bitset of the vertices to restrict to.

    Returns:
        list: Clique bitsets sorted lexicographically by member list.
    """
    if not within:
        return []
    found = []
    _expand(adjacency, 0, within, 0, found)
    found.sort(key=lambda mask: tuple(bits(mask)))
    return found


def maximal_cliques(graph):
    """
    All inclusion-maximal cliques of `graph`, each once, sorted
    lexicographically. Isolated vertices give singleton cliques.
    """
    masks = maximal_clique_masks(graph.adjacency, graph.all_vertices_mask)
    logger.debug("%s has %d maximal cliques", graph, len(masks))
    return [Clique.from_mask(mask) for mask in masks]


def clique_masks_within(adjacency, allowed):
    """
    Bitsets of every clique (the empty one included) inside `allowed`,
    ordered by size and then lexicographically.
    """
    found = [0]

    def extend(clique, candidates):
        for v in bits(candidates):
            grown = clique | 1 << v
            found.append(grown)
            higher = ~((1 << (v + 1)) - 1)
            extend(grown, candidates & adjacency[v] & higher)

    extend(0, allowed)
    found.sort(key=lambda mask: (mask.bit_count(), tuple(bits(mask))))
    return found


def cliques_within(graph, allowed):
    """
    Every clique of `graph` whose members lie in `allowed`, including the
    empty clique and singletons.

    Raises:
        GraphError: If `allowed` has a member outside the graph.
    """
    mask = to_mask(vertex_subset(graph, allowed))
    return [
        Clique.from_mask(found) for found in clique_masks_within(graph.adjacency, mask)
    ]


def is_clique(graph, subset):
    """
    True iff the members of `subset` are pairwise adjacent; the empty set is a clique.

    Raises:
        GraphError: If `subset` has a member outside the graph.
    """
    return is_clique_mask(graph.adjacency, to_mask(vertex_subset(graph, subset)))


def clique_number(graph):
    """
    ω(G), the size of a largest clique (0 for the graph without vertices).
    """
    return max((len(clique) for clique in maximal_cliques(graph)), default=0)
