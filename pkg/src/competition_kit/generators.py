"""
Generators for the standard families used throughout the package.

The five Platonic-solid graphs are built from compact combinatorial
descriptions rather than coordinates:

* tetrahedron: K_4
* hexahedron: the generalized Petersen graph GP(4, 1), i.e. the 3-cube
* octahedron: K_{2,2,2}
* dodecahedron: GP(10, 2)
* icosahedron: a gyroelongated pentagonal bipyramid (two apexes over a
  pentagonal antiprism)
"""

import logging
from itertools import combinations

from .exceptions import UnknownFamilyError
from .graph import make_graph

logger = logging.getLogger(__name__)


def _require_int(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise UnknownFamilyError(
            f"{name} must be an integer >= {minimum}, got {value!r}"
        )


def complete(n):
    _require_int("n", n, 0)
    return make_graph(n, combinations(range(n), 2))


def complete_multipartite(*parts):
    """
    K_{p_1, ..., p_r}: parts are labeled consecutively, every pair from
    different parts is an edge.
    """
    if not parts:
        raise UnknownFamilyError("complete_multipartite needs at least one part size")
    for size in parts:
        _require_int("part size", size, 1)
    owner = []
    for index, size in enumerate(parts):
        owner.extend([index] * size)
    edges = (
        (u, v) for u, v in combinations(range(len(owner)), 2) if owner[u] != owner[v]
    )
    return make_graph(len(owner), edges)


def complete_bipartite(n, m):
    return complete_multipartite(n, m)


def complete_tripartite(n):
    """
    K_{n,n,n}.
    """
    return complete_multipartite(n, n, n)


def cycle(n):
    _require_int("n", n, 3)
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n):
    """
    The path on `n` vertices (P_3 has two edges).
    """
    _require_int("n", n, 1)
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def empty(n):
    """
    I_n, the edgeless graph.
    """
    _require_int("n", n, 0)
    return make_graph(n)


def generalized_petersen(n, k):
    """
    GP(n, k): outer cycle ``0 .. n-1``, spokes ``i -- n+i`` and inner star
    polygon ``n+i -- n+(i+k mod n)``.
    """
    _require_int("n", n, 3)
    _require_int("k", k, 1)
    if 2 * k >= n:
        raise UnknownFamilyError(f"GP(n, k) needs 2k < n, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return make_graph(2 * n, edges)


def tetrahedron():
    return complete(4)


def hexahedron():
    return generalized_petersen(4, 1)


def octahedron():
    return complete_tripartite(2)


def dodecahedron():
    return generalized_petersen(10, 2)


def icosahedron():
    """
    Apex 0 over the upper pentagon 1..5, apex 11 under the lower pentagon
    6..10, joined as an antiprism: ``u_i -- l_i`` and ``u_i -- l_{i+1}``.
    """
    top, bottom = 0, 11
    upper = [1 + i for i in range(5)]
    lower = [6 + i for i in range(5)]
    edges = []
    for i in range(5):
        following = (i + 1) % 5
        edges.append((top, upper[i]))
        edges.append((bottom, lower[i]))
        edges.append((upper[i], upper[following]))
        edges.append((lower[i], lower[following]))
        edges.append((upper[i], lower[i]))
        edges.append((upper[i], lower[following]))
    return make_graph(12, edges)


POLYHEDRA = {
    "tetrahedron": tetrahedron,
    "hexahedron": hexahedron,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}

# name -> (builder, minimum parameter count, maximum parameter count or None)
FAMILIES = {
    **{name: (builder, 0, 0) for name, builder in POLYHEDRA.items()},
    "cube": (hexahedron, 0, 0),
    "complete": (complete, 1, 1),
    "complete_multipartite": (complete_multipartite, 1, None),
    "multipartite": (complete_multipartite, 1, None),
    "complete_bipartite": (complete_bipartite, 2, 2),
    "tripartite": (complete_tripartite, 1, 1),
    "cycle": (cycle, 1, 1),
    "path": (path, 1, 1),
    "empty": (empty, 1, 1),
    "generalized_petersen": (generalized_petersen, 2, 2),
}


def generate(family, *params):
    """
    Build a graph of a named family.

    Args:
        family (str): One of the keys of `FAMILIES` (dashes are accepted for
            underscores).
        *params (int): The family parameters, e.g. ``generate("complete", 4)``.

    Returns:
        Graph: The generated graph.

    Raises:
        UnknownFamilyError: If the family is unknown or the parameters are invalid.
    """
    key = family.strip().lower().replace("-", "_")
    if key not in FAMILIES:
        raise UnknownFamilyError(
            f"unknown graph family {family!r}, "
            f"expected one of {', '.join(sorted(FAMILIES))}"
        )
    builder, low, high = FAMILIES[key]
    if len(params) < low or (high is not None and len(params) > high):
        expected = str(low) if low == high else f"at least {low}"
        raise UnknownFamilyError(
            f"{key} takes {expected} parameter(s), got {len(params)}"
        )
    graph = builder(*params)
    logger.debug("Generated %s%s: %s", key, params, graph)
    return graph
