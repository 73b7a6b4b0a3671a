# Defaults used by the library and the command line, each can be overridden
# per call (or with the matching CLI flag).

# Largest subset size the Sano bound is evaluated for in aggregate reports.
DEFAULT_M_MAX = 3

# Exact competition number search limits.
DEFAULT_BUDGET_MS = 10_000
DEFAULT_BUDGET_NODES = 10_000_000
DEFAULT_EXACT_MAX_VERTICES = 10

# Largest vertex count accepted when reading a graph or digraph document.
MAX_GRAPH_VERTICES = 10_000

# Node cap for the exact cover of leftover edges in the greedy upper bound;
# past it a greedy cover is used.
HEURISTIC_COVER_NODES = 100_000

# Expected values checked by `paper-report`.
POLYHEDRA_COMPETITION_NUMBERS = {
    "tetrahedron": 1,
    "hexahedron": 6,
    "octahedron": 2,
    "dodecahedron": 12,
    "icosahedron": 4,
}
ICOSAHEDRON_THETA_E = 12
ICOSAHEDRON_LEMMA_CASES = {
    "triangle": 6,
    "path": 6,
    "edge_plus_vertex": 7,
    "independent": 9,
}
