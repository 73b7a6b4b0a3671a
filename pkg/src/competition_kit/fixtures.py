"""
The shipped k(icosahedron) <= 4 certificate.

The construction names its vertices v1 .. v9, vx, vy, vz for the
icosahedron and a, b, c, d for the four added isolated vertices. They map
onto integer labels as follows:

    ======  =====
    name    label
    ======  =====
    v1..v9  0..8
    vx      9
    vy      10
    vz      11
    a..d    12..15
    ======  =====

The twelve triangles S1 .. S12 below cover all 30 edges, which fixes the
labeled icosahedron. Each triangle is the in-neighborhood of one prey.
"""

import logging
from pathlib import Path

from .cliques import Clique
from .competition import ConstructionCertificate, read_certificate
from .graph import make_graph

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"

ICOSAHEDRON_FIXTURE = DATA_DIR / "icosahedron_k4.json"

FIXTURE_LABELS = {
    **{f"v{i}": i - 1 for i in range(1, 10)},
    "vx": 9,
    "vy": 10,
    "vz": 11,
    "a": 12,
    "b": 13,
    "c": 14,
    "d": 15,
}

# (name, members, prey)
ICOSAHEDRON_TRIANGLES = (
    ("S1", ("v1", "v2", "v3"), "a"),
    ("S2", ("v1", "v2", "v4"), "v3"),
    ("S3", ("v2", "v5", "v6"), "v1"),
    ("S4", ("v5", "v6", "v7"), "v2"),
    ("S5", ("v4", "v6", "v8"), "v5"),
    ("S6", ("v4", "v8", "vy"), "v6"),
    ("S7", ("v7", "v8", "v9"), "v4"),
    ("S8", ("v7", "v9", "vx"), "v8"),
    ("S9", ("v9", "vy", "vz"), "v7"),
    ("S10", ("v1", "vy", "vz"), "b"),
    ("S11", ("v3", "vx", "vz"), "c"),
    ("S12", ("v3", "v5", "vx"), "d"),
)

# Prey of S9, S8, ... S2 in turn, each after its predators.
# fmt: off
ICOSAHEDRON_ORDER = (
    "v9", "vx", "vy", "vz", "v7", "v8", "v4", "v6",
    "v5", "v2", "v1", "v3", "a", "b", "c", "d",
)
# fmt: on


def label(name):
    return FIXTURE_LABELS[name]


def fixture_icosahedron():
    """
    The icosahedron with the fixture labeling: the union of the pairs of S1 .. S12.
    """
    edges = set()
    for _, members, _ in ICOSAHEDRON_TRIANGLES:
        edges.update(Clique.of(label(v) for v in members).pairs())
    return make_graph(12, edges)


def icosahedron_certificate():
    """
    Build the k = 4 certificate for the icosahedron from the named triangles.
    """
    clique_of_prey = {
        label(prey): Clique.of(label(v) for v in members)
        for _, members, prey in ICOSAHEDRON_TRIANGLES
    }
    order = tuple(label(name) for name in ICOSAHEDRON_ORDER)
    return ConstructionCertificate(
        graph=fixture_icosahedron(),
        k=4,
        order=order,
        assignment=tuple(clique_of_prey.get(v, Clique()) for v in order),
    )


def load_fixture(path=ICOSAHEDRON_FIXTURE):
    """
    Read the shipped certificate document.
    """
    logger.debug("Loading certificate fixture %s", path)
    return read_certificate(path)
