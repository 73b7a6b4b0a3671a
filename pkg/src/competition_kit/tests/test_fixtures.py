import random
from dataclasses import replace

import pytest

from ..cliques import Clique, maximal_cliques
from ..competition import certificate_to_digraph, competition_graph, verify_certificate
from ..fixtures import (
    FIXTURE_LABELS,
    ICOSAHEDRON_TRIANGLES,
    fixture_icosahedron,
    icosahedron_certificate,
    label,
    load_fixture,
)
from ..generators import icosahedron
from ..graph import is_acyclic, is_isomorphic


@pytest.fixture(name="cert")
def fixture_cert():
    return icosahedron_certificate()


def test_label_table():
    assert [label(f"v{i}") for i in range(1, 10)] == list(range(9))
    assert [label(name) for name in ("vx", "vy", "vz")] == [9, 10, 11]
    assert [label(name) for name in "abcd"] == [12, 13, 14, 15]
    assert len(set(FIXTURE_LABELS.values())) == 16


def test_triangles_cover_every_edge_once_labeled():
    graph = fixture_icosahedron()
    assert graph.n == 12
    assert graph.m == 30
    assert graph.regular_degree() == 5
    assert is_isomorphic(graph, icosahedron())


def test_first_triangle():
    name, members, prey = ICOSAHEDRON_TRIANGLES[0]
    assert (name, prey) == ("S1", "a")
    assert Clique.of(label(v) for v in members) == Clique((0, 1, 2))
    assert Clique((0, 1, 2)) in maximal_cliques(fixture_icosahedron())


def test_certificate_is_valid(cert):
    assert cert.k == 4
    verification = verify_certificate(cert)
    assert verification.valid, verification.diagnostics()


def test_competition_graph_is_icosahedron_plus_four_isolated(cert):
    digraph = certificate_to_digraph(cert)
    assert digraph.n == 16
    assert len(digraph.arcs) == 36
    assert is_acyclic(digraph)
    assert competition_graph(digraph) == fixture_icosahedron().union_isolated(4)


def test_prey_of_the_named_triangles(cert):
    prey_of = {vertex: clique for vertex, clique in zip(cert.order, cert.assignment)}
    assert prey_of[label("a")] == Clique((0, 1, 2))
    assert prey_of[label("v3")] == Clique((0, 1, 3))
    assert prey_of[label("d")] == Clique((2, 4, 9))


def test_shipped_json_matches_the_construction(cert):
    assert load_fixture() == cert


def _mutate(cert, rng):
    """
    One random single-element change that no valid certificate survives.

    Every edge of the icosahedron lies in at most two of the twelve
    triangles, and no edge loses both, so dropping a member always
    uncovers an edge; adding one makes a four-set, never a clique.
    """
    filled = [i for i, clique in enumerate(cert.assignment) if len(clique)]
    kind = rng.choice(["drop", "add", "clear", "k"])
    assignment = list(cert.assignment)
    if kind == "k":
        return replace(cert, k=cert.k + rng.choice([-1, 1]))
    position = rng.choice(filled)
    members = set(assignment[position])
    if kind == "drop":
        members.discard(rng.choice(sorted(members)))
    elif kind == "add":
        members.add(rng.choice([v for v in range(12) if v not in members]))
    else:
        members = set()
    assignment[position] = Clique.of(members)
    return replace(cert, assignment=tuple(assignment))


def test_every_single_mutation_is_rejected(cert):
    rng = random.Random(20240611)
    for _ in range(100):
        mutated = _mutate(cert, rng)
        assert not verify_certificate(mutated).valid, mutated.to_dict()
