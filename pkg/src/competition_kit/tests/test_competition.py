import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from ..cliques import Clique
from ..competition import (
    ConstructionCertificate,
    certificate_problems,
    certificate_to_digraph,
    competition_graph,
    parse_certificate,
    read_certificate,
    render_certificate,
    verify_certificate,
    write_certificate,
)
from ..exceptions import CertificateError, GraphFormatError
from ..generators import complete, path
from ..graph import Digraph, is_acyclic, make_digraph, make_graph
from . import oracles


def k3_certificate():
    return ConstructionCertificate(
        graph=complete(3),
        k=1,
        order=(0, 1, 2, 3),
        assignment=(Clique(), Clique(), Clique(), Clique((0, 1, 2))),
    )


class TestCompetitionGraph:
    def test_no_arcs(self):
        assert competition_graph(Digraph(4)) == make_graph(4)

    def test_two_predators_share_a_prey(self):
        assert competition_graph(make_digraph(3, [(0, 2), (1, 2)])).edges == ((0, 1),)

    def test_digraph_may_have_cycles(self):
        digraph = make_digraph(3, [(0, 1), (1, 0), (2, 0)])
        assert not is_acyclic(digraph)
        assert competition_graph(digraph).edges == ((1, 2),)

    @hypothesis_settings(max_examples=100, deadline=None)
    @given(oracles.digraphs(), st.data())
    def test_adding_arcs_never_removes_edges(self, digraph, data):
        extra = data.draw(
            st.tuples(st.integers(0, digraph.n - 1), st.integers(0, digraph.n - 1))
        )
        if extra[0] == extra[1]:
            return
        larger = make_digraph(digraph.n, digraph.arcs + (extra,))
        assert competition_graph(digraph).edge_set <= competition_graph(larger).edge_set


class TestCertificateToDigraph:
    def test_single_clique_construction(self):
        digraph = certificate_to_digraph(k3_certificate())
        assert digraph.arcs == ((0, 3), (1, 3), (2, 3))
        assert is_acyclic(digraph)

    def test_one_vertex_without_arcs(self):
        cert = ConstructionCertificate(complete(1), 0, (0,), (Clique(),))
        assert certificate_to_digraph(cert) == Digraph(1)

    def test_prefix_violation_names_the_position(self):
        cert = ConstructionCertificate(
            path(3), 0, (0, 1, 2), (Clique(), Clique((0, 1)), Clique())
        )
        with pytest.raises(
            CertificateError, match="prefix violation at position 1"
        ) as info:
            certificate_to_digraph(cert)
        assert info.value.position == 1

    def test_added_vertex_inside_a_clique(self):
        cert = ConstructionCertificate(
            path(2), 1, (0, 1, 2), (Clique(), Clique(), Clique((0, 2)))
        )
        with pytest.raises(CertificateError, match="added vertices"):
            certificate_to_digraph(cert)

    def test_order_must_be_a_permutation(self):
        cert = ConstructionCertificate(path(2), 1, (0, 1), (Clique(), Clique()))
        with pytest.raises(CertificateError, match="permutation"):
            certificate_to_digraph(cert, strict=False)

    def test_lenient_mode_builds_despite_prefix_problems(self):
        cert = ConstructionCertificate(
            path(3), 0, (0, 1, 2), (Clique((1, 2)), Clique((0, 1)), Clique())
        )
        digraph = certificate_to_digraph(cert, strict=False)
        assert (2, 0) in digraph.arcs
        assert (0, 1) in digraph.arcs


class TestVerifyCertificate:
    def test_single_clique_construction_is_valid(self):
        verification = verify_certificate(k3_certificate())
        assert verification
        assert verification.acyclic
        assert verification.diagnostics() == []

    def test_path_with_no_added_vertex(self):
        cert = ConstructionCertificate(path(2), 0, (0, 1), (Clique(), Clique()))
        verification = verify_certificate(cert)
        assert not verification
        assert verification.missing == ((0, 1),)
        assert "missing edge 0-1" in verification.diagnostics()

    def test_non_clique_gives_surplus_edges(self):
        cert = ConstructionCertificate(
            path(3),
            1,
            (0, 1, 2, 3),
            (Clique(), Clique(), Clique((0, 1)), Clique((0, 1, 2))),
        )
        verification = verify_certificate(cert)
        assert not verification
        assert verification.surplus == ((0, 2),)
        assert any("not a clique" in line for line in verification.diagnostics())

    def test_prey_swapped_against_the_order(self):
        cert = ConstructionCertificate(
            path(3),
            1,
            (0, 1, 2, 3),
            (Clique((1, 2)), Clique(), Clique(), Clique((0, 1))),
        )
        verification = verify_certificate(cert)
        assert not verification
        assert any("prefix violation" in line for line in verification.diagnostics())

    def test_cycle_is_reported(self):
        cert = ConstructionCertificate(
            path(2),
            2,
            (0, 1, 2, 3),
            (Clique((1,)), Clique((0,)), Clique((0, 1)), Clique()),
        )
        verification = verify_certificate(cert)
        assert not verification.acyclic
        assert "the digraph has a directed cycle" in verification.diagnostics()

    def test_wrong_assignment_length_is_fatal(self):
        cert = ConstructionCertificate(path(2), 1, (0, 1, 2), (Clique(),))
        verification = verify_certificate(cert)
        assert not verification
        assert certificate_problems(cert)[0].fatal

    def test_to_dict(self):
        data = verify_certificate(k3_certificate()).to_dict()
        assert data == {"valid": True, "missing": [], "surplus": [], "diagnostics": []}


class TestCertificateJson:
    def test_document_layout(self):
        data = k3_certificate().to_dict()
        assert data == {
            "graph": {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]},
            "k": 1,
            "order": [0, 1, 2, 3],
            "assignment": [[], [], [], [0, 1, 2]],
        }

    def test_file_round_trip(self, tmp_path):
        target = tmp_path / "cert.json"
        write_certificate(target, k3_certificate())
        assert read_certificate(target) == k3_certificate()

    def test_rendering_is_stable(self):
        text = render_certificate(k3_certificate())
        assert render_certificate(parse_certificate(text)) == text

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            '{"graph": {"n": 1, "edges": []}, "k": 0, "order": [0]}',
            '{"graph": {"n": 1, "edges": []}, "k": -1, "order": [0], "assignment": [[]]}',
            '{"graph": {"n": 1, "edges": []}, "k": 0, "order": ["0"], "assignment": [[]]}',
            '{"graph": {"n": 1, "edges": []}, "k": 0, "order": [0], "assignment": [0]}',
            '{"graph": {"n": 1}, "k": 0, "order": [0], "assignment": [[]]}',
        ],
    )
    def test_malformed_documents(self, text):
        with pytest.raises(GraphFormatError):
            parse_certificate(text)
