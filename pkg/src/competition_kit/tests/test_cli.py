import json

import pytest

from ..cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from ..fixtures import ICOSAHEDRON_FIXTURE
from ..generators import icosahedron, octahedron
from ..serialization import read_graph, write_graph


@pytest.fixture(name="icosahedron_file")
def fixture_icosahedron_file(tmp_path):
    target = tmp_path / "icosahedron.json"
    write_graph(target, icosahedron())
    return str(target)


@pytest.fixture(name="octahedron_file")
def fixture_octahedron_file(tmp_path):
    target = tmp_path / "octahedron.txt"
    write_graph(target, octahedron())
    return str(target)


def run_json(capsys, *argv):
    code = main([*argv, "--json", "--deterministic"])
    return code, json.loads(capsys.readouterr().out)


class TestGenerate:
    def test_edge_list_on_stdout(self, capsys):
        assert main(["gen", "cycle", "4"]) == EXIT_OK
        assert capsys.readouterr().out == "4 4\n0 1\n0 3\n1 2\n2 3\n"

    def test_json_on_stdout(self, capsys):
        assert main(["gen", "complete", "3", "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {
            "n": 3,
            "edges": [[0, 1], [0, 2], [1, 2]],
        }

    def test_output_file(self, tmp_path):
        target = tmp_path / "g.txt"
        argv = ["gen", "generalized-petersen", "5", "2", "-o", str(target)]
        assert main(argv) == EXIT_OK
        graph = read_graph(target)
        assert (graph.n, graph.m) == (10, 15)

    def test_unknown_family(self, capsys):
        assert main(["gen", "moebius", "3"]) == EXIT_USAGE
        assert "unknown graph family" in capsys.readouterr().err

    def test_wrong_parameter_count(self, capsys):
        assert main(["gen", "cycle"]) == EXIT_USAGE
        assert "competition-kit: error:" in capsys.readouterr().err


class TestUsage:
    def test_missing_subcommand(self):
        assert main([]) == EXIT_USAGE

    def test_negative_budget(self, octahedron_file):
        assert main(["exact", octahedron_file, "--budget-ms", "-1"]) == EXIT_USAGE

    def test_zero_m_max(self, octahedron_file):
        assert main(["bounds", octahedron_file, "--m-max", "0"]) == EXIT_USAGE

    def test_missing_graph_file(self, tmp_path, capsys):
        assert main(["theta-v", str(tmp_path / "nothing.txt")]) == EXIT_USAGE
        assert "cannot read" in capsys.readouterr().err

    def test_malformed_graph_file(self, tmp_path):
        target = tmp_path / "broken.txt"
        target.write_text("3 2\n0 1\n", encoding="utf-8")
        assert main(["theta-e", str(target)]) == EXIT_USAGE

    def test_vertex_count_above_the_limit(self, tmp_path, capsys):
        target = tmp_path / "huge.txt"
        target.write_text("10000000000 0\n", encoding="utf-8")
        assert main(["theta-v", str(target)]) == EXIT_USAGE
        assert "exceeds the limit" in capsys.readouterr().err


class TestBounds:
    def test_icosahedron(self, capsys, icosahedron_file):
        code, data = run_json(capsys, "bounds", icosahedron_file)
        assert code == EXIT_OK
        assert data["command"] == {
            "name": "bounds",
            "arguments": {"graph": icosahedron_file, "m_max": 3},
        }
        assert data["graph"]["degree_sequence"] == [5] * 12
        assert data["results"]["best_lower"] == 4
        assert data["timing_ms"] == 0

    def test_text_output(self, capsys, octahedron_file):
        assert main(["bounds", octahedron_file]) == EXIT_OK
        out = capsys.readouterr().out
        assert "best lower bound: 2" in out
        assert "exact: 2" in out

    def test_deterministic_output_is_stable(self, capsys, icosahedron_file):
        main(["bounds", icosahedron_file, "--json", "--deterministic"])
        first = capsys.readouterr().out
        main(["bounds", icosahedron_file, "--json", "--deterministic"])
        assert capsys.readouterr().out == first


class TestExact:
    def test_octahedron(self, capsys, octahedron_file):
        code, data = run_json(capsys, "exact", octahedron_file)
        assert code == EXIT_OK
        assert data["results"]["status"] == "exact"
        assert data["results"]["value"] == 2
        assert data["results"]["certificate"]["k"] == 2

    def test_budget_exhausted_still_succeeds(self, capsys, octahedron_file):
        code, data = run_json(capsys, "exact", octahedron_file, "--budget-nodes", "0")
        assert code == EXIT_OK
        assert data["results"]["status"] == "inconclusive"
        assert data["results"]["value"] is None

    def test_text_output(self, capsys, octahedron_file):
        assert main(["exact", octahedron_file]) == EXIT_OK
        assert "k = 2" in capsys.readouterr().out


class TestThetaCommands:
    def test_theta_e(self, capsys, icosahedron_file):
        code, data = run_json(capsys, "theta-e", icosahedron_file)
        assert code == EXIT_OK
        assert data["results"]["theta_E"] == 12
        assert len(data["results"]["cover"]) == 12

    def test_theta_e_of_a_subset(self, capsys, icosahedron_file):
        code, data = run_json(capsys, "theta-e", icosahedron_file, "--subset", "0,1,2")
        assert code == EXIT_OK
        assert data["results"]["subset"] == [0, 1, 2]
        assert data["results"]["theta_E_restricted"] == 6

    def test_theta_e_subset_outside_the_graph(self, icosahedron_file):
        assert main(["theta-e", icosahedron_file, "--subset", "0,40"]) == EXIT_USAGE

    def test_theta_v(self, capsys, octahedron_file):
        code, data = run_json(capsys, "theta-v", octahedron_file)
        assert code == EXIT_OK
        assert data["results"]["theta_V"] == 2


class TestVerify:
    def test_shipped_fixture(self, capsys):
        assert main(["verify", str(ICOSAHEDRON_FIXTURE)]) == EXIT_OK
        assert "valid: k(G) <= 4" in capsys.readouterr().out

    def test_mutated_fixture(self, capsys, tmp_path):
        document = json.loads(ICOSAHEDRON_FIXTURE.read_text(encoding="utf-8"))
        document["assignment"][4] = document["assignment"][4][:2]
        target = tmp_path / "mutated.json"
        target.write_text(json.dumps(document), encoding="utf-8")
        code, data = run_json(capsys, "verify", str(target))
        assert code == EXIT_FAILURE
        assert data["results"]["valid"] is False
        assert any(
            line.startswith("missing edge") for line in data["results"]["diagnostics"]
        )

    def test_clique_member_placed_later_in_the_order(self, capsys, tmp_path):
        document = json.loads(ICOSAHEDRON_FIXTURE.read_text(encoding="utf-8"))
        # Vertex 2 sits at position 11.
        document["assignment"][4] = document["assignment"][4] + [2]
        target = tmp_path / "late_member.json"
        target.write_text(json.dumps(document), encoding="utf-8")
        code, data = run_json(capsys, "verify", str(target))
        assert code == EXIT_FAILURE
        assert data["results"]["valid"] is False
        assert any(
            line.startswith("prefix violation at position 4")
            for line in data["results"]["diagnostics"]
        )

    def test_malformed_certificate(self, tmp_path):
        target = tmp_path / "broken.json"
        target.write_text("{", encoding="utf-8")
        assert main(["verify", str(target)]) == EXIT_USAGE


def test_paper_report(capsys):
    code, data = run_json(capsys, "paper-report")
    assert code == EXIT_OK
    assert data["results"]["ok"] is True
    assert [row["value"] for row in data["results"]["polyhedra"]] == [1, 6, 2, 12, 4]
