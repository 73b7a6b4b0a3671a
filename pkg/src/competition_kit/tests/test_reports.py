import pytest

from ..budget import SearchTracker
from ..generators import path
from ..reports import PolyhedronRow, RunReport, graph_summary, reproduction_report


@pytest.fixture(name="report", scope="module")
def fixture_report():
    return reproduction_report()


def test_every_value_is_reproduced(report):
    assert report.ok, report.mismatches
    assert [(row.name, row.value) for row in report.rows] == [
        ("tetrahedron", 1),
        ("hexahedron", 6),
        ("octahedron", 2),
        ("dodecahedron", 12),
        ("icosahedron", 4),
    ]


def test_small_solids_are_solved_twice(report):
    rows = {row.name: row for row in report.rows}
    for name in ("tetrahedron", "octahedron"):
        assert rows[name].detail["exact_status"] == "exact"
        assert rows[name].detail["exact_value"] == rows[name].detail["closed_form"]


def test_icosahedron_row(report):
    detail = report.rows[-1].detail
    assert detail["sano_bound"] == 4
    assert detail["certificate_k"] == 4
    assert detail["certificate_valid"]
    assert detail["certificate_graph_is_icosahedron"]


def test_theta_e_of_the_icosahedron(report):
    assert report.theta_e["value"] == 12
    assert report.theta_e["incidence_bound"] == 12
    assert report.theta_e["witness_valid"]


def test_subset_type_table(report):
    assert {name: entry["values"] for name, entry in report.lemma_cases.items()} == {
        "triangle": [6],
        "path": [6],
        "edge_plus_vertex": [7],
        "independent": [9],
    }


def test_render(report):
    text = report.render()
    assert text.splitlines()[0].startswith("solid")
    assert "theta_E(icosahedron) = 12" in text
    assert text.endswith("all values match\n")


def test_to_dict(report):
    data = report.to_dict()
    assert data["ok"] is True
    assert data["mismatches"] == []
    assert len(data["polyhedra"]) == 5


def test_shared_tracker_counts_nodes():
    tracker = SearchTracker()
    reproduction_report(tracker=tracker)
    assert tracker.nodes > 0


def test_row_mismatch():
    row = PolyhedronRow("cube", 6, None, "nothing settled it")
    assert not row.matches
    assert row.to_dict()["matches"] is False


class TestRunReport:
    def test_deterministic_zeroes_timing(self):
        report = RunReport(
            "theta-v",
            {"graph": "g.txt"},
            graph_summary(path(3)),
            {"theta_V": 2},
            12.5,
            7,
        )
        assert report.to_dict(deterministic=True)["timing_ms"] == 0
        assert report.to_dict()["timing_ms"] == 12.5

    def test_layout(self):
        data = RunReport("gen").to_dict()
        assert data == {
            "command": {"name": "gen", "arguments": {}},
            "graph": None,
            "results": {},
            "timing_ms": 0.0,
            "nodes": 0,
        }

    def test_graph_summary(self):
        assert graph_summary(path(3)) == {"n": 3, "m": 2, "degree_sequence": [2, 1, 1]}
