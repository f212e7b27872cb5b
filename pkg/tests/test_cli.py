"""End-to-end command line behavior: pipelines, reports, exit codes."""

import json
import subprocess
import sys

import pytest

from stringraph import Graph
from stringraph.cli import main
from stringraph.fileio import graph_text, parse_graph_text
from tests.conftest import er_graph


def _write_graph(tmp_path, G, name="g.txt"):
    path = tmp_path / name
    path.write_text(graph_text(G))
    return str(path)


def _run(tmp_path, *args, out="out.json"):
    """Run one command writing to a file; returns (exit code, parsed report)."""
    dest = tmp_path / out
    code = main([*args, "-o", str(dest)])
    text = dest.read_text() if dest.exists() else ""
    try:
        return code, json.loads(text)
    except json.JSONDecodeError:
        return code, text


def test_gen_build_separator_pipeline(tmp_path):
    fam = tmp_path / "fam.json"
    assert main(["gen", "--kind", "random_segments", "--count", "12",
                 "--seed", "7", "-o", str(fam)]) == 0
    graph = tmp_path / "g.txt"
    assert main(["build-graph", str(fam), "-o", str(graph)]) == 0
    G = parse_graph_text(graph.read_text())
    assert G.n == 12
    code, report = _run(tmp_path, "separator", str(graph))
    assert code == 0
    assert report["verification"]["status"] == "pass"
    res = report["result"]
    assert len(res["S"]) + len(res["V1"]) + len(res["V2"]) == 12


def test_build_graph_from_drawing(tmp_path):
    drawing = tmp_path / "d.json"
    assert main(["gen", "--kind", "convex_chords", "--count", "6",
                 "--seed", "1", "-o", str(drawing)]) == 0
    graph = tmp_path / "g.txt"
    assert main(["build-graph", str(drawing), "-o", str(graph)]) == 0
    G = parse_graph_text(graph.read_text())
    assert (G.n, G.m) == (15, 15)


@pytest.mark.parametrize("op,flags,graph_builder", [
    ("independent", ["--s", "2"], lambda: Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])),
    ("qindep", ["--s", "3", "--q", "2"], lambda: er_graph(12, 0.3, 3)),
    ("kr1free", ["--r", "3"], lambda: Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])),
    ("halfclique", ["--r", "4"], lambda: Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])),
    ("densecore", ["--epsilon", "0.5"], lambda: er_graph(15, 0.4, 4)),
    ("multipartite", ["--alpha", "0.3"], lambda: Graph.from_edges(
        6, [(u, v) for u in range(6) for v in range(u + 1, 6) if abs(u - v) != 3])),
])
def test_extract_operations_verify(tmp_path, op, flags, graph_builder):
    path = _write_graph(tmp_path, graph_builder())
    code, report = _run(tmp_path, "extract", op, path, *flags)
    assert code == 0
    assert report["verification"]["status"] == "pass"
    assert report["operation"] == f"extract:{op}"
    assert report["result"]["outcome"] == "ok"


def test_extract_missing_flag_is_usage_error(tmp_path):
    path = _write_graph(tmp_path, er_graph(6, 0.3, 1))
    code, _ = _run(tmp_path, "extract", "independent", path)
    assert code == 4


def test_extract_precondition_violation_attaches_witness(tmp_path):
    K4 = Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    path = _write_graph(tmp_path, K4)
    code, report = _run(tmp_path, "extract", "kr1free", path, "--r", "3")
    assert code == 3
    assert report["result"]["outcome"] == "PreconditionViolated"
    assert report["result"]["witness"]["kind"] == "clique"
    assert report["result"]["witness"]["vertices"] == [0, 1, 2]


def test_color_or_clique_command(tmp_path):
    path = _write_graph(tmp_path, er_graph(40, 0.2, 9))
    code, report = _run(tmp_path, "color-or-clique", path, "--epsilon", "0.5")
    assert code == 0
    assert report["result"]["witness"]["kind"] in ("coloring", "clique")
    assert report["verification"]["status"] == "pass"


def test_qp_check_and_sparse(tmp_path):
    drawing = tmp_path / "d.json"
    main(["gen", "--kind", "convex_chords", "--count", "6", "--seed", "1",
          "-o", str(drawing)])
    code, report = _run(tmp_path, "qp", "check", str(drawing), "--r", "3")
    assert code == 0
    assert report["result"]["quasiplanar"] is False
    assert report["result"]["witness"] == [2, 7, 11]
    code, report = _run(tmp_path, "qp", "check", str(drawing), "--r", "4")
    assert code == 0
    assert report["result"]["quasiplanar"] is True
    code, report = _run(tmp_path, "qp", "sparse", str(drawing), "--s", "3")
    assert code == 0
    assert report["verification"]["status"] == "pass"
    assert len(report["result"]["witness"]["vertices"]) == 15


def test_qp_bound_report(tmp_path):
    code, report = _run(tmp_path, "qp", "bound", "--n", "256", "--s", "3",
                        "--edges", "1820")
    assert code == 0
    assert report["result"]["bound"] == pytest.approx(256 * (8 / 3) ** 2)
    assert report["result"]["holds"] is True


def test_oracle_commands(tmp_path):
    C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    path = _write_graph(tmp_path, C5)
    code, report = _run(tmp_path, "oracle", "mis", path)
    assert code == 0 and report["result"]["vertices"] == [0, 2]
    code, report = _run(tmp_path, "oracle", "clique", path)
    assert code == 0 and report["result"]["vertices"] == [0, 1]
    code, report = _run(tmp_path, "oracle", "kpfree", path, "--p", "2")
    assert code == 0 and report["result"]["vertices"] == [0, 2]
    code, report = _run(tmp_path, "oracle", "sep", path)
    assert code == 0 and len(report["result"]["S"]) == 1
    code, report = _run(tmp_path, "oracle", "biclique", path)
    assert code == 0 and report["result"]["t"] == 1
    drawing = tmp_path / "d.json"
    main(["gen", "--kind", "convex_chords", "--count", "6", "--seed", "1",
          "-o", str(drawing)])
    code, report = _run(tmp_path, "oracle", "crossings", str(drawing), "--r", "3")
    assert code == 0 and report["result"]["found"] is True
    code, report = _run(tmp_path, "oracle", "crossings", str(drawing), "--r", "4")
    assert code == 0 and report["result"]["found"] is False


def test_oracle_size_cap_exit_code(tmp_path):
    path = _write_graph(tmp_path, er_graph(20, 0.2, 2))
    dest = tmp_path / "cap.json"
    assert main(["oracle", "sep", str(path), "-o", str(dest)]) == 5


def test_parse_failures_exit_four(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["build-graph", str(bad)]) == 4
    missing = tmp_path / "nope.json"
    assert main(["build-graph", str(missing)]) == 4
    badgraph = tmp_path / "bad.txt"
    badgraph.write_text("2 1\n0 9\n")
    assert main(["separator", str(badgraph)]) == 4


def test_unknown_params_key_exit_four(tmp_path):
    path = _write_graph(tmp_path, er_graph(6, 0.3, 1))
    params = tmp_path / "p.json"
    params.write_text('{"c_quadruple": 1}')
    assert main(["extract", "densecore", str(path), "--epsilon", "0.5",
                 "--params", str(params)]) == 4


def test_usage_error_exit_four(tmp_path):
    assert main(["separator"]) == 4
    assert main(["qp"]) == 4


def test_params_file_overrides_constants(tmp_path):
    path = _write_graph(tmp_path, er_graph(12, 0.35, 5))
    params = tmp_path / "p.json"
    params.write_text('{"c": 0.02, "separator_strategy": "bfs_layer"}')
    code, report = _run(tmp_path, "extract", "densecore", path,
                        "--epsilon", "0.5", "--params", str(params))
    assert code == 0
    assert report["parameters"]["params"]["c"] == 0.02
    assert report["parameters"]["params"]["separator_strategy"] == "bfs_layer"


def test_verify_off_skips_revalidation(tmp_path):
    path = _write_graph(tmp_path, er_graph(10, 0.3, 6))
    code, report = _run(tmp_path, "separator", path, "--verify", "off")
    assert code == 0
    assert report["verification"]["status"] == "skipped"


def test_timings_flag_adds_wall_clock(tmp_path):
    path = _write_graph(tmp_path, er_graph(10, 0.3, 6))
    code, report = _run(tmp_path, "separator", path, "--timings")
    assert code == 0
    assert "wall_seconds" in report["timings"]


def test_reports_are_byte_identical(tmp_path):
    path = _write_graph(tmp_path, er_graph(14, 0.4, 8))
    outs = []
    for k in range(3):
        dest = tmp_path / f"rep{k}.json"
        assert main(["extract", "qindep", path, "--s", "3", "--q", "2",
                     "-o", str(dest)]) == 0
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_survey_csv_shape(tmp_path):
    dest = tmp_path / "survey.csv"
    assert main(["survey", "--kind", "random_segments", "--sizes", "20,40",
                 "--trials", "2", "--seed", "3", "-o", str(dest)]) == 0
    lines = dest.read_text().strip().splitlines()
    assert lines[0] == "size,median_edges,median_separator"
    assert len(lines) == 4 and lines[-1].startswith("# fitted_beta=")


def test_stdin_input_via_subprocess(tmp_path):
    fam_json = subprocess.run(
        [sys.executable, "-m", "stringraph.cli", "gen", "--kind",
         "random_segments", "--count", "5", "--seed", "2"],
        capture_output=True, text=True, check=True).stdout
    proc = subprocess.run(
        [sys.executable, "-m", "stringraph.cli", "build-graph", "-"],
        input=fam_json, capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_graph_text(proc.stdout).n == 5
