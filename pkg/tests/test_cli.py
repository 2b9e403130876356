"""Command line surface: exports, graphs, reports, exit codes."""

import json
import re

from qwedge.cli import main


def _strip_times(obj):
    if isinstance(obj, dict):
        return {k: _strip_times(v) for k, v in obj.items() if k != "time"}
    if isinstance(obj, list):
        return [_strip_times(x) for x in obj]
    return obj


def test_usage_errors_exit_2(tmp_path, capsys):
    assert main(["rep", "--type", "a2even", "--n", "1", "--json", "-"]) == 2
    assert main(["crystal", "--type", "a2odd", "--n", "3", "--k", "1"]) == 2
    out = str(tmp_path / "w.json")
    assert main(["wedge", "--type", "a2even", "--n", "2", "--k", "5", "--json", out]) == 2
    capsys.readouterr()


def test_cap_exit_3(capsys):
    args = ["wedge", "--type", "a2even", "--n", "3", "--k", "3", "--cap", "100"]
    assert main(args) == 3
    assert "cap" in capsys.readouterr().err


def test_crystal_graph_dot_and_json_agree(tmp_path, capsys):
    dot_path = tmp_path / "g.dot"
    json_path = tmp_path / "g.json"
    args = [
        "crystal", "--type", "a2even", "--n", "2", "--k", "2",
        "--dot", str(dot_path), "--json", str(json_path),
    ]
    assert main(args) == 0
    capsys.readouterr()

    dot = dot_path.read_text()
    nodes = re.findall(r"^\s*v\d+ \[label=", dot, flags=re.M)
    dot_edges = {
        (int(a), int(b), int(c))
        for a, b, c in re.findall(r'v(\d+) -> v(\d+) \[label="(\d+)"', dot)
    }
    assert len(nodes) == 10
    assert len(dot_edges) == 13
    assert dot.count('style="dashed"') == 3

    data = json.loads(json_path.read_text())
    assert len(data["vertices"]) == 10
    json_edges = {(e["src"], e["dst"], e["color"]) for e in data["edges"]}
    assert json_edges == dot_edges
    assert all(v["tableau"] for v in data["vertices"])
    assert data["meta"]["convention"] == "forward"
    assert all(ok for _, ok in data["meta"]["checks"])


def test_wedge_export_component_dims(tmp_path, capsys):
    out = tmp_path / "w.json"
    args = ["wedge", "--type", "a2odd", "--n", "3", "--k", "2", "--json", str(out)]
    assert main(args) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert data["dims"] == {"total": 15, "components": [14, 1]}
    assert len(data["basis"]) == 15
    assert len(data["highest_weights"]) == 2


def test_rep_export_shape(tmp_path, capsys):
    out = tmp_path / "r.json"
    args = ["rep", "--type", "c1", "--n", "2", "--json", str(out), "--eval-point", "2"]
    assert main(args) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert data["letters"] == [1, 2, -2, -1]
    assert set(data["matrices"]) == {"e", "f", "t"}
    assert set(data["matrices"]["e"]) == {"0", "1", "2"}
    for triplets in data["matrices"]["t"].values():
        for _, _, value in triplets:
            assert re.fullmatch(r"-?\d+(/\d+)?", value)


def test_rmatrix_export_and_frozen_entry(tmp_path, capsys):
    out = tmp_path / "m.json"
    args = ["rmatrix", "--type", "c1", "--n", "2", "--json", str(out)]
    assert main(args) == 0
    data = json.loads(out.read_text())
    assert data["dimension"] == 16
    assert [c["name"] for c in data["components"]] == ["sym", "alt", "triv"]
    assert sum(c["dim"] for c in data["components"]) == 16

    args = ["rmatrix", "--type", "c1", "--n", "2", "--json", str(out),
            "--eval-point", "3/2"]
    assert main(args) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    entry = next(v for r, c, v in data["entries"] if r == [1, 1] and c == [1, 1])
    assert entry["num"] == [[0, "1"], [4, "-3/2"], [12, "-3/2"], [16, "9/4"]]
    assert entry["den"] == [[0, "1"]]


def test_verify_report_schema_and_determinism(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    base = ["verify", "--suite", "rmatrix", "--max-n", "2"]
    assert main(base + ["--json", str(first)]) == 0
    text = capsys.readouterr().out
    assert text.count("PASS ") == 6
    assert "passed" in text.splitlines()[-1]
    assert main(base + ["--json", str(second)]) == 0
    capsys.readouterr()

    a = json.loads(first.read_text())
    b = json.loads(second.read_text())
    assert set(a) == {"version", "config", "cases", "summary"}
    assert a["summary"] == {"pass": 6, "fail": 0, "skipped": 0}
    for case in a["cases"]:
        assert {"id", "ref", "status", "time"} <= set(case)
    assert _strip_times(a) == _strip_times(b)
