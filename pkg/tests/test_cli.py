from __future__ import annotations

import json
import subprocess
import sys

import pytest

from polyspline.cli import EXIT_INVALID, EXIT_OK, EXIT_VERIFY_FAILED, main
from polyspline.report import parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_analyze_two_squares(capsys):
    code, doc = run_json(capsys, "analyze", "two-squares")
    assert code == EXIT_OK
    assert doc["meta"]["cycles"] == 6
    origin = [row for row in doc["rows"] if row["xi"] == "(0, 0)"]
    assert [row["n"] for row in origin] == [2, 2]
    others = [row for row in doc["rows"] if row["xi"] != "(0, 0)"]
    assert len(others) == 4 and all(row["n"] == 3 for row in others)
    assert origin[0]["c_value"] == "(r+1)^2"


def test_analyze_honeycomb(capsys):
    code, doc = run_json(capsys, "analyze", "honeycomb")
    assert code == EXIT_OK
    assert len(doc["rows"]) == 7 and all(row["n"] == 3 for row in doc["rows"])
    assert doc["meta"]["f_2"] == 7 and doc["meta"]["f1_int"] == 12 and doc["meta"]["f0_int"] == 6


def test_analyze_square(capsys):
    code, out, _ = run(capsys, "analyze", "square")
    assert code == EXIT_OK
    assert "no cycle-carrying xi" in out


@pytest.mark.parametrize(
    "fixture, r, text, columns",
    [
        ("triangle-in-triangle", 4, "2k^2 - 24k + 110", (34, 76)),
        ("triangle-in-triangle-perturbed", 2, "2k^2 - 12k + 25", None),
        ("honeycomb", 0, "7/2k^2 - 3/2k + 2", None),
    ],
)
def test_hp_examples(capsys, fixture, r, text, columns):
    code, doc = run_json(capsys, "hp", fixture, "--r", str(r))
    assert code == EXIT_OK
    (row,) = doc["rows"]
    assert row["hilbert_polynomial"]["text"] == text
    if columns:
        assert (row["edge_constant"], row["cycle_constant"]) == columns
    code, out, _ = run(capsys, "hp", fixture, "--r", str(r))
    assert text in out


def test_hp_several_r(capsys):
    code, doc = run_json(capsys, "hp", "two-squares", "--r", "0", "1", "2")
    assert [row["r"] for row in doc["rows"]] == [0, 1, 2]
    assert doc["rows"][1]["hilbert_polynomial"]["text"] == "4k^2 - 12k + 16"
    assert {"cycles_n2", "cycles_n3"} <= set(doc["rows"][0])


@pytest.mark.parametrize(
    "fixture, r, k, method, expected",
    [
        ("two-squares", 0, 5, "oracle", 102),
        ("square", 3, 2, "oracle", 6),
        ("honeycomb", 1, 10, "formula", 231),
    ],
)
def test_dim_examples(capsys, fixture, r, k, method, expected):
    code, doc = run_json(capsys, "dim", fixture, "--r", str(r), "--k", str(k), "--method", method)
    assert code == EXIT_OK
    assert doc["rows"][0]["dim"] == expected
    assert bool(doc["notes"]) == (method == "formula")


def test_verify_triangle(capsys):
    code, doc = run_json(capsys, "verify", "triangle-in-triangle", "--r", "1", "--kmax", "10")
    assert code == EXIT_OK
    assert doc["meta"]["stabilized"] is True
    assert doc["meta"]["k_star"] <= 8
    assert [row["k"] for row in doc["rows"]] == list(range(11))


def test_verify_square(capsys):
    code, doc = run_json(capsys, "verify", "square", "--r", "2", "--kmax", "4")
    assert code == EXIT_OK and doc["meta"]["k_star"] == 0
    assert all(row["match"] for row in doc["rows"])


def test_verify_vertex_star(capsys):
    code, doc = run_json(capsys, "verify", "vertex-star", "--r", "1", "--kmin", "0", "--kmax", "8")
    assert code == EXIT_OK and doc["meta"]["k_star"] <= 4


def test_verify_no_stabilization(capsys):
    code, out, _ = run(capsys, "verify", "triangle-in-triangle", "--r", "2", "--kmax", "4")
    assert code == EXIT_VERIFY_FAILED
    assert "no stabilization observed" in out


def test_verify_bad_range(capsys):
    code, _, err = run(capsys, "verify", "square", "--r", "0", "--kmin", "5", "--kmax", "2")
    assert code == EXIT_INVALID and "kmin" in err


def test_invalid_input_names_invariant(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [0, 1]], "faces": [[0, 2, 1]]}))
    code, out, err = run(capsys, "hp", str(bad), "--r", "1")
    assert code == EXIT_INVALID
    assert out == ""
    assert "face not convex/CCW" in err

    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == EXIT_INVALID and "malformed document" in err


def test_hole_warning_on_stderr(tmp_path, capsys):
    verts = [(x, y) for y in range(4) for x in range(4)]
    idx = {p: i for i, p in enumerate(verts)}
    faces = [
        [idx[(x, y)], idx[(x + 1, y)], idx[(x + 1, y + 1)], idx[(x, y + 1)]]
        for x in range(3) for y in range(3) if (x, y) != (1, 1)
    ]
    path = tmp_path / "ring.json"
    path.write_text(json.dumps({"vertices": verts, "faces": faces}))
    code, _, err = run(capsys, "analyze", str(path))
    assert code == EXIT_OK and err.startswith("warning:")


@pytest.mark.parametrize("fmt", ["text", "tsv", "json"])
def test_deterministic(capsys, fmt):
    outs = [run(capsys, "hp", "honeycomb", "--r", "0", "1", "--format", fmt)[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "analyze", "two-squares", "--format", fmt)[1] for _ in range(2)]
    assert outs[0] == outs[1]


@pytest.mark.parametrize("fixture", ["honeycomb", "two-squares", "triangle-in-triangle-perturbed"])
def test_json_round_trip(capsys, fixture):
    for r in range(3):
        _, doc = run_json(capsys, "hp", fixture, "--r", str(r))
        a2, a1, a0 = parse_poly(doc["rows"][0]["hilbert_polynomial"])
        for k in (3 * r + 2, 11):
            _, dim = run_json(capsys, "dim", fixture, "--r", str(r), "--k", str(k), "--method", "formula")
            assert a2 * k * k + a1 * k + a0 == dim["rows"][0]["dim"]


def test_tsv_fields(capsys):
    _, out, _ = run(capsys, "verify", "vertex-star", "--r", "1", "--kmax", "5", "--format", "tsv")
    lines = out.splitlines()
    meta = dict(line[1:].split("\t") for line in lines if line.startswith("#"))
    assert meta["r"] == "1" and meta["stabilized"] == "yes"
    body = [line.split("\t") for line in lines if not line.startswith("#")]
    assert body[0] == ["k", "oracle", "formula", "match"]
    assert all(len(row) == 4 for row in body)


def test_no_floats_in_output(capsys):
    _, out, _ = run(capsys, "hp", "honeycomb", "--r", "0", "1", "2", "--format", "json")
    assert "." not in out.replace("...", "")


def test_fixtures_command(capsys):
    code, doc = run_json(capsys, "fixtures")
    assert code == EXIT_OK
    assert {row["name"] for row in doc["rows"]} >= {"square", "honeycomb", "two-squares"}
    code, out, _ = run(capsys, "fixtures", "--export", "square")
    assert json.loads(out)["faces"] == [[0, 1, 2, 3]]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polyspline", "dim", "square", "--r", "0", "--k", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.rstrip().endswith("6")
