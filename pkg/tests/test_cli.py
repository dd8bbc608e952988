import json
import math
import subprocess
import sys

import pytest

from cyclicarea.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_area_square(capsys):
    code, out, _ = run(capsys, "area", "--spec", '{"kind": "side_lengths", "sides": [2, 2, 2, 2]}')
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"area", "factor_pair", "n", "apex"}
    assert doc["area"] == pytest.approx(4.0, rel=1e-14)
    assert doc["factor_pair"]["f1"] == pytest.approx(4.0, rel=1e-14)
    assert doc["factor_pair"]["f2"] == pytest.approx(4.0, rel=1e-14)
    assert (doc["n"], doc["apex"]) == (2, 0)


def test_area_all_apices(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text('{"kind": "random", "seed": 7, "vertex_count": 8}')
    code, out, _ = run(capsys, "area", str(f), "--all-apices", "--apex", "3")
    doc = json.loads(out)
    assert doc["apex"] == 3
    assert len(doc["apex_sweep"]) == 8
    assert doc["apex_spread"] < 1e-8


def test_solve_radius(capsys):
    code, out, _ = run(capsys, "solve-radius", "--spec", "[3, 4, 5]")
    assert code == 0
    assert json.loads(out) == {"radius": 2.5, "center_inside": True}
    code, out, _ = run(capsys, "solve-radius", "--sides", "2", "2", "3.9")
    assert json.loads(out)["center_inside"] is False


def test_verify_pentagon(capsys):
    code, out, _ = run(capsys, "verify", "--spec", '{"kind": "side_lengths", "sides": [1, 1, 1, 1, 1]}')
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert abs(doc["area"] - (5 / 4) / math.tan(math.pi / 5)) < 1e-9


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--spec", "[1, 1.2, 0.9, 1.4]", "--tol", "oracle_equivalence=1e-300")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--spec", "[2, 2, 2, 2]", "--apex", "1")
    doc = json.loads(out)
    assert doc["apex"] == 1 and doc["n"] == 2
    assert [t["vertices"] for t in doc["triangles"]] == [[1, 2, 3], [1, 3, 0]]
    for t in doc["triangles"]:
        assert set(t) == {"index", "vertices", "r", "s", "t", "p", "rho", "area"}
        assert t["area"] == pytest.approx(2.0, rel=1e-14)
    d = doc["diagonals"][0]
    assert d["s_t"] == pytest.approx(d["s_r"], rel=1e-14)


def test_fuzz_command(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed_count": 5, "vertex_counts": [4, 5]}))
    code, out, _ = run(capsys, "fuzz", "--config", str(cfg), "--seed-start", "10")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert doc["config"]["seed_start"] == 10
    assert doc["identities"]["oracle_equivalence"]["trials"] == 10


def test_text_format(capsys):
    code, out, _ = run(capsys, "area", "--spec", "[3, 4, 5]", "--format", "text")
    assert code == 0
    assert out.startswith("area: 6")


@pytest.mark.parametrize("spec", [
    "[1, 1, 5]",
    '{"kind": "side_lengths", "sides": [1, 1, 1], "radius": 2}',
    "not json",
    '{"kind": "central_angles", "radius": 1, "gaps": [1, 1, 1]}',
])
def test_infeasible_exit_1(capsys, spec):
    code, out, err = run(capsys, "area", "--spec", spec)
    assert code == 1 and out == ""
    assert "error" in json.loads(err)


def test_text_errors_plain(capsys):
    code, _, err = run(capsys, "area", "--spec", "[1, 1, 5]", "--format", "text")
    assert code == 1 and err.startswith("error: InfeasibleSidesError")


def test_numeric_exit_2(capsys, monkeypatch):
    from cyclicarea import cli
    from cyclicarea.errors import ConvergenceError

    def boom(sides):
        raise ConvergenceError("no")
    monkeypatch.setattr(cli, "circumradius_from_sides", boom)
    code, _, err = run(capsys, "solve-radius", "--sides", "1", "1", "1")
    assert code == 2 and json.loads(err)["error"] == "ConvergenceError"


@pytest.mark.parametrize("argv", [
    ["bogus"], [], ["area"], ["area", "--apex", "x", "--spec", "[1,1,1]"],
    ["area", "--apex", "9", "--spec", "[1,1,1]"], ["verify", "--spec", "[1,1,1]", "--tol", "junk"],
])
def test_usage_exit_64(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 64


def test_json_seventeen_digits():
    assert dumps(0.1) == "0.10000000000000001"
    assert dumps(4.0) == "4.0"
    assert float(dumps(math.pi)) == math.pi
    assert dumps({"a": [1, 2.5, True, None]}) == '{\n  "a": [\n    1,\n    2.5,\n    true,\n    null\n  ]\n}'


def test_byte_identical_subprocess(tmp_path):
    f = tmp_path / "p.json"
    f.write_text('{"kind": "side_lengths", "sides": [1.5, 2, 2.5, 1.1, 0.7]}')
    cmd = [sys.executable, "-m", "cyclicarea", "verify", str(f)]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["pass"]
