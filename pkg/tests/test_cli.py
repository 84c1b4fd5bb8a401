from __future__ import annotations

import json

import pytest

from colorbraid.cli import EXIT_FAIL, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def lines(out):
    return [json.loads(x) for x in out.splitlines() if x.strip()]


def test_orbit(capsys):
    code, out = run(capsys, "orbit", "--seed", "rho23_6", "--gens", "bw")
    assert code == EXIT_OK and lines(out)[0]["size"] == 6


def test_homology_d4_matches_b4(capsys):
    _, out_d4 = run(capsys, "homology", "--coloring", "rho23_8", "--word", "d4")
    _, out_b4 = run(capsys, "homology", "--coloring", "rho23_8", "--word", "b4")
    d4, b4 = lines(out_d4)[0], lines(out_b4)[0]
    assert d4["rank"] == 2 and not d4["identity"] and d4["matrix"] == b4["matrix"]


def test_act_and_liftable(capsys):
    code, out = run(capsys, "act", "d=4: (12)(23)", "b0")
    assert code == EXIT_OK and lines(out)[0]["result"] == "d=4: (13)(12)"
    _, out = run(capsys, "liftable", "rho23_6", "b1")
    assert lines(out)[0]["liftable"] is False


def test_usage_errors(capsys):
    assert run(capsys, "act", "bogus", "b0")[0] == EXIT_USAGE
    assert run(capsys, "act", "rho23_6", "b9")[0] == EXIT_USAGE
    assert run(capsys, "nosuch")[0] == EXIT_USAGE
    assert run(capsys, "homology", "--coloring", "rho23_8", "--word", "b1")[0] == EXIT_USAGE
    assert run(capsys, "orbit", "--seed", "rho23_6", "--cap", "0")[0] == EXIT_USAGE


def test_budget_exhausted(capsys):
    code, out = run(capsys, "reduce", "rho23_6", "d4 b4 d4^-1 b4^-1", "--max-states", "500", "--max-depth", "4")
    assert code == EXIT_UNKNOWN and lines(out)[0]["result"] == "UNKNOWN"


def test_env_budget_and_cli_precedence(capsys, monkeypatch):
    monkeypatch.setenv("COLORBRAID_MAX_STATES", "300")
    code, out = run(capsys, "reduce", "rho23_6", "d4 b4 d4^-1 b4^-1")
    assert code == EXIT_UNKNOWN and lines(out)[0]["explored"] <= 300
    monkeypatch.setenv("COLORBRAID_BFS_CAP", "2")
    assert run(capsys, "orbit", "--seed", "rho23_6")[0] == EXIT_UNKNOWN
    assert run(capsys, "orbit", "--seed", "rho23_6", "--cap", "100")[0] == EXIT_OK


def test_reduce_and_equiv(capsys, tmp_path):
    out_file = tmp_path / "cert.json"
    code, out = run(capsys, "reduce", "rho23_6", "b3^2", "--out", str(out_file))
    assert code == EXIT_OK and lines(out)[0]["result"] == "CERTIFIED"
    code, out = run(capsys, "check-cert", str(out_file))
    assert code == EXIT_OK and lines(out)[0]["replays"]
    obj = json.loads(out_file.read_text())
    obj["steps"] = obj["steps"][1:]
    out_file.write_text(json.dumps(obj))
    assert run(capsys, "check-cert", str(out_file))[0] == EXIT_FAIL
    assert run(capsys, "equiv", "rho23_6", "b3 b3", "b3^-1 b3^-1")[0] == EXIT_OK


def test_moves(capsys, tmp_path):
    code, out = run(capsys, "moves", "list")
    assert code == EXIT_OK and [m["id"] for m in lines(out)] == ["I", "II", "III", "IV", "V"]
    assert run(capsys, "moves", "validate")[0] == EXIT_OK
    code, out = run(capsys, "moves", "derive", "V")
    assert code == EXIT_OK and lines(out)[0]["result"] == "CERTIFIED"
    assert run(capsys, "moves", "derive", "III")[0] == EXIT_UNKNOWN
    bad = {"moves": [{"id": "III", "prefix": [[1, 4], [1, 4], [1, 2], [1, 2], [2, 3], [2, 3]],
                      "lhs": "b3 b2 b4 b3", "min_n": 10}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    assert run(capsys, "moves", "validate", "--file", str(path))[0] == EXIT_FAIL


def test_check_cert_tangle(capsys):
    from importlib import resources
    path = resources.files("colorbraid") / "data" / "derivation_I.json"
    code, out = run(capsys, "check-cert", str(path))
    assert code == EXIT_OK and lines(out)[0]["kind"] == "tangle"


def test_complex_dot_and_lassos(capsys, tmp_path):
    dot = tmp_path / "c.dot"
    code, _ = run(capsys, "complex", "--seed", "rhot4_6", "--dot", str(dot))
    assert code == EXIT_OK and dot.read_text().startswith("graph")
    code, out = run(capsys, "lassos", "--seed", "rho23_6")
    assert code == EXIT_OK and len(lines(out)) > 0


def test_census_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "census", "--n", "5", "--d", "5", "--out", str(a))
    run(capsys, "census", "--n", "5", "--d", "5", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("only, code", [("1,3,6", EXIT_OK), ("5", EXIT_FAIL)])
def test_verify_exit_code(capsys, only, code):
    got, out = run(capsys, "verify", "--only", only, "--n-max", "10")
    assert got == code and len(lines(out)) == len(only.split(","))
