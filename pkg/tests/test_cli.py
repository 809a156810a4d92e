import json
import subprocess
import sys

import pytest

from spincover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_no_command_is_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == 2 and "usage" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--g", "1")
    assert code == 0 and "4" in out.splitlines()[0]
    code, out, _ = run(capsys, "enumerate", "--g", "3", "--epi", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "spincover/1" and doc["count"] == 8


def test_classify_o_json(capsys):
    code, out, _ = run(capsys, "classify-o", "--g", "2", "--rho", "000", "--format", "json")
    assert code == 0 and json.loads(out)["sizes"] == [1, 1, 3, 3]


def test_classify_sp_json(capsys):
    _, out, _ = run(capsys, "classify-sp", "--g", "2", "--r", "0000", "--format", "json")
    doc = json.loads(out)
    assert doc["sizes"] == [2, 2]
    assert sorted(o["label"] for o in doc["orbits"]) == [0, 1]


def test_presentation(capsys):
    _, out, _ = run(capsys, "presentation", "--g", "1", "--psi", "10")
    assert "w0^2 w1^2 k^1" in out


def test_verify_targeted(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "2=4", "--g", "2", "--r", "1010", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"][0]["details"]["sizes"] == [4]
    code, out, _ = run(capsys, "verify", "--theorem", "an", "--g", "2", "--format", "json")
    assert json.loads(out)["results"][0]["details"]["pairs"] == 64


def test_stabilizer(capsys):
    code, out, _ = run(capsys, "stabilizer", "--g", "3", "--alpha", "0")
    assert code == 0 and "match" in out


def test_weak(capsys):
    _, out, _ = run(capsys, "weak", "--g", "2", "--psi", "110", "--psi2", "000", "--format", "json")
    doc = json.loads(out)
    assert doc["equivalent"] and doc["witness"][-1] == "1101"


def test_lift_project_factor(tmp_path, capsys):
    F = tmp_path / "F.txt"
    F.write_text("010\n100\n001\n")
    code, out, _ = run(capsys, "lift", "--g", "2", "--matrix", str(F))
    assert code == 0
    f = tmp_path / "f.txt"
    f.write_text(out)
    _, out, _ = run(capsys, "project", "--g", "2", "--matrix", str(f), "--format", "json")
    assert json.loads(out)["projections"] == [["010", "100", "001"]]
    _, out, _ = run(capsys, "factor", "--g", "2", "--matrix", str(f), "--subspace", "none",
                    "--format", "json")
    assert json.loads(out)["replay_ok"]


@pytest.mark.parametrize("argv", [
    ["classify-o", "--g", "2", "--rho", "01"],
    ["classify-o", "--g", "0"],
    ["verify"],
    ["verify", "--theorem", "nope"],
    ["presentation", "--g", "1", "--psi", "1x"],
    ["lift", "--g", "2", "--matrix", "/nonexistent"],
    ["classify-sp", "--g", "1", "--mode", "bogus"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bad_matrix_kind(tmp_path, capsys):
    m = tmp_path / "m.txt"
    m.write_text("11\n01\n")
    assert run(capsys, "lift", "--g", "1", "--matrix", str(m))[0] == 2
    m.write_text("11\n1\n")
    assert run(capsys, "project", "--g", "1", "--matrix", str(m))[0] == 2


def test_verification_failure_exit_code(monkeypatch, capsys):
    from spincover import verify
    from spincover.action_orth import Report
    monkeypatch.setitem(verify.CHECKS, "kernon", lambda g: Report("kernon", False, {"g": g}))
    code, out, _ = run(capsys, "verify", "--theorem", "kernon")
    assert code == 1 and out.startswith("FAIL")


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "spincover", "classify-sp", "--g", "2", "--r", "1000", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["schema"] == "spincover/1"
