import json
import os
import subprocess
import sys

import pytest

from superq.cli import main
from superq.double import r_matrix
from superq.hopf import TensorElement
from superq.pbw import get_spec
from superq.rep import RepContext, RepMatrix, c_matrix

SRC = os.path.join(os.path.dirname(__file__), os.pardir, "src")


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_basis_n2(capsys):
    code, rep, _ = run(["centralizer", "basis", "--d", "5", "--mu", "1", "--n", "2"], capsys)
    assert code == 0
    assert rep["words"] == [[], [1], [1, 1]]
    assert rep["command"] == "centralizer basis" and rep["version"] == "0.1.0"


def test_invalid_mu_and_d(capsys):
    code, _, err = run(["rep", "check", "--d", "5", "--mu", "0"], capsys)
    assert code == 2
    assert json.loads(err)["error"] == "InvalidMu"
    with pytest.raises(SystemExit) as exc:
        main(["rep", "check", "--d", "4", "--mu", "1"])
    assert exc.value.code == 2
    code, _, err = run(["rep", "check", "--d", "5"], capsys)
    assert code == 2
    code, _, err = run(["centralizer", "basis", "--d", "5", "--mu", "1", "--n", "5"], capsys)
    assert code == 2 and json.loads(err)["error"] == "CapExceeded"


def test_failing_check_exits_1(capsys):
    code, rep, _ = run(["centralizer", "commutant", "--d", "5", "--mu", "2", "--n", "3"], capsys)
    assert code == 1
    assert rep["first_failure"] == {"commutant_dim": 20, "basis_size": 15}


@pytest.mark.parametrize("argv", [
    ["hopf", "verify", "--d", "3", "--no-exhaustive", "--samples", "30"],
    ["dual", "verify", "--d", "3"],
    ["double", "verify", "--d", "3"],
    ["rep", "check", "--d", "5", "--mu", "2"],
    ["braid", "verify", "--d", "5", "--mu", "1", "--n", "3"],
    ["centralizer", "relations", "--d", "5", "--mu", "1"],
    ["centralizer", "decomposition", "--d", "5", "--mu", "1", "--n", "3"],
    ["centralizer", "commutant", "--d", "5", "--mu", "1", "--n", "2"],
])
def test_verbs_pass(argv, capsys):
    code, rep, _ = run(argv, capsys)
    assert code == 0, rep.get("first_failure")
    assert rep["pass"] is True
    for key in ("command", "d", "mu", "n", "seed", "version"):
        assert key in rep


def test_rmatrix_verify_d3(capsys):
    code, rep, _ = run(["rmatrix", "verify", "--d", "3"], capsys)
    assert code == 0
    names = [c["check"] for c in rep["checks"]]
    assert any("mult" in n and "coeff" in n for n in names)
    assert rep["full"] is True


def test_rmatrix_artifact_round_trip(tmp_path, capsys):
    path = tmp_path / "r3.json"
    code, rep, _ = run(["rmatrix", "--d", "3", "--form", "coeff", "--out", str(path)], capsys)
    assert code == 0 and rep["out"] == str(path)
    obj = json.loads(path.read_text())
    assert TensorElement.from_json(obj, get_spec("ubar", 3)) == r_matrix(3)


def test_cmatrix_artifacts(tmp_path, capsys):
    js, cs = tmp_path / "c.json", tmp_path / "c.csv"
    for p in (js, cs):
        code, rep, _ = run(["rep", "c-matrix", "--d", "5", "--mu", "1", "--out", str(p)], capsys)
        assert code == 0 and rep["equations"] == 16
    c = c_matrix(RepContext(5, 1))
    assert RepMatrix.from_json(json.loads(js.read_text())) == c
    assert cs.read_text() == c.to_csv()


def test_report_file(tmp_path, capsys):
    path = tmp_path / "rep.json"
    code, rep, _ = run(["centralizer", "basis", "--d", "5", "--mu", "1", "--n", "3", "--report", str(path)], capsys)
    assert code == 0 and rep is None
    assert len(json.loads(path.read_text())["words"]) == 20


def test_byte_identical_output():
    argv = [sys.executable, "-m", "superq", "centralizer", "basis", "--d", "5", "--mu", "1", "--n", "3", "--seed", "3"]
    env = {**os.environ, "PYTHONPATH": os.path.abspath(SRC), "PYTHONHASHSEED": "random"}
    outs = [subprocess.run(argv, capture_output=True, env=env, check=True).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]
