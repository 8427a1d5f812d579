import json

import numpy as np
import pytest

from sp4osc import cli, suites
from sp4osc.lie_matrix import LABELS, sp4_generators
from sp4osc.report import VerificationReport
from sp4osc.serialize import matrix_from_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return [line.split(",") for line in text.strip().splitlines()[1:]]


def test_spectrum_h_small_cutoff(capsys):
    code, out, _ = run(capsys, "spectrum", "H", "--cutoff", "1")
    assert code == 0
    assert out.splitlines()[0] == "eigenvalue,multiplicity"
    assert rows(out) == [["0.5", "1"], ["1.0", "2"], ["1.5", "1"]]


def test_spectrum_h_minimum(capsys):
    code, out, _ = run(capsys, "spectrum", "H", "--cutoff", "4")
    assert code == 0
    assert rows(out)[0] == ["0.5", "1"]


def test_spectrum_l3_mixes_integers_and_half_integers(capsys):
    _, out, _ = run(capsys, "spectrum", "L3", "--cutoff", "2")
    values = {float(v) for v, _ in rows(out)}
    assert {-1.0, -0.5, 0.0, 0.5, 1.0} <= values


def test_spectrum_j_equals_l3(capsys):
    _, out_j, _ = run(capsys, "spectrum", "J", "--cutoff", "3")
    _, out_l3, _ = run(capsys, "spectrum", "L3", "--cutoff", "3")
    assert out_j == out_l3


@pytest.mark.parametrize("argv", [("spectrum", "H", "--cutoff", "0"), ("spectrum", "X"), ("verify", "--suite", "fock", "--cutoff", "2")])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_unknown_suite_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "matrix", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["suite"] == "matrix"
    assert obj["failed"] == 0
    assert set(obj["checks"][0]) == {"label", "residual", "tolerance", "pass"}


def test_verify_failure_exit_1(capsys, monkeypatch):
    bad = VerificationReport("bad")
    bad.add("broken", 1.0, 1e-12)
    monkeypatch.setattr(suites, "run_suite", lambda *a: bad)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL" in out


def test_verify_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "chiral", "--cutoff", "4", "--json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["failed"] == 0


def test_table_generators_json_round_trip(capsys):
    _, out, _ = run(capsys, "table", "generators", "--format", "json")
    obj = json.loads(out)
    assert obj["ordering"] == ["q1", "q2", "p1", "p2"]
    gens = sp4_generators()
    assert [g["label"] for g in obj["generators"]] == list(LABELS)
    for g in obj["generators"]:
        assert np.array_equal(matrix_from_json(g["matrix"]), gens[g["label"]])


@pytest.mark.parametrize("n,count", [(1, 3), (2, 10), (3, 21)])
def test_table_generators_csv_counts(capsys, n, count):
    _, out, _ = run(capsys, "table", "generators", "--n", str(n), "--format", "csv")
    labels = {r[0] for r in rows(out)}
    assert len(labels) == count


def test_table_structure_pretty(capsys):
    _, out, _ = run(capsys, "table", "structure")
    assert "[L1,L2] = (1i) L3" in out
    assert "[K1,B1] = (1i) H" in out
    assert len(out.strip().splitlines()) == 45


def test_table_structure_json(capsys):
    _, out, _ = run(capsys, "table", "structure", "--format", "json")
    obj = json.loads(out)
    assert obj["max_residual"] < 1e-12
    assert {"i": "L1", "j": "L2", "k": "L3", "re": 0.0, "im": 1.0} in obj["constants"]


def test_table_polynomials(capsys):
    _, out, _ = run(capsys, "table", "polynomials")
    assert "L1: (1/2) q1 q2 + (1/2) p1 p2" in out
    assert "K2: (1/2) q1 p1 + (1/2) q2 p2" in out
    _, out, _ = run(capsys, "table", "polynomials", "--format", "csv")
    assert "H,q1^2,0.25,0.0" in out


def test_table_bad_n(capsys):
    code, _, _ = run(capsys, "table", "generators", "--n", "0")
    assert code == 2
