import json

import pytest

from qlift.cli import EXIT_FAIL, EXIT_INADMISSIBLE, EXIT_OK, main

from .conftest import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_lift_dim_prints_729(capsys):
    code, out = run(capsys, "lift", "dim", "--spec", str(FIXTURES / "b2_n3_z3z3.json"), "--format", "text")
    assert code == EXIT_OK
    assert out.strip() == "729"


def test_datum_search(capsys):
    code, out = run(capsys, "datum", "search", "--group", "3,3", "--type", "B2", "--n", "3")
    assert code == EXIT_OK
    assert json.loads(out)["count"] > 0


def test_qbinom_verify(capsys):
    code, out = run(capsys, "qbinom", "verify", "--n-max", "5", "--seed", "7")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["ok"]
    assert all(c["anchor"] for c in rep["checks"])


def test_reports_are_stable(capsys):
    args = ("qbinom", "verify", "--n-max", "4", "--seed", "3")
    _, a = run(capsys, *args)
    _, b = run(capsys, *args)
    assert a == b


def test_confluence_failure_exit_code(capsys):
    code, out = run(capsys, "alg", "confluence", "--pres", str(FIXTURES / "corrupted_trinomial.json"))
    assert code == EXIT_FAIL
    assert json.loads(out)["failures"][0]["overlap"] == "x z t"


def test_inadmissible_exit_code(tmp_path, capsys):
    data = json.loads((FIXTURES / "b2_n3_z3z3.json").read_text())
    data["mu1"] = 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, _ = run(capsys, "lift", "verify", "--spec", str(path))
    assert code == EXIT_INADMISSIBLE


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["lift", "nonsense"])
    assert exc.value.code == 2


def test_normalize_and_delta(capsys):
    code, out = run(capsys, "alg", "normalize", "--pres", str(FIXTURES / "trinomial_q5.json"), "--word", "x z")
    assert code == EXIT_OK and json.loads(out)["normal_form"] == "(zeta(5))*z*x"
    code, out = run(capsys, "hopf", "delta", "--pres", str(FIXTURES / "b2_biproduct_z3z3.json"), "--elt", "x1")
    assert code == EXIT_OK and "(x)" in json.loads(out)["delta"]


def test_ideal_check_and_quasi(capsys, tmp_path):
    code, out = run(capsys, "hopf", "ideal-check", "--spec", str(FIXTURES / "b2_n3_z9z9.json"))
    rep = json.loads(out)
    assert code == EXIT_OK and rep["adjudication"]["adjudicated"] == "q2"
    out_path = tmp_path / "quasi.json"
    code, out = run(capsys, "lift", "quasi", "--spec", str(FIXTURES / "b2_n3_z9z9.json"), "--out", str(out_path))
    assert code == EXIT_OK and json.loads(out_path.read_text())["witness"]["ok"]


def test_nu_table(capsys):
    code, out = run(capsys, "nu", "table", "--n", "5", "--q", "zeta(5)", "--b", "1", "--lambda", "2")
    assert code == EXIT_OK and len(json.loads(out)["nu"]) == 6
