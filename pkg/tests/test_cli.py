import csv
import io
import json

import pytest

from bracketmoments.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_moment_all():
    code, out, err = run("moment", "--n", "2", "--l", "0", "--k", "1", "--mu", "1", "--method", "all")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 5
    assert {r["value_exact"] for r in recs} == {"3"}
    assert list(recs[0]) == ["n", "l", "k", "mu", "method", "value_exact", "value_float", "degenerate_regularized"]
    assert "agreement: OK" in err


def test_moment_rational_mu():
    code, out, _ = run("moment", "--n", "1", "--l", "0", "--k", "0", "--mu", "5/7")
    assert code == 0 and json.loads(out)["value_exact"] == "1"


@pytest.mark.parametrize("argv", [
    ("moment", "--n", "2", "--l", "0", "--k", "-4", "--mu", "1"),
    ("moment", "--n", "2", "--l", "2", "--k", "0"),
    ("moment", "--n", "2", "--l", "0", "--k", "1", "--mu", "0.5"),
    ("gks", "--l", "1", "--k", "-5", "--s", "1", "--mu", "1"),
    ("table", "--n-max", "2", "--k-min", "3", "--k-max", "1"),
])
def test_invalid_input_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2 and err.startswith("error")


def test_invariant_named_in_diagnostic():
    _, _, err = run("moment", "--n", "2", "--l", "0", "--k", "-4", "--mu", "1")
    assert "2l+k+3 > 0 violated" in err


def test_float_mode():
    code, out, _ = run("moment", "--n", "2", "--l", "1", "--k", "0.5", "--mu", "1", "--float")
    rec = json.loads(out)
    assert code == 0 and rec["value_exact"] == "" and float(rec["value_float"]) > 0


def test_table_rows():
    code, out, _ = run("table", "--n-max", "2", "--k-min", "-2", "--k-max", "2", "--mu", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    cell = {(r["n"], r["l"], r["k"]): r["value_exact"] for r in rows}
    assert cell[("2", "1", "-2")] == "1/3"
    _, out, _ = run("table", "--n-max", "1", "--k-min", "0", "--k-max", "0", "--mu", "1")
    assert [r["value_exact"] for r in csv.DictReader(io.StringIO(out))] == ["1"]
    _, out, _ = run("table", "--n-max", "3", "--k-min", "1", "--k-max", "1", "--mu", "1")
    cell = {(r["n"], r["l"]): r["value_exact"] for r in csv.DictReader(io.StringIO(out))}
    # <r> = (3n^2 - l(l+1))/(2n mu) = 27/6 at n=3, l=0
    assert cell[("3", "0")] == "9/2"


def test_table_order_is_n_l_k():
    _, out, _ = run("table", "--n-max", "3", "--k-min", "-1", "--k-max", "2")
    keys = [(int(r["n"]), int(r["l"]), int(r["k"])) for r in csv.DictReader(io.StringIO(out))]
    assert keys == sorted(keys)


def test_csv_json_same_values():
    argv = ("table", "--n-max", "3", "--k-min", "-2", "--k-max", "3", "--mu", "2/3")
    _, c, _ = run(*argv, "--format", "csv")
    _, j, _ = run(*argv, "--format", "json")
    rows = list(csv.DictReader(io.StringIO(c)))
    recs = [json.loads(line) for line in j.splitlines()]
    assert len(rows) == len(recs)
    for r, rec in zip(rows, recs):
        assert r == {**{k: str(v) for k, v in rec.items()}, "degenerate_regularized": str(rec["degenerate_regularized"]).lower()}


def test_output_deterministic():
    argv = ("moment", "--n", "3", "--l", "1", "--k", "2", "--method", "all", "--format", "csv")
    assert run(*argv) == run(*argv)


def test_verify():
    code, out, _ = run("verify", "--n-max", "2")
    assert code == 0 and "EXPECTED-DISCREPANCY" in out
    code, out, _ = run("verify", "--n-max", "2", "--strict-paper")
    assert code == 1 and "(2,0,0,1): paper 2 vs oracle 1" in out


def test_gks():
    code, out, _ = run("gks", "--l", "0", "--k", "0", "--s", "1", "--mu", "1/2")
    assert code == 0
    assert out.splitlines() == ["form_a 12", "form_b 12", "oracle 12", "verdict OK"]
    code, out, _ = run("gks", "--l", "0", "--k", "0", "--s", "0", "--mu", "1/2")
    assert out.splitlines()[0] == "form_a 2"
