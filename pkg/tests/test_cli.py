"""Command-line surface: expansion, stats, verification, reports."""

import json

from click.testing import CliRunner

from qcert.cli import main
from qcert.series import series_from_json


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_expand_overpartition_gf():
    res = run("expand", "--form", "overpartition-gf", "--order", "4")
    assert res.exit_code == 0
    assert res.output.strip() == "1 + 2*q + 4*q^2 + 8*q^3 + 14*q^4 + O(q^5)"


def test_expand_crank_rank_product_constant():
    res = run("expand", "--form", "eta5-crank-rank-5n4-rhs", "--order", "0")
    assert res.exit_code == 0
    assert res.output.strip().startswith("-5")


def test_expand_unknown_form_errors():
    res = run("expand", "--form", "nope", "--order", "3")
    assert res.exit_code != 0


def test_expand_json_round_trips():
    res = run("expand", "--form", "partition-gf", "--order", "8", "--format", "json")
    assert res.exit_code == 0
    series = series_from_json(json.loads(res.output))
    assert [int(c) for c in series.coeffs] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_expand_mod_view_matches_exact():
    exact = run("expand", "--form", "partition-gf", "--order", "10", "--format", "csv")
    mod = run("expand", "--form", "partition-gf", "--order", "10", "--mod", "5", "--format", "csv")
    assert exact.exit_code == 0 and mod.exit_code == 0
    exact_rows = dict(
        line.split(",") for line in exact.output.strip().splitlines()[1:]
    )
    mod_rows = dict(line.split(",") for line in mod.output.strip().splitlines()[1:])
    for i in range(11):
        want = int(exact_rows.get(str(i), "0")) % 5
        assert int(mod_rows[str(i)]) == want


def test_stat_zero_row():
    res = run("stat", "--family", "NT", "--k", "5", "--n", "0")
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "n,residue,value"
    assert [l.split(",")[2] for l in lines[1:]] == ["0"] * 5


def test_stat_theorem_row_combination():
    res = run("stat", "--family", "NTbar2", "--k", "5", "--n", "2", "--format", "json")
    rows = {r["residue"]: r["value"] for r in json.loads(res.output)["rows"]}
    assert (rows[1] - rows[4] + 2 * rows[2] - 2 * rows[3]) % 5 == 0


def test_stat_momega_relation_row():
    res = run("stat", "--family", "Momega", "--k", "5", "--n", "4", "--format", "json")
    rows = {r["residue"]: r["value"] for r in json.loads(res.output)["rows"]}
    assert rows[1] - rows[4] == 2 * rows[3] - 2 * rows[2]


def test_stat_range_and_bounds():
    res = run("stat", "--family", "NT", "--k", "3", "--n-range", "0:6")
    assert res.exit_code == 0
    assert len(res.output.strip().splitlines()) == 1 + 7 * 3
    res = run("stat", "--family", "NTpair", "--k", "3", "--n", "70")
    assert res.exit_code != 0  # beyond the pair enumeration bound


def test_verify_single_check_and_report(tmp_path):
    report = tmp_path / "report.json"
    res = run(
        "verify", "--only", "ID-KERNEL3-BILAT", "--order", "40",
        "--report", str(report),
    )
    assert res.exit_code == 0
    payload = json.loads(report.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["checks"][0]["id"] == "ID-KERNEL3-BILAT"
    assert payload["checks"][0]["status"] == "PASS"


def test_verify_insufficient_order_is_error():
    res = run("verify", "--only", "T1", "--order", "3")
    assert res.exit_code == 2
    assert "InsufficientOrder" in res.output or "progression" in res.output


def test_verify_json_output():
    res = run("verify", "--only", "ID-NTDIFF-OVM2-1-5", "--order", "30", "--format", "json")
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert payload["summary"]["pass"] == 1


def test_verify_enum_bound_override():
    res = run("verify", "--only", "CJ-MW5-EQ-5N4", "--order", "20",
              "--enum-bound", "partition=20")
    assert res.exit_code == 0
    res = run("verify", "--only", "T1", "--enum-bound", "bogus=3")
    assert res.exit_code == 2


def test_verify_seed_changes_only_samples():
    res = run("verify", "--only", "X-PAIR", "--order", "6", "--seed", "3")
    assert res.exit_code == 0 and "PASS" in res.output


def test_crosscheck_dyson():
    res = run("crosscheck", "--family", "dyson", "--max-n", "16")
    assert res.exit_code == 0
    assert "PASS" in res.output


def test_list_checks():
    res = run("list-checks")
    assert res.exit_code == 0
    assert "T1" in res.output and "X-PAIR" in res.output
    res = run("list-checks", "--format", "json")
    ids = {c["id"] for c in json.loads(res.output)}
    assert {"T1", "T2A", "T2B", "T3"} <= ids
