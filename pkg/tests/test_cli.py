import csv
import io
import json

import pytest

from twobridge import riley_polynomial, validate
from twobridge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_riley_json_payload(capsys):
    code, out, _ = run_cli(capsys, "riley", "5", "3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["command"] == "riley"
    assert report["results"]["lambda"] == [1, 1, 1]
    assert report["results"]["degree"] == 2
    assert "toolkit_version" in report and "timing_ms" in report


def test_json_round_trips_through_recomputation(capsys):
    for p, q in [(3, 1), (7, 3), (11, 5)]:
        _, out, _ = run_cli(capsys, "riley", str(p), str(q), "--format", "json")
        report = json.loads(out)
        echoed = report["inputs"]
        lam = riley_polynomial(validate(echoed["p"], echoed["q"]))
        assert list(lam.coeffs) == report["results"]["lambda"]


def test_certify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "certify", "3", "1")
    assert code == 0
    assert "certified" in out
    assert "torus form" in out  # informational note


def test_present_mirror_note(capsys):
    code, out, _ = run_cli(capsys, "present", "5", "2")
    assert code == 0
    assert "(5,3)" in out and "mirror" in out


def test_usage_error_exit_code_and_help(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["riley", "5"])
    assert exc.value.code == 1

    code, _, err = run_cli(capsys, "riley", "6", "1")
    assert code == 1
    assert "error:" in err
    assert "usage: twobridge riley" in err


def test_math_failure_is_not_a_crash(capsys):
    code, _, err = run_cli(capsys, "alexander", "9", "3")
    assert code == 1
    assert "gcd" in err


def test_scan_certify_text(capsys):
    code, out, _ = run_cli(capsys, "scan", "--pmax", "9")
    assert code == 0
    assert "0 failed" in out
    assert "(9,5)" in out


def test_scan_obstruct_reports_survivors(capsys):
    code, out, _ = run_cli(capsys, "scan", "--pmax", "9", "--obstruct")
    assert code == 0
    assert "1 not ruled out" in out
    assert "(9,1) -> (3,1)" in out


def test_scan_csv_parses(capsys):
    code, out, _ = run_cli(capsys, "scan", "--pmax", "9", "--certify", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "q", "kind", "gcd_is_one", "mod2_divides", "verdict"]
    assert ["3", "1", "torus", "True", "True", "certified"] in rows


def test_scan_csv_refuses_two_tables(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--pmax", "9", "--certify", "--obstruct", "--format", "csv"])
    assert exc.value.code == 1


def test_jobs_never_changes_output_bytes(capsys):
    base = {}
    for fmt in ("text", "csv"):
        _, out1, _ = run_cli(capsys, "scan", "--pmax", "13", "--certify", "--format", fmt, "--jobs", "1")
        _, out4, _ = run_cli(capsys, "scan", "--pmax", "13", "--certify", "--format", fmt, "--jobs", "4")
        assert out1 == out4
        base[fmt] = out1
    # json carries wall-clock timing_ms; everything else must match exactly
    _, j1, _ = run_cli(capsys, "scan", "--pmax", "13", "--certify", "--format", "json", "--jobs", "1")
    _, j4, _ = run_cli(capsys, "scan", "--pmax", "13", "--certify", "--format", "json", "--jobs", "4")
    r1, r4 = json.loads(j1), json.loads(j4)
    r1.pop("timing_ms"), r4.pop("timing_ms")
    r1["inputs"].pop("jobs"), r4["inputs"].pop("jobs")
    assert r1 == r4


def test_verify_exit_and_payload(capsys):
    code, out, _ = run_cli(capsys, "verify", "5", "3", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["all_ok"] is True
    assert len(report["results"]["roots"]) == 2
    for root in report["results"]["roots"]:
        assert root["relation_residual"] < 1e-9
        assert root["longitude_nonzero"] is True


def test_obstruct_csv_row(capsys):
    code, out, _ = run_cli(capsys, "obstruct", "5", "3", "3", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ["5", "3", "3", "1", "False", "False", "ruled_out"]
