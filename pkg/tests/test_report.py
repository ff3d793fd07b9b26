from __future__ import annotations

import json

from rich.console import Console

from jordan_hopf.report import Check, Report, make_check, render_checks


def test_make_check_status():
    assert make_check("a/b", "ref").status == "pass"
    assert make_check("a/b", "ref", ok=False).status == "fail"
    flagged = make_check("a/b", "ref", ok=False, flagged=True)
    assert flagged.status == "paper-discrepancy"
    # passing flagged identities stay passes
    assert make_check("a/b", "ref", flagged=True).status == "pass"


def test_make_check_copies_params():
    params = {"n": 2}
    check = make_check("a/b", "ref", params)
    params["n"] = 3
    assert check.params == {"n": 2}


def test_check_to_dict_stringifies_values():
    check = Check("a/b", "ref", {"n": 2, "word": ("x", "y"), "c": 1j})
    data = check.to_dict()
    assert data["params"] == {"n": 2, "word": ["x", "y"], "c": "1j"}
    assert data["status"] == "pass"


def test_report_summary_and_exit_code():
    checks = [
        make_check("a/1", "r"),
        make_check("a/2", "r", ok=False, flagged=True),
    ]
    report = Report("commutation", 3, {"k": 1}, checks)
    assert report.summary() == {
        "pass": 1, "fail": 0, "paper-discrepancy": 1, "total": 2,
    }
    assert report.exit_code() == 0
    assert report.exit_code(strict=True) == 1

    report.checks.append(make_check("a/3", "r", ok=False))
    assert report.exit_code() == 1


def test_report_json():
    report = Report("dual", 5, {"field": "F_5"},
                    [make_check("dual/x", "r", {"n": 1})])
    data = json.loads(report.to_json())
    assert data["suite"] == "dual"
    assert data["p"] == 5
    assert data["checks"][0]["id"] == "dual/x"
    assert data["summary"]["total"] == 1


def test_render_checks_folds_passes():
    checks = [
        make_check("a/1", "first"),
        make_check("a/2", "second", ok=False, detail="boom"),
    ]
    console = Console(width=160, record=True)
    console.print(render_checks(checks))
    text = console.export_text()
    assert "boom" in text
    assert "1 pass" in text
    assert "a/1" not in text

    console = Console(width=160, record=True)
    console.print(render_checks(checks, verbose=True))
    assert "a/1" in console.export_text()


def test_report_json_schema():
    report = Report("commutation", 3, {},
                    [make_check("commutation/v^n*y", "vy", {"n": 2},
                                ok=False, detail="-y", flagged=True)])
    data = json.loads(report.to_json())
    assert list(data) == ["suite", "p", "params", "checks", "summary"]
    (check,) = data["checks"]
    assert list(check) == ["id", "paper_ref", "params", "status", "detail"]
    assert check["paper_ref"] == "vy"
    assert check["status"] == "paper-discrepancy"
    assert set(data["summary"]) == {
        "pass", "fail", "paper-discrepancy", "total",
    }


def test_empty_report_is_valid_json():
    data = json.loads(Report("irreps", 3).to_json())
    assert data["checks"] == []
    assert data["summary"]["total"] == 0
