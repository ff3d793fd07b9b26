from __future__ import annotations

import argparse
import json

import numpy as np
import pytest

from jordan_hopf.__main__ import main
from jordan_hopf.cli.verify import _sequences
from jordan_hopf.scalars import FieldCfg


def test_verify_irreps_writes_report(tmp_path):
    out = tmp_path / "irreps.json"
    assert main(["verify", "--suite", "irreps", "--p", "3",
                 "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["suite"] == "irreps"
    assert report["p"] == 3
    assert report["summary"]["fail"] == 0
    assert report["summary"]["total"] > 0


def test_verify_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_verify_rejects_bad_options():
    assert main(["verify", "--suite", "commutation", "--maxdeg", "0"]) == 2
    assert main(["verify", "--suite", "commutation", "--p", "4"]) == 2


def test_prime_only_suite_is_skipped_over_q(tmp_path):
    out = tmp_path / "skipped.json"
    assert main(["verify", "--suite", "irreps", "--rational",
                 "--out", str(out)]) == 0
    assert json.loads(out.read_text())["checks"] == []


def test_strict_fails_on_discrepancies(tmp_path):
    argv = ["verify", "--suite", "dual", "--p", "5", "--maxdeg", "3",
            "--ell", "1", "--sample", "16"]
    out = tmp_path / "dual.json"
    assert main([*argv, "--out", str(out)]) == 0
    assert json.loads(out.read_text())["summary"]["paper-discrepancy"] > 0
    assert main([*argv, "--strict"]) == 1


def test_verify_commutation_over_q():
    assert main(["verify", "--suite", "commutation", "--rational",
                 "--maxdeg", "3"]) == 0


def test_export_presentation(capsys):
    assert main(["export", "presentation", "BV", "--p", "3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("name BV\nfield p=3\n")
    assert "rule y x -> " in out


def test_export_needs_a_name():
    assert main(["export", "presentation"]) == 2


def test_export_irreps(tmp_path):
    out = tmp_path / "irreps.json"
    assert main(["export", "irreps", "--p", "3", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["p"] == 3
    assert [m["dim"] for m in data["modules"]] == [1, 2, 3]


def test_sequence_suite_truncates_at_twelve_or_more(monkeypatch):
    seen = []

    def record(iota, pi, truncation=None, central=False):
        seen.append((iota.name, truncation))
        return []

    monkeypatch.setattr(_sequences, "verify_quotient_sequence", record)
    args = argparse.Namespace(maxdeg=9)
    checks = _sequences.exact_sequences(
        args, FieldCfg.prime(3), np.random.default_rng(0)
    )
    assert dict(seen[:3]) == {
        "R->DH": None, "Z->Dtilde": 12, "OG->Dtilde": 12,
    }
    # the negative control keeps the short truncation
    name, truncation = seen[3]
    assert name.startswith("Z->Dtilde|")
    assert truncation == 9

    statuses = {c.id: c.status for c in checks}
    assert statuses["morphism/DH->usl2"] == "pass"
    assert statuses["morphism/DH->usl2:printed"] == "paper-discrepancy"

    seen.clear()
    _sequences.exact_sequences(
        argparse.Namespace(maxdeg=15), FieldCfg.rational(),
        np.random.default_rng(0),
    )
    assert seen == [("OG->Dtilde", 15)]
