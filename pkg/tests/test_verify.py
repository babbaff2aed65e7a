from __future__ import annotations

import json
import shutil

import pytest

from cliquepart.cli import main
from cliquepart.constructions import fixture_dir
from cliquepart.verify import VerificationReport, run_all


@pytest.fixture(scope="module")
def report():
    return run_all(seed=0)


def test_all_short_checks_pass(report):
    assert report.passed, report.summary()
    names = [c.claim for c in report.checks]
    assert len(names) == len(set(names))


def test_report_round_trip(report):
    text = report.to_json()
    assert VerificationReport.from_json(text).to_json() == text


def test_corrupted_fixture_is_isolated(tmp_path, capsys):
    for f in fixture_dir().glob("*.txt"):
        shutil.copy(f, tmp_path / f.name)
    (tmp_path / "table2.txt").write_text("# name: broken\nA0,B0,A0\n")
    out = tmp_path / "report.json"
    code = main(["paper-verify", "--fixtures", str(tmp_path), "--report", str(out)])
    capsys.readouterr()
    assert code == 2
    data = json.loads(out.read_text())
    failed = [c["claim"] for c in data["checks"] if not c["passed"]]
    assert failed == ["(4,4) table fixtures"]
    assert len(data["checks"]) == 15
