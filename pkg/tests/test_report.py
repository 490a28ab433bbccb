# -*- coding: utf-8 -*-

"""报告结构与摘要"""

import json
from fractions import Fraction

from core.report import (
    EXIT_FAILED, EXIT_OK, CheckResult, Report, Status, SuiteReport, to_jsonable, write_report,
)
from core.surface_lattice import LAMBDA


def _report(elapsed: float, status: Status = Status.PASS) -> Report:
    suite = SuiteReport("lattice")
    suite.add(CheckResult("signature", status, "(1,16)", {"value": Fraction(1, 2)}, elapsed=elapsed))
    suite.add(CheckResult("skipped", Status.SKIPPED, "", detail="no data"))
    suite.stats = {"wall_seconds": elapsed}
    return Report(run={"suite": "lattice", "seed": 7}, suites=[suite],
                  environment={"pid": int(elapsed * 1000)})


def test_to_jsonable():
    assert to_jsonable(Fraction(-3, 4)) == "-3/4"
    assert to_jsonable(Status.FAIL) == "FAIL"
    assert to_jsonable({1: {Fraction(1, 2)}}) == {"1": ["1/2"]}
    assert to_jsonable(LAMBDA)[0] == "1"


def test_digest_ignores_timings():
    assert _report(0.1).digest() == _report(9.9).digest()
    assert _report(0.1).digest() != _report(0.1, Status.FAIL).digest()


def test_exit_codes():
    assert _report(0.1).exit_code() == EXIT_OK
    failing = _report(0.1, Status.FAIL)
    assert failing.exit_code() == EXIT_FAILED
    assert failing.totals() == {"PASS": 0, "FAIL": 1, "SKIPPED": 1}


def test_write_report(tmp_path):
    report = _report(0.1)
    path = tmp_path / "report.json"
    digest = write_report(report, str(path))
    data = json.loads(path.read_text(encoding='utf-8'))
    assert data["digest"] == digest
    assert data["status"] == "PASS"
    check = data["suites"][0]["checks"][0]
    assert check["witness"] == {"value": "1/2"}
    assert "elapsed" in check
