# -*- coding: utf-8 -*-

"""套件登记与套件级报告"""

import pytest

from core.report import Status
from suites import SUITE_HANDLERS, get_suite_handler, list_available_suites, resolve_suites
from suites.base import VerificationSuite
from suites.configuration import ConfigurationSuite
from suites.cremona import CremonaSuite
from suites.lattice import LatticeSuite


def test_registry_order():
    assert list(SUITE_HANDLERS) == ['config', 'lattice', 'isometry', 'threefold', 'chamber', 'cremona']
    assert resolve_suites('all') == list(SUITE_HANDLERS)
    assert resolve_suites('chamber') == ['chamber']
    assert get_suite_handler('lattice') is LatticeSuite
    with pytest.raises(ValueError):
        resolve_suites('nope')


def test_listing():
    items = list_available_suites()
    assert [item['type'] for item in items] == list(SUITE_HANDLERS)
    assert all(item['description'] for item in items)


class _Sample(VerificationSuite):
    name = 'sample'

    def execute(self):
        self.check("ok", "", lambda: (True, {"x": 1}))
        self.check("no", "", lambda: (False, None))
        self.check("boom", "", lambda: 1 // 0)
        self.skip("later", "", "需要外部数据")


def test_check_outcomes(run_config):
    report = _Sample(run_config).run()
    statuses = [c.status for c in report.checks]
    assert statuses == [Status.PASS, Status.FAIL, Status.FAIL, Status.SKIPPED]
    assert "ZeroDivisionError" in report.checks[2].detail
    assert report.counts() == {"PASS": 1, "FAIL": 2, "SKIPPED": 1}


def test_configuration_suite(run_config):
    report = ConfigurationSuite(run_config).run()
    assert report.passed, [c.name for c in report.failures()]
    assert len(report.checks) == 13


def test_lattice_suite(run_config):
    report = LatticeSuite(run_config).run()
    assert report.passed, [c.name for c in report.failures()]


@pytest.mark.slow
def test_cremona_suite(run_config):
    run_config.suite = 'cremona'
    report = CremonaSuite(run_config).run()
    assert report.passed, [(c.name, c.detail) for c in report.failures()]
    names = [c.name for c in report.checks]
    assert names[0] == "specializations"
    assert names[-1] == "specialization_agreement"
    assert any(name.startswith("[0] ") for name in names)
    assert not any(c.status == Status.SKIPPED for c in report.checks)
