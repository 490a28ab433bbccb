# -*- coding: utf-8 -*-

"""命令行入口"""

import json

import pytest

from core.report import EXIT_ERROR, EXIT_FAILED, EXIT_OK
from main import build_config_from_args, main, parse_arguments


def test_parse_verify():
    args = parse_arguments(['verify', 'cremona', '--samples', '5', '--seed', '7', '--no-parallel'])
    assert args.command == 'verify'
    config = build_config_from_args(args)
    assert config == {'suite': 'cremona', 'samples': 5, 'seed': 7, 'parallel': {'enabled': False}}


def test_parse_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        parse_arguments(['verify', 'everything'])


def test_quiet_and_symbolic():
    args = parse_arguments(['verify', 'all', '--symbolic', '-q'])
    config = build_config_from_args(args)
    assert config['symbolic'] is True
    assert config['log_level'] == 'WARNING'


def test_verify_config_suite(settings_file, tmp_path):
    output = tmp_path / "out.json"
    code = main(['verify', 'config', '--settings', settings_file, '-o', str(output)])
    assert code == EXIT_OK
    data = json.loads(output.read_text(encoding='utf-8'))
    assert [s["suite"] for s in data["suites"]] == ["config"]
    assert data["run"]["seed"] == 11
    assert data["keum_digest"] is None


def test_digest_is_stable(settings_file, tmp_path):
    digests = []
    for k in range(2):
        output = tmp_path / f"out{k}.json"
        main(['verify', 'lattice', '--settings', settings_file, '-o', str(output)])
        digests.append(json.loads(output.read_text(encoding='utf-8'))["digest"])
    assert digests[0] == digests[1]


def test_bad_config_value(settings_file, tmp_path):
    override = tmp_path / "override.json"
    override.write_text(json.dumps({"samples": -1}), encoding='utf-8')
    assert main(['verify', 'config', '--settings', settings_file, '--config', str(override)]) == EXIT_ERROR


def test_import_keum_empty_file(settings_file, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("", encoding='utf-8')
    assert main(['import-keum', str(empty), '--settings', settings_file]) == EXIT_ERROR


def test_import_keum_missing_file(settings_file, tmp_path):
    assert main(['import-keum', str(tmp_path / "nope.json"), '--settings', settings_file]) == EXIT_ERROR


def test_import_keum_identity_entries(settings_file, identity_keum_file, tmp_path):
    output = tmp_path / "keum_report.json"
    code = main(['import-keum', identity_keum_file, '--settings', settings_file, '-o', str(output)])
    assert code == EXIT_FAILED
    data = json.loads(output.read_text(encoding='utf-8'))
    checks = data["suites"][0]["checks"]
    assert checks[0]["name"] == "entry_count"
    assert len(checks) == 3
    assert all(c["status"] == "FAIL" for c in checks)
    assert len(data["keum_digest"]) == 64
    assert data["run"]["random_checks"] == 100


def test_verify_with_broken_keum_file(settings_file, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[]", encoding='utf-8')
    assert main(['verify', 'config', '--settings', settings_file, '--keum-file', str(bad)]) == EXIT_ERROR
