# -*- coding: utf-8 -*-

"""配置分层与校验"""

import json
import os

import pytest

from core.config import (
    ConfigManager, RunConfig, deep_merge, env_overrides, get_resource_path,
    load_json_config, load_settings_with_override,
)


def test_deep_merge_nested():
    base = {"parallel": {"enabled": True, "max_workers": 4}, "seed": 7}
    merged = deep_merge(base, {"parallel": {"max_workers": 2}, "samples": 3})
    assert merged == {"parallel": {"enabled": True, "max_workers": 2}, "seed": 7, "samples": 3}
    assert base["parallel"]["max_workers"] == 4


def test_env_overrides():
    env = {"KUMMER_SEED": "42", "KUMMER_SAMPLES": "", "KUMMER_KEUM_FILE": "k.json"}
    assert env_overrides(env) == {"seed": 42, "keum_file": "k.json"}


def test_env_overrides_bad_int():
    with pytest.raises(ValueError):
        env_overrides({"KUMMER_SAMPLES": "many"})


def test_load_json_config(tmp_path):
    assert load_json_config(str(tmp_path / "missing.json")) is None
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding='utf-8')
    with pytest.raises(ValueError):
        load_json_config(str(bad))


def test_inline_defaults(tmp_path):
    manager = ConfigManager({}, settings_path=str(tmp_path / "missing.json"))
    assert manager.get('suite') == 'all'
    assert manager.get('random_checks') == 100
    assert manager.get('seed') == 7
    assert manager.get('samples') == 5


def test_shipped_settings():
    data = load_json_config(get_resource_path('settings.json'))
    assert data['random_checks'] == 100
    manager = ConfigManager({}, settings_path=get_resource_path('settings.json'))
    assert RunConfig.from_config(manager).random_checks == 100


def test_settings_file(settings_file):
    manager = ConfigManager({"seed": 3}, settings_path=settings_file)
    config = RunConfig.from_config(manager)
    assert config.seed == 3
    assert config.samples == 2
    assert config.parallel is False


@pytest.mark.parametrize("override", [
    {"suite": "everything"},
    {"samples": 0},
    {"sweep": "some"},
    {"face_method": "guess"},
    {"log_level": "LOUD"},
    {"parallel": {"max_workers": 0}},
    {"cremona": {"line_samples": 2}},
])
def test_invalid_values(tmp_path, override):
    with pytest.raises(ValueError):
        ConfigManager(override, settings_path=str(tmp_path / "missing.json"))


def test_keum_file_made_absolute(tmp_path):
    manager = ConfigManager({"keum_file": "keum.json"}, settings_path=str(tmp_path / "missing.json"))
    assert os.path.isabs(manager.get('keum_file'))


def test_override_file(tmp_path, settings_file):
    override = tmp_path / "override.json"
    override.write_text(json.dumps({"samples": 9}), encoding='utf-8')
    merged = load_settings_with_override(settings_file, str(override))
    assert merged["samples"] == 9
    assert merged["seed"] == 11
    with pytest.raises(ValueError):
        load_settings_with_override(settings_file, str(tmp_path / "nope.json"))


def test_run_config_dict():
    data = RunConfig(seed=5).to_dict()
    assert data["seed"] == 5
    assert "extra" not in data
