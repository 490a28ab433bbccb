# -*- coding: utf-8 -*-

"""测试公共夹具"""

import json
import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from core.config import RunConfig  # noqa: E402
from core.configuration import type1_weber  # noqa: E402
from core.isometry_group import LatticeIsometry  # noqa: E402


@pytest.fixture
def run_config():
    """串行、小样本的运行参数"""
    return RunConfig(suite='config', samples=1, seed=7, parallel=False, max_workers=1,
                     homing_words=3, homing_max_length=2, homing_max_steps=50)


@pytest.fixture
def settings_file(tmp_path):
    """写一个最小的默认配置文件"""
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({
        "suite": "all", "samples": 2, "seed": 11, "sweep": "representatives",
        "face_method": "dual", "output": str(tmp_path / "report.json"),
        "log_level": "INFO", "parallel": {"enabled": False, "max_workers": 1},
    }), encoding='utf-8')
    return str(path)


@pytest.fixture
def identity_keum_file(tmp_path):
    """两个第一类六元组都给恒等矩阵：格式合法但性质不成立"""
    rows = LatticeIsometry.identity().to_list()
    entries = [{"hexad": w.to_list(), "matrix": rows} for w in type1_weber()[:2]]
    path = tmp_path / "keum_identity.json"
    path.write_text(json.dumps({"entries": entries}), encoding='utf-8')
    return str(path)
