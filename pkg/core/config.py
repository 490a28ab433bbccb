#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""配置管理模块"""

import os
import sys
import copy
import json
from dataclasses import dataclass, asdict
from typing import Dict, Any, Optional

SUITES = ('config', 'lattice', 'isometry', 'threefold', 'chamber', 'cremona', 'all')
SWEEPS = ('representatives', 'full')
FACE_METHODS = ('dual', 'per_wall')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')

# 环境变量 -> (配置键, 类型)
ENV_OVERRIDES = {
    'KUMMER_SEED': ('seed', int),
    'KUMMER_SAMPLES': ('samples', int),
    'KUMMER_KEUM_FILE': ('keum_file', str),
    'KUMMER_LOG_LEVEL': ('log_level', str),
}


def get_resource_path(relative_path: str) -> str:
    """获取打包后的资源路径"""
    if getattr(sys, 'frozen', False) and hasattr(sys, '_MEIPASS'):
        # 外部目录优先：与可执行文件同级
        external_path = os.path.join(os.path.dirname(sys.executable), relative_path)
        if os.path.exists(external_path):
            return external_path
        return os.path.join(sys._MEIPASS, relative_path)
    return os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), relative_path)


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """递归合并两层配置，override 优先；两边同为 dict 时逐键合并，不修改入参"""
    merged = dict(base)
    for key, value in override.items():
        current = merged.get(key)
        merged[key] = deep_merge(current, value) if isinstance(current, dict) and isinstance(value, dict) else value
    return merged


def load_json_config(file_path: str) -> Optional[Dict[str, Any]]:
    """读取 JSON 配置；路径为空或文件不存在时返回 None

    Raises:
        ValueError: JSON 格式错误
    """
    if not file_path or not os.path.exists(file_path):
        return None
    try:
        with open(file_path, encoding='utf-8') as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ValueError(f"配置文件 {file_path} JSON 格式错误: {e}")


def env_overrides(environ: Dict[str, str] = None) -> Dict[str, Any]:
    """从环境变量读取覆盖项

    Raises:
        ValueError: 数值型变量无法解析
    """
    environ = os.environ if environ is None else environ
    result = {}
    for name, (key, kind) in ENV_OVERRIDES.items():
        raw = environ.get(name)
        if raw is None or raw == '':
            continue
        try:
            result[key] = kind(raw)
        except ValueError:
            raise ValueError(f"环境变量 {name} 的值无效: {raw}")
    return result


INLINE_DEFAULTS = {
    'project_name': 'kummer_verify',
    'suite': 'all',
    'samples': 5,
    'seed': 7,
    'symbolic': False,
    'keum_file': None,
    'sweep': 'representatives',
    'face_method': 'dual',
    'output': 'report.json',
    'log_level': 'INFO',
    'log_file': None,
    'parallel': {'enabled': True, 'max_workers': 4},
    'homing': {'words': 50, 'max_length': 6, 'max_steps': 200},
    'random_checks': 100,
    'cremona': {'coefficient_bound': 9, 'max_resample': 50, 'line_samples': 6},
}


class ConfigManager:
    """合并后的运行配置，构造时即完成校验"""

    def __init__(self, config: Dict[str, Any] = None, settings_path: str = None):
        self._settings_path = settings_path or get_resource_path('settings.json')
        self.default_config = self._load_default_config()
        self.config = self._validate_config(deep_merge(self.default_config, config or {}))

    def _load_default_config(self) -> Dict[str, Any]:
        loaded = load_json_config(self._settings_path)
        if loaded is None:
            print(f"警告: 未找到默认配置文件 ({self._settings_path})，使用内联默认配置")
            return copy.deepcopy(INLINE_DEFAULTS)
        return loaded

    def _validate_config(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """缺失或非法时抛 ValueError"""
        missing = [k for k in ('suite', 'samples', 'seed', 'sweep', 'face_method', 'output') if k not in config]
        if missing:
            raise ValueError(f"缺少必要配置: {', '.join(missing)}")

        if config['suite'] not in SUITES:
            raise ValueError(f"无效的验证套件: {config['suite']}")
        if not isinstance(config['samples'], int) or config['samples'] < 1:
            raise ValueError(f"samples 必须是正整数: {config['samples']}")
        if not isinstance(config['seed'], int) or not -2 ** 63 <= config['seed'] < 2 ** 64:
            raise ValueError(f"seed 必须是 64 位整数: {config['seed']}")
        if config['sweep'] not in SWEEPS:
            raise ValueError(f"无效的扫描范围: {config['sweep']}")
        if config['face_method'] not in FACE_METHODS:
            raise ValueError(f"无效的面维数算法: {config['face_method']}")

        level = str(config.get('log_level', 'INFO')).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"无效的日志级别: {level}")
        config['log_level'] = level

        keum_file = config.get('keum_file')
        if keum_file:
            config['keum_file'] = os.path.abspath(keum_file)

        parallel = config.setdefault('parallel', {})
        if int(parallel.get('max_workers', 1)) < 1:
            raise ValueError(f"max_workers 必须至少为 1: {parallel.get('max_workers')}")

        homing = config.setdefault('homing', {})
        for key in ('words', 'max_length', 'max_steps'):
            if key in homing and int(homing[key]) < 0:
                raise ValueError(f"homing.{key} 不能为负: {homing[key]}")

        cremona = config.setdefault('cremona', {})
        if int(cremona.get('coefficient_bound', 9)) < 2:
            raise ValueError(f"cremona.coefficient_bound 至少为 2: {cremona.get('coefficient_bound')}")
        if int(cremona.get('line_samples', 6)) < 5:
            raise ValueError(f"cremona.line_samples 至少为 5: {cremona.get('line_samples')}")

        return config

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)


def load_settings_with_override(settings_path: str, override_path: str = None) -> Dict[str, Any]:
    """settings.json 与 --config 两层合并

    Raises:
        ValueError: 覆盖文件不存在或 JSON 格式错误
    """
    default_config = load_json_config(settings_path) or {}
    override_config = {}
    if override_path:
        if not os.path.exists(override_path):
            raise ValueError(f"覆盖配置文件不存在: {override_path}")
        override_config = load_json_config(override_path) or {}

    return deep_merge(default_config, override_config)


@dataclass
class RunConfig:
    """一次运行的参数"""
    suite: str = 'all'
    samples: int = 5
    seed: int = 7
    symbolic: bool = False
    keum_file: Optional[str] = None
    sweep: str = 'representatives'
    face_method: str = 'dual'
    output: str = 'report.json'
    parallel: bool = True
    max_workers: int = 4
    homing_words: int = 50
    homing_max_length: int = 6
    homing_max_steps: int = 200
    random_checks: int = 100
    coefficient_bound: int = 9
    max_resample: int = 50
    line_samples: int = 6

    @classmethod
    def from_config(cls, manager: ConfigManager) -> 'RunConfig':
        config = manager.config
        parallel = config.get('parallel', {})
        homing = config.get('homing', {})
        cremona = config.get('cremona', {})
        return cls(
            suite=config['suite'],
            samples=int(config['samples']),
            seed=int(config['seed']),
            symbolic=bool(config.get('symbolic', False)),
            keum_file=config.get('keum_file'),
            sweep=config['sweep'],
            face_method=config['face_method'],
            output=config['output'],
            parallel=bool(parallel.get('enabled', True)),
            max_workers=int(parallel.get('max_workers', 4)),
            homing_words=int(homing.get('words', 50)),
            homing_max_length=int(homing.get('max_length', 6)),
            homing_max_steps=int(homing.get('max_steps', 200)),
            random_checks=int(config.get('random_checks', 100)),
            coefficient_bound=int(cremona.get('coefficient_bound', 9)),
            max_resample=int(cremona.get('max_resample', 50)),
            line_samples=int(cremona.get('line_samples', 6)),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
