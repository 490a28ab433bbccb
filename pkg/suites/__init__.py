#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
验证套件包
每个套件对应一个库模块，按报告顺序登记
"""

from .configuration import ConfigurationSuite
from .lattice import LatticeSuite
from .isometry import IsometrySuite
from .threefold import ThreefoldSuite
from .chamber import ChamberSuite
from .cremona import CremonaSuite

# 套件名 -> 套件类（'all' 按此顺序执行）
SUITE_HANDLERS = {
    'config': ConfigurationSuite,
    'lattice': LatticeSuite,
    'isometry': IsometrySuite,
    'threefold': ThreefoldSuite,
    'chamber': ChamberSuite,
    'cremona': CremonaSuite,
}


def get_suite_handler(suite: str):
    """获取套件类"""
    return SUITE_HANDLERS.get(suite)


def resolve_suites(suite: str) -> list:
    """把选择器展开为套件名列表

    Raises:
        ValueError: 未知套件
    """
    if suite == 'all':
        return list(SUITE_HANDLERS)
    if suite not in SUITE_HANDLERS:
        raise ValueError(f"未知的验证套件: {suite}")
    return [suite]


def list_available_suites() -> list:
    """列出可用的验证套件"""
    return [
        {'type': key, 'name': cls.title, 'description': cls.description}
        for key, cls in SUITE_HANDLERS.items()
    ]
