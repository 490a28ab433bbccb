#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""工具函数模块"""

import os
import re
import time
import hashlib
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """解析 "num/den" 或整数字符串为 Fraction"""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"无效的有理数: {text!r}")

    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"无效的有理数格式: {text}")

    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) else 1
    if den == 0:
        raise ValueError(f"分母为零: {text}")
    return Fraction(num, den)


def format_rational(value: Rational) -> str:
    """格式化有理数为 "num/den"（整数不带分母）"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(values: Iterable[Rational]) -> List[str]:
    """格式化有理向量"""
    return [format_rational(v) for v in values]


def parse_vector(items: Sequence[Union[str, int]]) -> List[Fraction]:
    """解析有理向量"""
    return [parse_rational(item) for item in items]


def get_file_hash(filepath: str, algorithm: str = 'sha256') -> str:
    """计算文件哈希值

    Raises:
        FileNotFoundError: 文件不存在
    """
    if not filepath or not isinstance(filepath, str):
        raise ValueError("无效的文件路径")

    if not os.path.exists(filepath):
        raise FileNotFoundError(f"文件不存在: {filepath}")

    hash_func = hashlib.new(algorithm)
    with open(filepath, 'rb') as f:
        for chunk in iter(lambda: f.read(4096), b""):
            hash_func.update(chunk)
    return hash_func.hexdigest()


def format_duration(seconds: float) -> str:
    """格式化耗时为可读格式"""
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60:
        return f"{seconds:.2f} s"
    minutes, secs = divmod(seconds, 60)
    return f"{int(minutes)} min {secs:.1f} s"


class Stopwatch:
    """简单计时器，用于记录各项检查耗时"""

    def __init__(self):
        self.start = time.perf_counter()

    def elapsed(self) -> float:
        return time.perf_counter() - self.start
