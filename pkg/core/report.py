#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
验证报告模块
每条断言记录状态、锚点说明、精确见证值与耗时；整体写为 JSON
"""

import json
import hashlib
import logging
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


def to_jsonable(value: Any) -> Any:
    """把见证值转换为可序列化结构，有理数一律写成字符串"""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if hasattr(value, 'to_list'):
        return to_jsonable(value.to_list())
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@dataclass
class CheckResult:
    """一条断言的结果"""
    name: str
    status: Status
    anchor: str = ''
    witness: Any = None
    detail: str = ''
    elapsed: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == Status.FAIL

    def to_dict(self, timings: bool = True) -> dict:
        data = {
            "name": self.name,
            "status": self.status.value,
            "anchor": self.anchor,
            "witness": to_jsonable(self.witness),
        }
        if self.detail:
            data["detail"] = self.detail
        if timings:
            data["elapsed"] = round(self.elapsed, 4)
        return data


@dataclass
class SuiteReport:
    """一个套件的全部断言"""
    suite: str
    checks: List[CheckResult] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)
    note: str = ''

    def add(self, result: CheckResult):
        self.checks.append(result)

    def counts(self) -> Dict[str, int]:
        result = {s.value: 0 for s in Status}
        for c in self.checks:
            result[c.status.value] += 1
        return result

    @property
    def passed(self) -> bool:
        return not any(c.failed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.failed]

    def to_dict(self, timings: bool = True) -> dict:
        data = {
            "suite": self.suite,
            "status": Status.PASS.value if self.passed else Status.FAIL.value,
            "counts": self.counts(),
            "checks": [c.to_dict(timings) for c in self.checks],
        }
        if self.note:
            data["note"] = self.note
        if timings and self.stats:
            data["stats"] = to_jsonable(self.stats)
        return data


@dataclass
class Report:
    """一次运行的完整报告"""
    run: Dict[str, Any]
    suites: List[SuiteReport] = field(default_factory=list)
    environment: Dict[str, Any] = field(default_factory=dict)
    keum_digest: Optional[str] = None
    created: str = field(default_factory=lambda: datetime.now().isoformat())

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_FAILED

    def totals(self) -> Dict[str, int]:
        totals = {s.value: 0 for s in Status}
        for suite in self.suites:
            for key, value in suite.counts().items():
                totals[key] += value
        return totals

    def digest(self) -> str:
        """不含耗时与环境信息的内容摘要，同一 (套件, 种子, 样本数, Keum 摘要) 下不变"""
        payload = {
            "run": to_jsonable(self.run),
            "keum_digest": self.keum_digest,
            "suites": [s.to_dict(timings=False) for s in self.suites],
        }
        text = json.dumps(payload, sort_keys=True, ensure_ascii=False)
        return hashlib.sha256(text.encode('utf-8')).hexdigest()

    def to_dict(self) -> dict:
        return {
            "project": "kummer_verify",
            "created": self.created,
            "status": Status.PASS.value if self.passed else Status.FAIL.value,
            "run": to_jsonable(self.run),
            "keum_digest": self.keum_digest,
            "totals": self.totals(),
            "digest": self.digest(),
            "suites": [s.to_dict() for s in self.suites],
            "environment": to_jsonable(self.environment),
        }


def write_report(report: Report, file_path: str) -> str:
    """写出报告 JSON，返回内容摘要

    Raises:
        OSError: 无法写入
    """
    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(report.to_dict(), f, ensure_ascii=False, indent=2)
    digest = report.digest()
    logger.info(f"报告已写入 {file_path} (digest {digest[:16]}...)")
    return digest
