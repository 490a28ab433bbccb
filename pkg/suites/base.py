#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
验证套件基类
每条断言独立计时，异常只记为该条 FAIL，不中断整个套件
"""

import logging
from typing import Any, Callable, Optional, Tuple

from core.config import RunConfig
from core.report import CheckResult, Status, SuiteReport
from core.utils import Stopwatch

logger = logging.getLogger(__name__)

# 断言函数返回 (是否通过, 见证值) 或直接返回 CheckResult
Outcome = Tuple[bool, Any]


class VerificationSuite:
    """套件基类，子类实现 execute()"""

    name = ''
    title = ''
    description = ''

    def __init__(self, config: RunConfig, keum_table=None):
        self.config = config
        self.keum_table = keum_table
        self.report = SuiteReport(self.name)

    def run(self) -> SuiteReport:
        """执行套件并返回报告"""
        self.report = SuiteReport(self.name)
        logger.info(f"开始验证套件: {self.name}")
        self.execute()
        counts = self.report.counts()
        logger.info(f"套件 {self.name} 完成: {counts}")
        return self.report

    def execute(self):
        raise NotImplementedError

    def check(self, name: str, anchor: str, fn: Callable[[], Outcome]) -> CheckResult:
        """运行一条断言

        Args:
            name: 断言名称
            anchor: 被验证的数学陈述
            fn: 返回 (bool, witness) 的无参函数
        """
        watch = Stopwatch()
        try:
            passed, witness = fn()
            result = CheckResult(name, Status.PASS if passed else Status.FAIL, anchor, witness)
        except (ArithmeticError, AssertionError, LookupError, ValueError, TypeError) as e:
            logger.error(f"[{self.name}] {name} 异常: {e}")
            result = CheckResult(name, Status.FAIL, anchor, detail=f"{type(e).__name__}: {e}")
        result.elapsed = watch.elapsed()
        if result.failed:
            logger.warning(f"[{self.name}] FAIL {name}")
        else:
            logger.debug(f"[{self.name}] PASS {name}")
        self.report.add(result)
        return result

    def skip(self, name: str, anchor: str, reason: str) -> CheckResult:
        result = CheckResult(name, Status.SKIPPED, anchor, detail=reason)
        logger.info(f"[{self.name}] SKIPPED {name}: {reason}")
        self.report.add(result)
        return result

    def record(self, name: str, anchor: str, status: Status, witness: Any = None,
               detail: str = '', elapsed: float = 0.0) -> CheckResult:
        result = CheckResult(name, status, anchor, witness, detail, elapsed)
        self.report.add(result)
        return result

    @property
    def has_keum(self) -> bool:
        return self.keum_table is not None and self.keum_table.accepted

    def keum_digest(self) -> Optional[str]:
        return self.keum_table.source_digest if self.keum_table is not None else None
