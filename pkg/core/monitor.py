#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
运行监控模块 - 记录每个验证套件的资源占用
进程内存、CPU 时间、墙钟时间，采集失败只记录不抛出
"""

import os
import platform
import time
import logging
from datetime import datetime
from typing import Dict, Optional

logger = logging.getLogger(__name__)


class RunMonitor:
    """运行监控器 - 为报告的 environment 块采集指标"""

    def __init__(self):
        self.started = time.perf_counter()
        self.suite_stats: Dict[str, dict] = {}
        self._marks: Dict[str, tuple] = {}

    def _cpu_seconds(self) -> Optional[float]:
        import psutil
        times = psutil.Process(os.getpid()).cpu_times()
        return times.user + times.system

    def get_realtime_stats(self) -> dict:
        """获取当前进程状态"""
        import psutil

        stats = {
            "timestamp": datetime.now().isoformat(),
            "errors": []
        }

        try:
            process = psutil.Process(os.getpid())
            memory = process.memory_info()
            stats["process"] = {
                "pid": process.pid,
                "rss": memory.rss,
                "vms": memory.vms,
                "threads": process.num_threads(),
            }
        except Exception as e:
            stats["process"] = {"error": str(e)}
            stats["errors"].append(f"进程: {str(e)}")

        try:
            stats["cpu"] = {
                "count": psutil.cpu_count(),
                "process_seconds": round(self._cpu_seconds(), 3),
            }
        except Exception as e:
            stats["cpu"] = {"error": str(e)}
            stats["errors"].append(f"CPU: {str(e)}")

        try:
            memory = psutil.virtual_memory()
            stats["memory"] = {
                "total": memory.total,
                "available": memory.available,
                "percent": memory.percent,
            }
        except Exception as e:
            stats["memory"] = {"error": str(e)}
            stats["errors"].append(f"内存: {str(e)}")

        stats["platform"] = {
            "python": platform.python_version(),
            "system": platform.system(),
            "machine": platform.machine(),
        }
        stats["wall_seconds"] = round(time.perf_counter() - self.started, 3)
        return stats

    def begin(self, suite: str):
        """标记套件开始"""
        try:
            cpu = self._cpu_seconds()
        except Exception as e:
            logger.debug(f"无法读取 CPU 时间: {e}")
            cpu = None
        self._marks[suite] = (time.perf_counter(), cpu)

    def end(self, suite: str) -> dict:
        """标记套件结束，返回该套件的耗时与内存"""
        start, cpu_start = self._marks.pop(suite, (time.perf_counter(), None))
        entry = {"wall_seconds": round(time.perf_counter() - start, 3), "errors": []}
        try:
            import psutil
            entry["rss"] = psutil.Process(os.getpid()).memory_info().rss
            if cpu_start is not None:
                entry["cpu_seconds"] = round(self._cpu_seconds() - cpu_start, 3)
        except Exception as e:
            entry["errors"].append(str(e))
        self.suite_stats[suite] = entry
        return entry

    def summary(self) -> dict:
        stats = self.get_realtime_stats()
        stats["suites"] = dict(self.suite_stats)
        return stats
