#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Cremona 套件
k 组随机有理特化（或符号参数）下的 φ_D 精确验证
"""

import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

from core.cremona_engine import (
    FAIL, PASS, SKIPPED, Certificate, CremonaContext, GenericityError, certify, specialize,
)
from core.report import Status
from core.utils import Stopwatch

from .base import VerificationSuite

logger = logging.getLogger(__name__)

_STATUS = {PASS: Status.PASS, FAIL: Status.FAIL, SKIPPED: Status.SKIPPED}


class CremonaSuite(VerificationSuite):
    """P³ 上的双有理对合 φ_D"""

    name = 'cremona'
    title = 'Cremona 对合'
    description = '截面基、h⁰=4、自复合、Jacobian、例外像、有理曲线与线置换'

    def execute(self):
        contexts = self._contexts()
        if not contexts:
            return

        outcomes = self._certify_all(contexts)
        verdicts = defaultdict(list)
        for ctx, certs, elapsed in outcomes:
            share = elapsed / max(len(certs), 1)
            for cert in certs:
                witness = dict(cert.witness)
                witness["params"] = ctx.describe()
                self.record(f"[{ctx.index}] {cert.name}", cert.name, _STATUS[cert.status],
                            witness, cert.detail, share)
                verdicts[cert.name].append(cert.status)

        self.check("specialization_agreement", "每条恒等式在全部特化下结论一致",
                   lambda: self._agreement(verdicts, len(contexts)))

    def _contexts(self) -> List[CremonaContext]:
        config = self.config
        if config.symbolic:
            ctx = CremonaContext(None, config.line_samples)
            self.record("specializations", "参数 (a,b,c) 取符号", Status.PASS, {"mode": "symbolic"})
            return [ctx]
        watch = Stopwatch()
        try:
            contexts = specialize(config.seed, config.samples, config.coefficient_bound,
                                  config.max_resample, config.line_samples)
        except GenericityError as e:
            self.record("specializations", f"{config.samples} 组一般参数", Status.FAIL,
                        detail=str(e), elapsed=watch.elapsed())
            return []
        witness = [{"params": [str(p) for p in ctx.params], "resamples": ctx.resamples} for ctx in contexts]
        self.record("specializations", f"{config.samples} 组一般参数", Status.PASS,
                    witness, elapsed=watch.elapsed())
        return contexts

    def _certify_all(self, contexts: List[CremonaContext]) -> List[Tuple[CremonaContext, List[Certificate], float]]:
        seed = self.config.seed

        def run(ctx: CremonaContext):
            watch = Stopwatch()
            logger.info(f"Cremona 验证: {ctx.describe()}")
            certs = certify(ctx, seed)
            return ctx, certs, watch.elapsed()

        if self.config.parallel and len(contexts) > 1:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
                return list(executor.map(run, contexts))
        return [run(ctx) for ctx in contexts]

    @staticmethod
    def _agreement(verdicts, count: int):
        disagreements = {name: statuses for name, statuses in verdicts.items()
                         if len(set(statuses)) > 1 or len(statuses) != count}
        return not disagreements, {"identities": len(verdicts), "specializations": count,
                                   "disagreements": disagreements}
