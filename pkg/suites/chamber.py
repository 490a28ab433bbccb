#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
基本区域套件
墙系统、成员判定、精确 LP 面维数、秩 15 证书、面配对与归位往返
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from typing import List

from core.chamber_geometry import (
    HomingError, Membership, Wall, dimension_certificate, face_dimension, face_pairing,
    facet_representative, homing, homing_generators, homing_round_trip, omega_dimension,
    omega_membership, representative_walls, sweep_walls, wall_system,
)
from core.configuration import type1_gopel
from core.exact_lp import LPStatus, linprog_max
from core.isometry_group import hg_type
from core.surface_lattice import (
    C_CLASS, LAMBDA, R_CLASS, W_DOUBLE_PRIME, c_class_for_point, gopel_root, is_integral,
    pair, pairing_row,
)
from core.report import Status
from core.utils import Stopwatch

from .base import VerificationSuite

logger = logging.getLogger(__name__)

# 各类墙的面维数要求：(比较方式, 值)
DIMENSION_RULES = {
    "projection": ("le", 10),
    "correlation": ("le", 10),
    "gopel2": ("le", 10),
    "weber2": ("le", 10),
    "gopel1": ("eq", 14),
    "weber1": ("eq", 14),
}


def _dimension_ok(kind: str, dimension: int) -> bool:
    rule = DIMENSION_RULES.get(kind)
    if rule is None:
        return True
    op, value = rule
    return dimension <= value if op == "le" else dimension == value


class ChamberSuite(VerificationSuite):
    """Ω = D̄′ ∩ A"""

    name = 'chamber'
    title = '基本区域 Ω'
    description = '墙系统、LP 面维数、秩 15 证书与归位算法'

    def execute(self):
        self.check("wall_system", "316 面墙：16+16+16+16+60+192，均为整类", self._wall_system)
        self.check("w_double_prime_interior", "w″ 在 Ω 内部：316 个严格不等式", self._interior)
        self.check("membership_examples", "C_i 在面 (Λ−2N_{i6})^⊥ 上，Λ 不在 Ω 中", self._membership_examples)
        self.check("lp_infeasible", "矛盾方程组 x·R=0, x·R=1 不可行", self._lp_infeasible)
        self.check("omega_dimension", "Ω 的维数为 15", self._omega_dimension)
        self.check("dimension_certificate", "{C_i} ∪ {F_g} 的秩为 15，且均在 Ω 中", self._certificate)
        self.check("case_ia_tight_tropes", "Λ−2N_0 的面上 T_16,…,T_56 全部取等", self._case_ia)
        self._face_dimensions()
        self.check("face_pairing", "z_g(r_g) = −r_g，z_g 交换 r_g^⊥ 两侧", self._face_pairing)
        self.check("homing_examples", "归位 w″ 得空字，归位 z_g(w″) 得 [z_g]", self._homing_examples)
        self.check("homing_round_trip_zg", "z_g 字的归位往返恢复 w″ 且复合为恒等",
                   lambda: self._round_trips(None))
        if self.has_keum:
            self.check("homing_round_trip_mixed", "含 z_w 的字的归位往返恢复 w″ 且复合为恒等",
                       lambda: self._round_trips(self.keum_table))
        else:
            reason = "未提供 Keum 数据文件" if self.keum_table is None else "Keum 作用表未通过校验"
            self.skip("homing_round_trip_mixed", "含 z_w 的字的归位往返恢复 w″ 且复合为恒等", reason)

    def _wall_system(self):
        system = wall_system()
        counts = system.counts()
        expected = {"node": 16, "trope": 16, "projection": 16, "correlation": 16,
                    "gopel1": 45, "gopel2": 15, "weber1": 120, "weber2": 72}
        integral = all(is_integral(w.cls) for w in system.walls)
        return counts == expected and len(system.walls) == 316 and integral, {
            "counts": counts, "total": len(system.walls), "integral": integral}

    def _interior(self):
        result = omega_membership(W_DOUBLE_PRIME)
        values = sorted({pair(W_DOUBLE_PRIME, w.cls) for w in wall_system().walls if w.cls != R_CLASS})
        ok = (result.status == Membership.INTERIOR and pair(W_DOUBLE_PRIME, R_CLASS) == 0
              and pair(W_DOUBLE_PRIME, C_CLASS) == 0)
        return ok, {"status": result.status.value, "min_pairing": values[0], "max_pairing": values[-1]}

    def _membership_examples(self):
        witness = {}
        ok = True
        for i in range(1, 7):
            result = omega_membership(c_class_for_point(i))
            proj = "p00" if i == 6 else f"p{i}6"
            on_face = result.status == Membership.BOUNDARY and proj in result.tight
            if i < 6:
                on_face &= f"T{i}6" in result.tight
            ok &= on_face
            witness[f"C{i}"] = result.to_dict()
        outside = omega_membership(LAMBDA)
        ok &= outside.status == Membership.OUTSIDE and "R" in outside.violated
        witness["Λ"] = outside.status.value
        return ok, witness

    def _lp_infeasible(self):
        row = list(pairing_row(R_CLASS))
        result = linprog_max([0] * len(row), [row, row], [0, 1])
        return result.status == LPStatus.INFEASIBLE, {"status": result.status.value}

    def _omega_dimension(self):
        report = omega_dimension(self.config.face_method)
        return report.nonempty and report.dimension == 15, report.to_dict()

    def _certificate(self):
        cert = dimension_certificate()
        return cert.passed, cert.to_dict()

    def _case_ia(self):
        report = face_dimension(representative_walls()["ia"], self.config.face_method)
        expected = {f"T{i}6" for i in range(1, 6)}
        return expected <= set(report.tight_set) and report.dimension <= 10, {
            "dimension": report.dimension, "tight_set": report.tight_set}

    def _face_dimensions(self):
        full = self.config.sweep == 'full'
        walls: List[Wall] = sweep_walls(full)
        names = {w.name: case for case, w in representative_walls().items()}
        names[facet_representative().name] = "facet"
        method = self.config.face_method
        logger.info(f"面维数: {len(walls)} 面墙, 方法 {method}")

        def run(wall: Wall):
            watch = Stopwatch()
            try:
                return wall, face_dimension(wall, method), None, watch.elapsed()
            except (ArithmeticError, ValueError) as e:
                return wall, None, e, watch.elapsed()

        if self.config.parallel and len(walls) > 1:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
                outcomes = list(executor.map(run, walls))
        else:
            outcomes = [run(w) for w in walls]

        facets = 0
        for wall, report, error, elapsed in outcomes:
            label = names.get(wall.name, wall.kind)
            name = f"face_dimension[{label}:{wall.name}]"
            anchor = self._dimension_anchor(wall.kind)
            if error is not None:
                self.record(name, anchor, Status.FAIL, detail=f"{type(error).__name__}: {error}",
                            elapsed=elapsed)
                continue
            ok = report.nonempty and _dimension_ok(wall.kind, report.dimension)
            facets += report.dimension == 14
            self.record(name, anchor, Status.PASS if ok else Status.FAIL, report.to_dict(), elapsed=elapsed)

        if full:
            self.check("face_correspondence", "非结点非切面墙中恰有 45+120 个面为 14 维",
                       lambda: (facets == 165, {"facets": facets}))

    @staticmethod
    def _dimension_anchor(kind: str) -> str:
        rule = DIMENSION_RULES.get(kind)
        if rule is None:
            return "面维数"
        op, value = rule
        return f"{kind} 墙的面维数 {'≤' if op == 'le' else '='} {value}"

    def _face_pairing(self):
        failures = [g.to_list() for g in type1_gopel() if not face_pairing(g)]
        return not failures, {"checked": len(type1_gopel()), "failures": failures}

    def _homing_examples(self):
        generators = homing_generators()
        trivial = homing(W_DOUBLE_PRIME, generators, self.config.homing_max_steps)
        ok = not trivial.word and trivial.point == W_DOUBLE_PRIME
        singles = []
        for g in type1_gopel()[:5]:
            u = hg_type(g).apply(W_DOUBLE_PRIME)
            result = homing(u, generators, self.config.homing_max_steps)
            good = (u == W_DOUBLE_PRIME + gopel_root(g) * 2 and result.word == [f"z{g}"]
                    and result.point == W_DOUBLE_PRIME)
            ok &= good
            singles.append({"g": g.to_list(), "word": result.word, "ok": good})
        return ok, {"w''": trivial.to_dict(), "single_steps": singles}

    def _round_trips(self, keum_table):
        try:
            generators = homing_generators(keum_table)
        except HomingError as e:
            return False, {"error": str(e)}
        rng = random.Random(self.config.seed)
        failures = []
        lengths = []
        for k in range(self.config.homing_words):
            trip = homing_round_trip(rng, generators, self.config.homing_max_length,
                                     self.config.homing_max_steps)
            lengths.append(len(trip.homing.word))
            if not trip.passed:
                failures.append({"index": k, "word": trip.word, "homed": trip.homing.word,
                                 "recovered": trip.recovered, "identity": trip.identity})
        return not failures, {"words": self.config.homing_words, "generators": len(generators),
                              "homing_lengths": lengths, "failures": failures[:5]}
