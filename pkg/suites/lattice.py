#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Néron–Severi 格套件
交数、特殊类、符号差、整性与 B 中的 (−2) 类
"""

import logging
from fractions import Fraction

from core.configuration import LABELS, enumerate_gopel, enumerate_weber, label, trope_incidence
from core.surface_lattice import (
    ALL_NODES, B_CLASS, C_CLASS, LAMBDA, R_CLASS, RANK, W_DOUBLE_PRIME, a_basis,
    b_class_displayed, c_class_for_point, corr_root, discriminant_invariants,
    gopel_root, is_even, is_integral, neg2_classes_in_b, neg2_solutions_in_b,
    node_class, node_sum, pair, proj_root, signature, trope_class, weber_root,
)

from .base import VerificationSuite

logger = logging.getLogger(__name__)


def _naive_pair(x, y) -> Fraction:
    """逐项求和的交数，不经过 Gram 矩阵"""
    total = Fraction(0)
    for i, (a, b) in enumerate(zip(x.coords, y.coords)):
        total += a * b * (4 if i == 0 else -2)
    return total


class LatticeSuite(VerificationSuite):
    """NS(S) 的格结构"""

    name = 'lattice'
    title = 'Néron–Severi 格'
    description = '交数、符号差 (1,16)、整性与 B 中 (−2) 类'

    def execute(self):
        self.check("pairing_examples", "Λ²=4, Λ·T_β=2, T_β·N_α=1 当且仅当 α∈I(T_β)", self._pairing_examples)
        self.check("node_trope_incidence", "全部 16×16 结点-切面交数等于关联矩阵", self._incidence)
        self.check("trope_squares", "T_β²=−2，不同切面互不相交", self._trope_squares)
        self.check("signature", "交数形式符号差为 (1,16)", self._signature)
        self.check("lambda_identity", "Λ = 2T_β + Σ_{I(T_β)} N_α", self._lambda_identity)
        self.check("distinguished_classes", "c = b + R = 2Λ − ΣN_α, w″ = (13Λ − 3ΣN_α + 4R)/7",
                   self._distinguished)
        self.check("c_classes", "C_i·(Λ − 2N_{i6}) = 0", self._c_classes)
        self.check("integrality", "T_0 整，Λ/2 与 w″ 不整", self._integrality)
        self.check("discriminant", "整格为偶格，判别群不变因子", self._discriminant)
        self.check("neg2_in_b", "B 中唯一的 (−2) 类是 ±T_0", self._neg2_in_b)
        self.check("a_rank", "A = B^⊥ 的秩为 15", self._a_rank)
        self.check("wall_squares", "各类墙的自交数与逐项求和一致", self._wall_squares)

    def _pairing_examples(self):
        values = {
            "Λ·Λ": pair(LAMBDA, LAMBDA),
            "T0·Λ": pair(R_CLASS, LAMBDA),
            "T0·N16": pair(R_CLASS, node_class("16")),
            "T0·N12": pair(R_CLASS, node_class("12")),
        }
        expected = {"Λ·Λ": 4, "T0·Λ": 2, "T0·N16": 1, "T0·N12": 0}
        return values == expected, values

    def _incidence(self):
        mismatches = []
        for beta in LABELS:
            t = trope_class(beta)
            for alpha in LABELS:
                expected = 1 if alpha in trope_incidence(beta) else 0
                if pair(t, node_class(alpha)) != expected:
                    mismatches.append(f"T{beta}·N{alpha}")
        return not mismatches, {"pairs": 256, "mismatches": mismatches[:10]}

    def _trope_squares(self):
        squares = {pair(trope_class(b), trope_class(b)) for b in LABELS}
        cross = {pair(trope_class(b), trope_class(c)) for b in LABELS for c in LABELS if b != c}
        lambda_values = {pair(trope_class(b), LAMBDA) for b in LABELS}
        ok = squares == {-2} and cross == {0} and lambda_values == {2}
        return ok, {"squares": sorted(squares), "cross": sorted(cross), "Λ·T": sorted(lambda_values)}

    def _signature(self):
        sig = signature()
        return sig == (1, 16), {"signature": list(sig)}

    def _lambda_identity(self):
        bad = [str(b) for b in LABELS
               if trope_class(b) * 2 + node_sum(trope_incidence(b)) != LAMBDA]
        return not bad, {"violations": bad}

    def _distinguished(self):
        w_display = (LAMBDA * 13 - ALL_NODES * 3 + R_CLASS * 4) / 7
        checks = {
            "c = 2Λ − ΣN": C_CLASS == LAMBDA * 2 - ALL_NODES,
            "b = c − R": B_CLASS == C_CLASS - R_CLASS,
            "b displayed": B_CLASS == b_class_displayed(),
            "w″ displayed": W_DOUBLE_PRIME == w_display,
            "c² = −16": pair(C_CLASS, C_CLASS) == -16,
        }
        witness = dict(checks)
        witness.update({"c·R": pair(C_CLASS, R_CLASS), "b·R": pair(B_CLASS, R_CLASS),
                        "b²": pair(B_CLASS, B_CLASS), "w″²": pair(W_DOUBLE_PRIME, W_DOUBLE_PRIME),
                        "w″": W_DOUBLE_PRIME.to_list()})
        return all(checks.values()), witness

    def _c_classes(self):
        values = {}
        for i in range(1, 7):
            special = label(f"{i}6") if i < 6 else label("00")
            values[f"C{i}"] = pair(c_class_for_point(i), proj_root(special))
        return set(values.values()) == {0}, values

    def _integrality(self):
        values = {
            "T0": is_integral(R_CLASS),
            "Λ/2": is_integral(LAMBDA / 2),
            "w″": is_integral(W_DOUBLE_PRIME),
            "b": is_integral(B_CLASS),
        }
        return values == {"T0": True, "Λ/2": False, "w″": False, "b": True}, values

    def _discriminant(self):
        invariants = discriminant_invariants()
        det = 1
        for f in invariants:
            det *= f
        even = is_even()
        return even and det == 64, {"invariants": list(invariants), "abs_det": det, "even": even}

    def _neg2_in_b(self):
        found = neg2_classes_in_b()
        solutions = neg2_solutions_in_b()
        ok = set(found) == {R_CLASS, -R_CLASS} and sorted(solutions) == [(0, -1), (0, 1)]
        excluded = pair(C_CLASS, C_CLASS)
        return ok, {"solutions": [list(s) for s in solutions], "c²": excluded}

    def _a_rank(self):
        basis = a_basis()
        orthogonal = all(pair(x, B_CLASS) == 0 and pair(x, R_CLASS) == 0 for x in basis)
        return len(basis) == 15 and orthogonal, {"rank": len(basis), "ambient": RANK}

    def _wall_squares(self):
        squares = {}
        consistent = True
        families = {
            "node": [node_class(a) for a in LABELS],
            "trope": [trope_class(b) for b in LABELS],
            "projection": [proj_root(a) for a in LABELS],
            "correlation": [corr_root(a) for a in LABELS],
            "gopel": [gopel_root(g) for g in enumerate_gopel()],
            "weber": [weber_root(w) for w in enumerate_weber()],
        }
        for kind, classes in families.items():
            values = {pair(r, r) for r in classes}
            consistent &= all(pair(r, r) == _naive_pair(r, r) for r in classes)
            squares[kind] = sorted(values)
        expected = {"node": [-2], "trope": [-2], "projection": [-4], "correlation": [-4],
                    "gopel": [-4], "weber": [-12]}
        return consistent and squares == expected, squares
