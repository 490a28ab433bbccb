#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
组态套件
群律、切面关联、Göpel/Weber 计数与暴力核对、g' 与重标号
"""

import logging
from collections import Counter

from core.configuration import (
    LABELS, ZERO, BASE_TETRAD, I_T0, add, all_permutations, brute_force_gopel,
    brute_force_weber, compose_permutations, enumerate_gopel, enumerate_weber,
    format_labels, gopel_complement, hexad, hexad_dual, is_gopel, is_weber, label,
    labels, relabel, relabel_trope, tetrad, translate, trope_incidence, transposition,
    type1_gopel, weber_dual_pairs,
)

from .base import VerificationSuite

logger = logging.getLogger(__name__)

# 抽样检查群作用律时使用的置换
_SAMPLE_PERMUTATIONS = (
    (1, 2, 3, 4, 5, 6), (2, 1, 3, 4, 5, 6), (1, 2, 3, 4, 6, 5),
    (6, 1, 2, 3, 4, 5), (3, 5, 1, 6, 2, 4), (2, 3, 4, 5, 6, 1),
)


class ConfigurationSuite(VerificationSuite):
    """(16,6) 组态"""

    name = 'config'
    title = '(16,6) 组态'
    description = '二阶挠点群、切面关联、Göpel 四元组与 Weber 六元组'

    def execute(self):
        self.check("group_law", "J(C)_2 是 16 阶初等交换 2-群", self._group_law)
        self.check("addition_examples", "12+23=13, 0+46=46, 12+34=56", self._addition_examples)
        self.check("trope_incidence", "I(T_0)={0,16,26,36,46,56}，其余为平移", self._trope_incidence)
        self.check("sixteen_six", "每个结点恰在 6 个切面上", self._sixteen_six)
        self.check("gopel_counts", "60 个 Göpel 四元组：45 个第一类、15 个第二类", self._gopel_counts)
        self.check("gopel_trope_meet", "Göpel 四元组与每个 I(T_β) 交于 0 或 2 个结点", self._gopel_meet)
        self.check("weber_counts", "192 个 Weber 六元组：120 个第一类、72 个第二类、60 个对偶对",
                   self._weber_counts)
        self.check("weber_trope_meet", "Weber 六元组与每个 I(T_β) 交于 1 或 3 个结点", self._weber_meet)
        self.check("weber_dual_example", "{0,16,26,13,34,24} 与 {36,46,56,13,34,24} 对偶", self._dual_example)
        self.check("gopel_complement", "g={46,56,14,15} 时 g'={26,36,12,13}", self._complement_examples)
        self.check("relabel_equivariance", "重标号与 g' 交换，保持切面关联", self._relabel_equivariance)
        self.check("relabel_action", "重标号是群作用", self._relabel_action)
        self.check("gopel_orbit", "60 个 Göpel 四元组在重标号与平移下构成一个轨道", self._gopel_orbit)

    def _group_law(self):
        closed = all(add(x, y) in LABELS for x in LABELS for y in LABELS)
        involutive = all(add(x, x) == ZERO for x in LABELS)
        commutative = all(add(x, y) == add(y, x) for x in LABELS for y in LABELS)
        associative = all(add(add(x, y), z) == add(x, add(y, z))
                          for x in LABELS for y in LABELS for z in LABELS)
        ok = len(set(LABELS)) == 16 and closed and involutive and commutative and associative
        return ok, {"order": len(set(LABELS)), "closed": closed, "involutive": involutive,
                    "commutative": commutative, "associative": associative}

    def _addition_examples(self):
        values = {
            "12+23": str(add(label("12"), label("23"))),
            "00+46": str(add(ZERO, label("46"))),
            "12+34": str(add(label("12"), label("34"))),
        }
        return values == {"12+23": "13", "00+46": "46", "12+34": "56"}, values

    def _trope_incidence(self):
        expected = {
            "00": labels("00", "16", "26", "36", "46", "56"),
            "16": labels("00", "16", "12", "13", "14", "15"),
            "12": labels("16", "26", "12", "34", "35", "45"),
        }
        found = {k: trope_incidence(label(k)) for k in expected}
        translated = all(trope_incidence(b) == translate(b, I_T0) for b in LABELS)
        sizes = all(len(trope_incidence(b)) == 6 for b in LABELS)
        ok = found == expected and translated and sizes
        return ok, {k: format_labels(v) for k, v in found.items()}

    def _sixteen_six(self):
        counts = Counter(a for b in LABELS for a in trope_incidence(b))
        ok = set(counts.values()) == {6} and len(counts) == 16
        return ok, {"incidences_per_node": sorted(set(counts.values()))}

    def _gopel_counts(self):
        tetrads = enumerate_gopel()
        types = Counter(g.type_tag for g in tetrads)
        brute = set(brute_force_gopel())
        agree = brute == {g.labels for g in tetrads}
        base_present = BASE_TETRAD in tetrads and BASE_TETRAD.type_tag == 1
        type2 = tetrad("13", "15", "23", "25")
        type2_present = type2 in tetrads and type2.type_tag == 2
        witness = {"total": len(tetrads), "type1": types[1], "type2": types[2],
                   "brute_force": len(brute), "agree": agree}
        ok = (len(tetrads), types[1], types[2]) == (60, 45, 15) and agree and base_present and type2_present
        return ok, witness

    def _gopel_meet(self):
        sizes = {len(g.labels & trope_incidence(b)) for g in enumerate_gopel() for b in LABELS}
        return sizes <= {0, 2}, {"meet_sizes": sorted(sizes)}

    def _weber_counts(self):
        hexads = enumerate_weber()
        types = Counter(w.type_tag for w in hexads)
        pairs = weber_dual_pairs()
        brute = set(brute_force_weber())
        agree = brute == {w.labels for w in hexads}
        dual_ok = all((w.labels ^ d.labels) == I_T0 and is_weber(d.labels) for w, d in pairs)
        witness = {"total": len(hexads), "type1": types[1], "type2": types[2],
                   "dual_pairs": len(pairs), "brute_force": len(brute), "agree": agree}
        ok = ((len(hexads), types[1], types[2], len(pairs)) == (192, 120, 72, 60)
              and agree and dual_ok)
        return ok, witness

    def _weber_meet(self):
        sizes = {len(w.labels & trope_incidence(b)) for w in enumerate_weber() for b in LABELS}
        return sizes <= {1, 3}, {"meet_sizes": sorted(sizes)}

    def _dual_example(self):
        w = hexad("00", "16", "26", "13", "34", "24")
        dual = hexad_dual(w)
        expected = labels("36", "46", "56", "13", "34", "24")
        return dual.labels == expected and w.type_tag == 1, {"hexad": w.to_list(), "dual": dual.to_list()}

    def _complement_examples(self):
        first = gopel_complement(BASE_TETRAD)
        second = gopel_complement(tetrad("00", "16", "23", "45"))
        ok = first == labels("26", "36", "12", "13") and second == labels("24", "25", "34", "35")
        return ok, {"{46,56,14,15}": format_labels(first), "{0,16,23,45}": format_labels(second)}

    def _relabel_equivariance(self):
        bad = []
        for pi in all_permutations():
            for b in LABELS:
                if relabel(pi, trope_incidence(b)) != trope_incidence(relabel_trope(pi, b)):
                    bad.append(("incidence", pi, str(b)))
            for g in type1_gopel():
                moved = relabel(pi, g)
                if not is_gopel(moved.labels):
                    bad.append(("gopel", pi, str(g)))
                    continue
                expected = frozenset(relabel_trope(pi, b) for b in gopel_complement(g))
                if gopel_complement(moved) != expected:
                    bad.append(("complement", pi, str(g)))
            if len(bad) > 5:
                break
        swap = relabel(transposition(4, 5), BASE_TETRAD)
        ok = not bad and swap == BASE_TETRAD
        return ok, {"violations": [list(map(str, v)) for v in bad[:5]], "(45)·g": swap.to_list()}

    def _relabel_action(self):
        hexads = enumerate_weber()[:24]
        for pi in _SAMPLE_PERMUTATIONS:
            for sigma in _SAMPLE_PERMUTATIONS:
                pi_sigma = compose_permutations(pi, sigma)
                for x in LABELS:
                    if relabel(pi_sigma, x) != relabel(pi, relabel(sigma, x)):
                        return False, {"pi": pi, "sigma": sigma, "label": str(x)}
                for w in hexads:
                    if relabel(pi_sigma, w) != relabel(pi, relabel(sigma, w)):
                        return False, {"pi": pi, "sigma": sigma, "hexad": w.to_list()}
        identity = all(relabel((1, 2, 3, 4, 5, 6), x) == x for x in LABELS)
        return identity, {"pairs_checked": len(_SAMPLE_PERMUTATIONS) ** 2}

    def _gopel_orbit(self):
        start = BASE_TETRAD.labels
        orbit = {start}
        frontier = [start]
        while frontier:
            current = frontier.pop()
            images = [relabel(pi, current) for pi in _SAMPLE_PERMUTATIONS[1:]]
            images += [translate(b, current) for b in LABELS]
            for image in images:
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        return len(orbit) == 60, {"orbit_size": len(orbit)}
