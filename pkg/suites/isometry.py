#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
等距群套件
经典对合、45 个 z_g、Aut(D′) 与外部 Keum 作用表
"""

import logging

from core.configuration import BASE_TETRAD, LABELS, relabel, type1_gopel
from core.isometry_group import (
    LatticeIsometry, aut_dprime_group, compose, correlation, hg_involution, hg_type,
    inverse, is_involution, is_isometry, permutes_nodes_and_tropes, preserves_integrality,
    projection, relabel_isometry, stabilizer_of, switch, translation,
)
from core.surface_lattice import (
    ALL_NODES, C_CLASS, LAMBDA, R_CLASS, W_DOUBLE_PRIME, gopel_root, integral_basis,
    node_class, node_sum, pair, proj_root, trope_class,
)

from .base import VerificationSuite

logger = logging.getLogger(__name__)

_CONJUGATING_PERMUTATIONS = (
    (2, 1, 3, 4, 5, 6), (1, 2, 3, 4, 6, 5), (6, 1, 2, 3, 4, 5), (3, 5, 1, 6, 2, 4),
)


def _classical() -> dict:
    isometries = {f"t{a}": translation(a) for a in LABELS}
    isometries["σ"] = switch()
    isometries.update({f"p{a}": projection(a) for a in LABELS})
    isometries.update({f"q{a}": correlation(a) for a in LABELS})
    return isometries


class IsometrySuite(VerificationSuite):
    """NS(S) 的等距"""

    name = 'isometry'
    title = '格等距'
    description = '经典对合、z_g、Aut(D′) 与 Keum 作用校验'

    def execute(self):
        self.check("classical_isometries", "t_α、σ、p_α、q_α 保持交数形式与整格且为对合",
                   self._classical_isometries)
        self.check("translation_law", "t_12∘t_23 = t_13，t_12(N_16) = N_26", self._translation_law)
        self.check("switch", "σ(Λ) = 3Λ − ΣN_α，σ(c) = −c", self._switch)
        self.check("projection_reflection", "p_α(Λ−2N_α) = −(Λ−2N_α)，q_α = σ∘p_α∘σ", self._reflections)
        self.check("hg_involution_example", "φ_g(N_0)=N_23, φ_g(T_26)=Λ−ΣN_g+T_26, φ_g²=id",
                   self._hg_involution_example)
        self.check("hg_type_fixed_classes", "z_g 固定 T_0,T_16,T_23,T_45,N_24,N_34,N_25,N_35，z_g(N_0)=N_16",
                   self._hg_type_fixed)
        self.check("hg_type_all", "45 个 z_g：等距、整、对合、固定 T_0 与 c、z_g(r_g)=−r_g、z_g(w″)=w″+2r_g",
                   self._hg_type_all)
        self.check("hg_type_conjugation", "z_{π·g} = Π z_g Π⁻¹", self._hg_conjugation)
        self.check("aut_dprime", "⟨t_α, σ⟩ ≅ (Z/2)^5，T_0 的稳定子平凡", self._aut_dprime)
        if self.keum_table is None:
            self.skip("keum_validation", "z_w 满足全部格性质", "未提供 Keum 数据文件")
        else:
            self.check("keum_validation", "z_w 满足全部格性质", self._keum_validation)

    def _classical_isometries(self):
        failures = []
        for name, f in _classical().items():
            if not is_isometry(f):
                failures.append(f"{name}: 不保持交数")
            elif not is_involution(f):
                failures.append(f"{name}: 不是对合")
            elif not preserves_integrality(f):
                failures.append(f"{name}: 不保持整格")
        commute = all(compose(translation(a), translation(b)) == compose(translation(b), translation(a))
                      for a in LABELS for b in LABELS)
        if not commute:
            failures.append("平移不交换")
        return not failures, {"count": len(_classical()), "failures": failures}

    def _translation_law(self):
        law = compose(translation("12"), translation("23")) == translation("13")
        image = translation("12").apply(node_class("16"))
        identity = translation("00").is_identity()
        return law and image == node_class("26") and identity, {
            "t12∘t23=t13": law, "t12(N16)": image.to_list(), "t0=id": identity}

    def _switch(self):
        s = switch()
        lam = s.apply(LAMBDA) == LAMBDA * 3 - ALL_NODES
        c = s.apply(C_CLASS) == -C_CLASS
        nodes = all(s.apply(node_class(a)) == trope_class(a) for a in LABELS)
        return lam and c and nodes, {"σ(Λ)": lam, "σ(c)=−c": c, "N↔T": nodes}

    def _reflections(self):
        bad = []
        s = switch()
        for alpha in LABELS:
            r = proj_root(alpha)
            p = projection(alpha)
            if p.apply(r) != -r:
                bad.append(f"p{alpha}(r)")
            if any(p.apply(x) != x for x in integral_basis() if pair(x, r) == 0):
                bad.append(f"p{alpha} 不固定 r^⊥")
            if correlation(alpha) != compose(s, compose(p, s)):
                bad.append(f"q{alpha}")
        return not bad, {"failures": bad}

    def _hg_involution_example(self):
        g = BASE_TETRAD
        phi = hg_involution(g)
        s = node_sum(g.labels)
        values = {
            "φ(N0)": phi.apply(node_class("00")) == node_class("23"),
            "φ(T26)": phi.apply(trope_class("26")) == LAMBDA - s + trope_class("26"),
            "φ²=id": is_involution(phi),
            "isometry": is_isometry(phi),
        }
        return all(values.values()), values

    def _hg_type_fixed(self):
        z = hg_type(BASE_TETRAD)
        fixed = [trope_class(b) for b in ("00", "16", "23", "45")]
        fixed += [node_class(a) for a in ("24", "34", "25", "35")]
        names = ["T00", "T16", "T23", "T45", "N24", "N34", "N25", "N35"]
        moved = [n for n, x in zip(names, fixed) if z.apply(x) != x]
        exchange = z.apply(node_class("00")) == node_class("16")
        return not moved and exchange, {"moved": moved, "z(N0)=N16": exchange}

    def _hg_type_all(self):
        failures = []
        basis = integral_basis()
        for g in type1_gopel():
            z = hg_type(g)
            r = gopel_root(g)
            problems = []
            if not is_isometry(z):
                problems.append("isometry")
            if not is_involution(z):
                problems.append("involution")
            if not preserves_integrality(z):
                problems.append("integrality")
            if z.apply(R_CLASS) != R_CLASS or z.apply(C_CLASS) != C_CLASS:
                problems.append("T0/c")
            if z.apply(r) != -r:
                problems.append("r_g")
            if z.apply(W_DOUBLE_PRIME) != W_DOUBLE_PRIME + r * 2:
                problems.append("w''")
            if any(pair(z.apply(x), r) != -pair(x, r) for x in basis):
                problems.append("half-space")
            if problems:
                failures.append({"g": g.to_list(), "failed": problems})
        return not failures, {"checked": len(type1_gopel()), "failures": failures}

    def _hg_conjugation(self):
        failures = []
        for pi in _CONJUGATING_PERMUTATIONS:
            conj = relabel_isometry(pi)
            conj_inv = conj.inverse()
            if conj.apply(LAMBDA) != LAMBDA:
                failures.append({"pi": list(pi), "failed": "Π(Λ) ≠ Λ"})
                continue
            for g in type1_gopel():
                expected = conj.compose(hg_type(g)).compose(conj_inv)
                if hg_type(relabel(pi, g)) != expected:
                    failures.append({"pi": list(pi), "g": g.to_list()})
        return not failures, {"permutations": len(_CONJUGATING_PERMUTATIONS), "failures": failures[:5]}

    def _aut_dprime(self):
        group = aut_dprime_group()
        stab = stabilizer_of(R_CLASS, group)
        exponent_two = all(is_involution(f) or f.is_identity() for f in group)
        permutes = all(permutes_nodes_and_tropes(f) for f in group)
        trivial = len(stab) == 1 and stab[0].is_identity()
        inverses = all(compose(f, inverse(f)) == LatticeIsometry.identity() for f in group)
        ok = len(group) == 32 and exponent_two and permutes and trivial and inverses
        return ok, {"order": len(group), "stabilizer_T0": len(stab),
                    "exponent_two": exponent_two, "permutes_curves": permutes}

    def _keum_validation(self):
        table = self.keum_table
        failures = [v.to_dict() for v in table.validations if not v.passed]
        return table.accepted, {"entries": len(table.entries), "digest": table.source_digest,
                                "failures": failures[:10]}
