#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
三维簇套件
限制映射、D_g、Φ_g 的作用表与 restrict∘Φ_g = z_g∘restrict
"""

import logging

from core.configuration import BASE_TETRAD, I_T0, LABELS, type1_gopel
from core.isometry_group import hg_type
from core.surface_lattice import LAMBDA, node_class, node_sum, trope_class
from core.threefold_lattice import (
    H, LINES, SUM_E, canonical_class, canonical_restriction_sign, compatibility_check,
    d_class, exceptional_image_table, f_classes, hg_pseudo_action, line_class,
    point_class, restrict,
)

from .base import VerificationSuite

logger = logging.getLogger(__name__)

_G_PRIME_LINES = ((0, 2), (0, 3), (1, 2), (1, 3))


class ThreefoldSuite(VerificationSuite):
    """Pic(X) 与 45 个伪自同构作用"""

    name = 'threefold'
    title = 'Pic(X) 与 Φ_g'
    description = '限制映射、D_g、Φ_g 作用表与交换图'

    def execute(self):
        self.check("restriction_examples", "H ↦ (3Λ − Σ_{i<j≤5} N_ij)/2，E_i ↦ N_{i6}，E_ij ↦ T_ij",
                   self._restriction_examples)
        self.check("d_class", "D_g = 5H − 2ΣE_i − 2Σ_{g'} E_β，D_g|_S = z_g(H_S)", self._d_class)
        self.check("base_action_table", "Φ(E_4) = 2H − ΣE_i + E_5 − Σ_{g'} E_β，固定 E_01, E_23, E_45",
                   self._base_action)
        self.check("quadric_restrictions", "被收缩二次曲面在 S 上的限制", self._quadric_restrictions)
        self.check("exceptional_image_degrees", "只有 E_4, E_5 与 g' 的四条线映为二次曲面",
                   self._image_degrees)
        self.check("canonical_restriction", "K_X|_S = ±b（记录符号）", self._canonical_restriction)
        self.check("compatibility_all", "45 个 g：restrict∘Φ_g = z_g∘restrict，Φ_g² = id，Φ_g(K_X) = K_X",
                   self._compatibility_all)

    def _restriction_examples(self):
        others = [a for a in LABELS if a not in I_T0]
        values = {
            "H": restrict(H) == (LAMBDA * 3 - node_sum(others)) / 2,
            "E0": restrict(point_class(0)) == node_class("00"),
            "E3": restrict(point_class(3)) == node_class("36"),
            "E12": restrict(line_class(1, 2)) == trope_class("12"),
            "E05": restrict(line_class(0, 5)) == trope_class("56"),
        }
        return all(values.values()), values

    def _d_class(self):
        g = BASE_TETRAD
        expected = H * 5 - SUM_E * 2
        for line in _G_PRIME_LINES:
            expected = expected - line_class(*line) * 2
        base_ok = d_class(g) == expected
        bad = [g2.to_list() for g2 in type1_gopel()
               if restrict(d_class(g2)) != hg_type(g2).apply(restrict(H)) or d_class(g2).degree() != 5]
        return base_ok and not bad, {"D": str(d_class(g)), "failures": bad}

    def _base_action(self):
        action = hg_pseudo_action(BASE_TETRAD)
        g_lines = sum((line_class(*l) for l in _G_PRIME_LINES), H * 0)
        f5 = H * 2 - SUM_E + point_class(5) - g_lines
        values = {
            "Φ(E4)": action.apply(point_class(4)) == f5,
            "Φ(H)": action.apply(H) == d_class(BASE_TETRAD),
            "fixed": all(action.apply(line_class(i, j)) == line_class(i, j)
                         for i, j in ((0, 1), (2, 3), (4, 5))),
            "Φ(E0)=E1": action.apply(point_class(0)) == point_class(1),
            "Φ(E04)=E15": action.apply(line_class(0, 4)) == line_class(1, 5),
            "Φ(K)=K": action.apply(canonical_class()) == canonical_class(),
        }
        return all(values.values()), values

    def _quadric_restrictions(self):
        classes = f_classes()
        f5_image = restrict(classes["F5"])
        f4_image = restrict(classes["F4"])
        expected_f5 = LAMBDA - node_sum(["46", "14", "15"])
        expected_f4 = LAMBDA - node_sum(["56", "14", "15"])
        ok = f5_image == expected_f5 and f4_image == expected_f4
        return ok, {"Φ(E4)|_S": str(f5_image), "Φ(E5)|_S": str(f4_image)}

    def _image_degrees(self):
        table = exceptional_image_table(BASE_TETRAD)
        degrees = {name: image.degree() for name, image in table.items()}
        quadric = {"E4", "E5"} | {f"E{i}{j}" for i, j in _G_PRIME_LINES}
        ok = all(degrees[n] == (2 if n in quadric else 0) for n in degrees)
        ok &= len(degrees) == 6 + len(LINES)
        return ok, degrees

    def _canonical_restriction(self):
        sign = canonical_restriction_sign()
        return sign != 0, {"sign": sign, "K_X|_S": str(restrict(canonical_class()))}

    def _compatibility_all(self):
        results = [compatibility_check(g) for g in type1_gopel()]
        failures = [r.to_dict() for r in results if not r.passed]
        return not failures, {"checked": len(results), "failures": failures}
