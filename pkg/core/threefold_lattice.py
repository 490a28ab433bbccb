#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
三维簇 X（P³ 在 6 点与 15 条线处的爆破）的 Picard 格
基顺序: H; E_0..E_5; E_01, E_02, ..., E_45（字典序）
点下标 0 对应 Weierstrass 标号 6，其余不变
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from cachetools import cached, LRUCache

from .configuration import (
    BASE_TETRAD, I_T0, LABELS, GopelTetrad, GopelTypeError, Permutation, TwoTorsionLabel,
    carrying_permutation, gopel_complement, type1_gopel,
)
from .isometry_group import hg_type
from .linalg import matrix_rows, qq_matrix
from .surface_lattice import (
    LAMBDA, B_CLASS, SurfaceClass, node_class, trope_class, node_sum,
)
from .utils import format_vector

logger = logging.getLogger(__name__)

RANK_X = 22
LINES: Tuple[Tuple[int, int], ...] = tuple(combinations(range(6), 2))
LINE_INDEX: Dict[Tuple[int, int], int] = {line: 7 + k for k, line in enumerate(LINES)}


def weierstrass_index(point: int) -> int:
    """点下标 -> Weierstrass 下标（0 ↦ 6）"""
    return 6 if point == 0 else point


def point_index(weierstrass: int) -> int:
    return 0 if weierstrass == 6 else weierstrass


@dataclass(frozen=True)
class ThreefoldClass:
    """Pic(X) ⊗ Q 中的类"""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != RANK_X:
            raise ValueError(f"坐标长度应为 {RANK_X}: {len(self.coords)}")

    @classmethod
    def of(cls, values) -> 'ThreefoldClass':
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls) -> 'ThreefoldClass':
        return cls((Fraction(0),) * RANK_X)

    @property
    def h_coeff(self) -> Fraction:
        return self.coords[0]

    @property
    def point_coeffs(self) -> Tuple[Fraction, ...]:
        return self.coords[1:7]

    @property
    def line_coeffs(self) -> Tuple[Fraction, ...]:
        return self.coords[7:]

    def degree(self) -> Fraction:
        return self.coords[0]

    def __add__(self, other):
        return ThreefoldClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return ThreefoldClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return ThreefoldClass(tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return ThreefoldClass(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def to_list(self) -> List[str]:
        return format_vector(self.coords)

    def __str__(self) -> str:
        names = ["H"] + [f"E{i}" for i in range(6)] + [f"E{i}{j}" for i, j in LINES]
        terms = [f"{c}{n}" for c, n in zip(self.coords, names) if c]
        return " + ".join(terms) if terms else "0"


def _unit(index: int) -> ThreefoldClass:
    coords = [Fraction(0)] * RANK_X
    coords[index] = Fraction(1)
    return ThreefoldClass(tuple(coords))


H = _unit(0)


def point_class(i: int) -> ThreefoldClass:
    return _unit(1 + i)


def line_class(i: int, j: int) -> ThreefoldClass:
    return _unit(LINE_INDEX[(min(i, j), max(i, j))])


def basis() -> List[ThreefoldClass]:
    return [_unit(k) for k in range(RANK_X)]


SUM_E = sum((point_class(i) for i in range(6)), ThreefoldClass.zero())
SUM_LINES = sum((line_class(i, j) for i, j in LINES), ThreefoldClass.zero())


def canonical_class() -> ThreefoldClass:
    """K_X = −4H + 2ΣE_i + ΣE_ij"""
    return H * -4 + SUM_E * 2 + SUM_LINES


def line_of_label(beta: TwoTorsionLabel) -> Tuple[int, int]:
    """切面标号 ij -> 线 E_{τ⁻¹i τ⁻¹j}"""
    if beta.is_zero:
        raise ValueError("T_0 不是任何 E_ij 的像")
    i, j = point_index(beta.i), point_index(beta.j)
    return (min(i, j), max(i, j))


def label_of_line(i: int, j: int) -> TwoTorsionLabel:
    return TwoTorsionLabel.pair(weierstrass_index(i), weierstrass_index(j))


# ==================== 限制映射 ====================

_P_SUM = node_sum(alpha for alpha in LABELS if alpha not in I_T0)


def _restrict_basis() -> List[SurfaceClass]:
    images = [(LAMBDA * 3 - _P_SUM) / 2]
    for i in range(6):
        images.append(node_class(TwoTorsionLabel.pair(weierstrass_index(i), 6)))
    for i, j in LINES:
        images.append(trope_class(label_of_line(i, j)))
    return images


_RESTRICT_IMAGES = _restrict_basis()


def restrict(x: ThreefoldClass) -> SurfaceClass:
    """Pic(X) -> NS(S)"""
    total = SurfaceClass.zero()
    for c, image in zip(x.coords, _RESTRICT_IMAGES):
        if c:
            total = total + image * c
    return total


def canonical_restriction_sign() -> int:
    """restrict(K_X) = ±b，返回符号；都不是则为 0"""
    image = restrict(canonical_class())
    if image == B_CLASS:
        return 1
    if image == -B_CLASS:
        return -1
    return 0


# ==================== 伪自同构作用 ====================

class PicardAction:
    """22×22 有理矩阵，第 j 列为第 j 个基向量的像"""

    __slots__ = ('images', 'tag')

    def __init__(self, images: Sequence[ThreefoldClass], tag: str = ''):
        self.images = tuple(images)
        self.tag = tag

    def apply(self, x: ThreefoldClass) -> ThreefoldClass:
        total = ThreefoldClass.zero()
        for c, image in zip(x.coords, self.images):
            if c:
                total = total + image * c
        return total

    __call__ = apply

    def compose(self, other: 'PicardAction') -> 'PicardAction':
        return PicardAction([self.apply(im) for im in other.images], f"{self.tag}∘{other.tag}")

    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(self.images[j].coords[i] for j in range(RANK_X)) for i in range(RANK_X))

    def inverse(self) -> 'PicardAction':
        inv = matrix_rows(qq_matrix(self.rows()).inv())
        images = [ThreefoldClass(tuple(inv[i][j] for i in range(RANK_X))) for j in range(RANK_X)]
        return PicardAction(images, f"({self.tag})^-1")

    def is_identity(self) -> bool:
        return all(im == _unit(k) for k, im in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, PicardAction) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def to_list(self) -> List[List[str]]:
        return [format_vector(row) for row in self.rows()]


def point_relabel(pi: Permutation) -> PicardAction:
    """点的重标号 σ = τ⁻¹πτ，固定 H"""
    def sigma(i: int) -> int:
        return point_index(pi[weierstrass_index(i) - 1])

    images = [H] + [point_class(sigma(i)) for i in range(6)]
    images += [line_class(sigma(i), sigma(j)) for i, j in LINES]
    return PicardAction(images, f"Π_X{pi}")


def _quadric_class(extra: ThreefoldClass, g_lines: ThreefoldClass) -> ThreefoldClass:
    return H * 2 - SUM_E - g_lines + extra


def _base_pseudo_action() -> PicardAction:
    """g = {46,56,14,15}，g' 对应线 E_02, E_03, E_12, E_13"""
    g_lines = line_class(0, 2) + line_class(0, 3) + line_class(1, 2) + line_class(1, 3)
    images = [H * 5 - SUM_E * 2 - g_lines * 2]

    point_swap = {0: 1, 1: 0, 2: 3, 3: 2}
    for i in range(6):
        if i in point_swap:
            images.append(point_class(point_swap[i]))
        elif i == 4:
            images.append(_quadric_class(point_class(5), g_lines))
        else:
            images.append(_quadric_class(point_class(4), g_lines))

    quadric_lines = {(0, 2): (1, 3), (1, 3): (0, 2), (0, 3): (1, 2), (1, 2): (0, 3)}
    line_swap = {
        (0, 4): (1, 5), (1, 5): (0, 4), (0, 5): (1, 4), (1, 4): (0, 5),
        (2, 4): (3, 5), (3, 5): (2, 4), (3, 4): (2, 5), (2, 5): (3, 4),
    }
    for line in LINES:
        if line in quadric_lines:
            images.append(_quadric_class(line_class(*quadric_lines[line]), g_lines))
        elif line in line_swap:
            images.append(line_class(*line_swap[line]))
        else:
            images.append(line_class(*line))
    return PicardAction(images, f"Φ_{BASE_TETRAD}")


@cached(cache=LRUCache(maxsize=64))
def hg_pseudo_action(g: GopelTetrad) -> PicardAction:
    """Φ_g，由基准情形经点重标号共轭得到"""
    if g.type_tag != 1:
        raise GopelTypeError(f"第二类 Göpel 四元组没有 Φ_g: {g}")
    base = _base_pseudo_action()
    if g == BASE_TETRAD:
        return base
    conj = point_relabel(carrying_permutation(g))
    action = conj.compose(base).compose(conj.inverse())
    action.tag = f"Φ_{g}"
    return action


def d_class(g: GopelTetrad) -> ThreefoldClass:
    """D_g = 5H − 2ΣE_i − 2Σ_{β∈g'} E_β"""
    total = H * 5 - SUM_E * 2
    for beta in gopel_complement(g):
        total = total - line_class(*line_of_label(beta)) * 2
    return total


def f_classes(g: GopelTetrad = BASE_TETRAD) -> Dict[str, ThreefoldClass]:
    """基准 g 下两个被收缩的二次曲面类：F_5 = Φ(E_4)，F_4 = Φ(E_5)"""
    action = hg_pseudo_action(g)
    return {"F5": action.apply(point_class(4)), "F4": action.apply(point_class(5))}


def exceptional_image_table(g: GopelTetrad) -> Dict[str, ThreefoldClass]:
    """全部 21 个例外除子在 Φ_g 下的像"""
    action = hg_pseudo_action(g)
    table = {}
    for i in range(6):
        table[f"E{i}"] = action.apply(point_class(i))
    for i, j in LINES:
        table[f"E{i}{j}"] = action.apply(line_class(i, j))
    return table


@dataclass
class CompatibilityResult:
    gopel: GopelTetrad
    passed: bool
    failure: str = ''

    def to_dict(self) -> dict:
        return {"gopel": self.gopel.to_list(), "passed": self.passed, "failure": self.failure}


def compatibility_check(g: GopelTetrad) -> CompatibilityResult:
    """restrict ∘ Φ_g = z_g ∘ restrict 且 Φ_g² = id"""
    action = hg_pseudo_action(g)
    z = hg_type(g)
    names = ["H"] + [f"E{i}" for i in range(6)] + [f"E{i}{j}" for i, j in LINES]
    for name, e in zip(names, basis()):
        if restrict(action.apply(e)) != z.apply(restrict(e)):
            return CompatibilityResult(g, False, f"交换图在 {name} 处不成立")
    if not action.compose(action).is_identity():
        return CompatibilityResult(g, False, "Φ_g² ≠ id")
    if action.apply(canonical_class()) != canonical_class():
        return CompatibilityResult(g, False, "Φ_g(K_X) ≠ K_X")
    return CompatibilityResult(g, True)


def check_all() -> List[CompatibilityResult]:
    return [compatibility_check(g) for g in type1_gopel()]
