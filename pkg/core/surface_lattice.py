#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Néron–Severi 格 NS(S)
基 {Λ; N_α}（α 按规范顺序），精确有理坐标
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cachetools import cached, LRUCache

from .configuration import (
    LABELS, LABEL_INDEX, I_T0, ZERO, GopelTetrad, WeberHexad,
    TwoTorsionLabel, label, labels, trope_incidence,
)
from .linalg import inertia, lattice_basis, nullspace, smith_invariants, solve
from .utils import format_vector, parse_vector

logger = logging.getLogger(__name__)

RANK = 17


@dataclass(frozen=True)
class SurfaceClass:
    """NS(S) ⊗ Q 中的类：coords[0] 为 Λ 系数，coords[1+k] 为第 k 个结点系数"""
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != RANK:
            raise ValueError(f"坐标长度应为 {RANK}: {len(self.coords)}")

    @classmethod
    def of(cls, values: Iterable) -> 'SurfaceClass':
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls) -> 'SurfaceClass':
        return cls((Fraction(0),) * RANK)

    @property
    def lambda_coeff(self) -> Fraction:
        return self.coords[0]

    @property
    def node_coeffs(self) -> Tuple[Fraction, ...]:
        return self.coords[1:]

    def node(self, alpha: TwoTorsionLabel) -> Fraction:
        return self.coords[1 + LABEL_INDEX[alpha]]

    def __add__(self, other: 'SurfaceClass') -> 'SurfaceClass':
        return SurfaceClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: 'SurfaceClass') -> 'SurfaceClass':
        return SurfaceClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> 'SurfaceClass':
        return SurfaceClass(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> 'SurfaceClass':
        scalar = Fraction(scalar)
        return SurfaceClass(tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> 'SurfaceClass':
        return self * (1 / Fraction(scalar))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_list(self) -> List[str]:
        return format_vector(self.coords)

    @classmethod
    def from_list(cls, items: Sequence[str]) -> 'SurfaceClass':
        return cls(tuple(parse_vector(items)))

    def __str__(self) -> str:
        terms = []
        if self.coords[0]:
            terms.append(f"{self.coords[0]}Λ")
        for alpha, n in zip(LABELS, self.coords[1:]):
            if n:
                terms.append(f"{n}N{alpha}")
        return " + ".join(terms) if terms else "0"


def pair(x: SurfaceClass, y: SurfaceClass) -> Fraction:
    """交数：Λ² = 4，N_α² = −2，其余为 0"""
    value = 4 * x.coords[0] * y.coords[0]
    value -= 2 * sum((a * b for a, b in zip(x.coords[1:], y.coords[1:])), Fraction(0))
    return value


def gram_matrix() -> Tuple[Tuple[Fraction, ...], ...]:
    rows = []
    for i in range(RANK):
        row = [Fraction(0)] * RANK
        row[i] = Fraction(4) if i == 0 else Fraction(-2)
        rows.append(tuple(row))
    return tuple(rows)


def signature() -> Tuple[int, int]:
    """合同对角化得到 (正, 负)"""
    pos, neg, _ = inertia(gram_matrix())
    return pos, neg


def pairing_row(q: SurfaceClass) -> Tuple[Fraction, ...]:
    """x ↦ x·q 的系数行"""
    return (4 * q.coords[0],) + tuple(-2 * n for n in q.coords[1:])


# ==================== 基本类 ====================

def _unit(index: int) -> SurfaceClass:
    coords = [Fraction(0)] * RANK
    coords[index] = Fraction(1)
    return SurfaceClass(tuple(coords))


LAMBDA = _unit(0)


def node_class(alpha) -> SurfaceClass:
    return _unit(1 + LABEL_INDEX[label(alpha)])


def node_sum(subset: Iterable) -> SurfaceClass:
    total = SurfaceClass.zero()
    for alpha in subset:
        total = total + node_class(alpha)
    return total


ALL_NODES = node_sum(LABELS)


def trope_class(beta) -> SurfaceClass:
    """T_β = (Λ − Σ_{α∈I(T_β)} N_α)/2"""
    beta = label(beta)
    return (LAMBDA - node_sum(trope_incidence(beta))) / 2


R_CLASS = trope_class(ZERO)
C_CLASS = LAMBDA * 2 - ALL_NODES
B_CLASS = C_CLASS - R_CLASS


def b_class_displayed() -> SurfaceClass:
    """(3Λ − Σ_i N_{i6} − 2Σ_{i<j≤5} N_{ij})/2，N_{66} = N_0"""
    others = [alpha for alpha in LABELS if alpha not in I_T0]
    return (LAMBDA * 3 - node_sum(I_T0) - node_sum(others) * 2) / 2


W_PRIME = LAMBDA * 2 - ALL_NODES / 2
W_DOUBLE_PRIME = (LAMBDA * 15 - ALL_NODES * 3 - node_sum(I_T0) * 2) / 7


def gopel_root(g) -> SurfaceClass:
    """r_g = Λ − Σ_{α∈g} N_α"""
    subset = g.labels if isinstance(g, GopelTetrad) else labels(g)
    return LAMBDA - node_sum(subset)


def weber_root(w) -> SurfaceClass:
    """r_w = 3Λ − 2Σ_{α∈w} N_α"""
    subset = w.labels if isinstance(w, WeberHexad) else labels(w)
    return LAMBDA * 3 - node_sum(subset) * 2


def proj_root(alpha) -> SurfaceClass:
    return LAMBDA - node_class(alpha) * 2


def corr_root(alpha) -> SurfaceClass:
    """σ(Λ − 2N_α)，由交换对合计算"""
    from .isometry_group import switch
    return switch().apply(proj_root(alpha))


def c_class_for_point(i: int) -> SurfaceClass:
    """C_i = 5Λ − 5N_{i6} − Σ_{α≠i6} N_α，i = 1..6（66 = 0）"""
    special = TwoTorsionLabel.pair(i, 6)
    return LAMBDA * 5 - node_class(special) * 4 - ALL_NODES


def f_class(g) -> SurfaceClass:
    """第二类 g 的 F_g = 6Λ − 2Σ_{I(T_0)} N − 3Σ_g N"""
    subset = g.labels if isinstance(g, GopelTetrad) else labels(g)
    if subset & I_T0:
        raise ValueError(f"F_g 只对第二类 Göpel 四元组定义: {sorted(map(str, subset))}")
    return LAMBDA * 6 - node_sum(I_T0) * 2 - node_sum(subset) * 3


_NAMED = {
    'Lambda': lambda arg: LAMBDA,
    'N': node_class,
    'T': trope_class,
    'R': lambda arg: R_CLASS,
    'b': lambda arg: B_CLASS,
    'c': lambda arg: C_CLASS,
    "w'": lambda arg: W_PRIME,
    "w''": lambda arg: W_DOUBLE_PRIME,
    'r_g': gopel_root,
    'r_w': weber_root,
    'C': c_class_for_point,
    'F': f_class,
    'proj_root': proj_root,
    'corr_root': corr_root,
}

_ALIASES = {'Λ': 'Lambda', 'w′': "w'", 'w″': "w''"}


def named_class(name: str, arg=None) -> SurfaceClass:
    """按名称取特殊类

    Args:
        name: Lambda/N/T/R/b/c/w'/w''/r_g/r_w/C/F/proj_root/corr_root
        arg: 需要参数的类（标号、四元组、六元组或下标）

    Raises:
        ValueError: 未知名称
    """
    key = _ALIASES.get(name, name)
    if key not in _NAMED:
        raise ValueError(f"未知的类名: {name}")
    return _NAMED[key](arg)


# ==================== 整性 ====================

def _generators_times_two() -> List[Tuple[int, ...]]:
    gens = []
    for alpha in LABELS:
        gens.append(tuple(int(2 * v) for v in node_class(alpha).coords))
    for beta in LABELS:
        gens.append(tuple(int(2 * v) for v in trope_class(beta).coords))
    return gens


@cached(cache=LRUCache(maxsize=1))
def integral_basis() -> Tuple[SurfaceClass, ...]:
    """{N_α, T_β} 整生成格的一组基"""
    basis = lattice_basis(_generators_times_two())
    if len(basis) != RANK:
        raise ArithmeticError(f"整格秩应为 {RANK}，实际 {len(basis)}")
    return tuple(SurfaceClass.of(Fraction(v, 2) for v in vec) for vec in basis)


@cached(cache=LRUCache(maxsize=1))
def _basis_columns() -> Tuple[Tuple[Fraction, ...], ...]:
    basis = integral_basis()
    return tuple(tuple(b.coords[i] for b in basis) for i in range(RANK))


def integral_coordinates(x: SurfaceClass) -> Tuple[Fraction, ...]:
    """x 在整基下的坐标"""
    return solve(_basis_columns(), x.coords)


def is_integral(x: SurfaceClass) -> bool:
    """x 是否属于 {N_α, T_β} 的整张成"""
    if any((2 * v).denominator != 1 for v in x.coords):
        return False
    return all(v.denominator == 1 for v in integral_coordinates(x))


def lattice_gram() -> List[List[int]]:
    """整基下的 Gram 矩阵"""
    basis = integral_basis()
    return [[int(pair(u, v)) for v in basis] for u in basis]


def discriminant_invariants() -> Tuple[int, ...]:
    """判别群的非平凡不变因子"""
    return tuple(f for f in smith_invariants(lattice_gram()) if f != 1)


def is_even() -> bool:
    return all(pair(b, b) % 2 == 0 for b in integral_basis())


# ==================== B 与 A = B^⊥ ====================

def orthogonal_complement(classes: Sequence[SurfaceClass]) -> List[SurfaceClass]:
    """{x : x·q = 0, q ∈ classes} 的一组基"""
    rows = [pairing_row(q) for q in classes]
    return [SurfaceClass(v) for v in nullspace(rows, RANK)]


@cached(cache=LRUCache(maxsize=1))
def a_basis() -> Tuple[SurfaceClass, ...]:
    """A = B^⊥，B = ⟨b, R⟩"""
    return tuple(orthogonal_complement([B_CLASS, R_CLASS]))


def in_a(x: SurfaceClass) -> bool:
    return pair(x, R_CLASS) == 0 and pair(x, C_CLASS) == 0


def random_point_in_a(rng, bound: int = 5) -> SurfaceClass:
    """A 中的随机整系数组合（不保证正性）"""
    total = SurfaceClass.zero()
    for b in a_basis():
        total = total + b * rng.randint(-bound, bound)
    return total


def neg2_classes_in_b(box: int = 3) -> List[SurfaceClass]:
    """B 中所有 x = (v/2)c + tR，x² = −2 的类

    x² = −2(2v² + vt + t²) 负定，有限盒子内枚举即可。
    """
    found = []
    for v, t in product(range(-box, box + 1), repeat=2):
        x = C_CLASS * Fraction(v, 2) + R_CLASS * t
        if pair(x, x) == -2:
            found.append((v, t, x))
    logger.debug(f"B 中 (−2) 类: {[(v, t) for v, t, _ in found]}")
    return [x for _, _, x in found]


def neg2_solutions_in_b(box: int = 3) -> List[Tuple[int, int]]:
    return [(v, t) for v, t in product(range(-box, box + 1), repeat=2)
            if 2 * v * v + v * t + t * t == 1]
