#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
(16,6) 组态模块
二阶挠点群 J(C)_2、结点/切面关联、Göpel 四元组、Weber 六元组与 S_6 重标号
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

FULL_MASK = 0b111111


class LabelError(ValueError):
    """无效的二阶挠点标号"""


class GopelTypeError(ValueError):
    """Göpel 四元组类型不符合要求"""


def _normalize_mask(mask: int) -> int:
    # 偶子集模补集：取不含 6 的代表元
    mask &= FULL_MASK
    if mask & (1 << 5):
        mask ^= FULL_MASK
    return mask


@dataclass(frozen=True)
class TwoTorsionLabel:
    """J(C)_2 的元素：0 或 ij (1 <= i < j <= 6)"""
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if (self.i, self.j) == (0, 0):
            return
        if not (1 <= self.i < self.j <= 6):
            raise LabelError(f"无效的标号: ({self.i}, {self.j})")

    @classmethod
    def pair(cls, i: int, j: int) -> 'TwoTorsionLabel':
        if i == j:
            return ZERO
        return cls(min(i, j), max(i, j))

    @classmethod
    def from_mask(cls, mask: int) -> 'TwoTorsionLabel':
        mask = _normalize_mask(mask)
        if mask == 0:
            return ZERO
        indices = [k + 1 for k in range(6) if mask >> k & 1]
        if len(indices) == 4:
            indices = [k + 1 for k in range(6) if not mask >> k & 1]
        if len(indices) != 2:
            raise LabelError(f"奇子集不是二阶挠点: {mask:06b}")
        return cls(indices[0], indices[1])

    @property
    def is_zero(self) -> bool:
        return self.i == 0

    @property
    def mask(self) -> int:
        if self.is_zero:
            return 0
        return _normalize_mask((1 << (self.i - 1)) | (1 << (self.j - 1)))

    @property
    def index(self) -> int:
        """规范顺序中的位置"""
        return LABEL_INDEX[self]

    def indices(self) -> Tuple[int, ...]:
        return () if self.is_zero else (self.i, self.j)

    def __add__(self, other: 'TwoTorsionLabel') -> 'TwoTorsionLabel':
        return _ADD_TABLE[(self, other)]

    def __lt__(self, other: 'TwoTorsionLabel') -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        return "00" if self.is_zero else f"{self.i}{self.j}"

    def __repr__(self) -> str:
        return f"L{self}"


ZERO = TwoTorsionLabel()

CANONICAL_ORDER = (
    "00", "16", "26", "36", "46", "56", "12", "13",
    "14", "15", "23", "24", "25", "34", "35", "45",
)


def label(text: Union[str, int, TwoTorsionLabel]) -> TwoTorsionLabel:
    """解析标号字符串 "00"/"0"/"66"/"16"/"61" 等"""
    if isinstance(text, TwoTorsionLabel):
        return text
    s = str(text).strip()
    if s in ("0", "00", "66"):
        return ZERO
    if len(s) != 2 or not s.isdigit():
        raise LabelError(f"无效的标号字符串: {text!r}")
    i, j = int(s[0]), int(s[1])
    if not (1 <= i <= 6 and 1 <= j <= 6):
        raise LabelError(f"标号下标超出范围: {text!r}")
    return TwoTorsionLabel.pair(i, j)


def labels(*items) -> FrozenSet[TwoTorsionLabel]:
    """批量解析为标号集合"""
    if len(items) == 1 and not isinstance(items[0], (str, int, TwoTorsionLabel)):
        items = tuple(items[0])
    return frozenset(label(x) for x in items)


LABELS: Tuple[TwoTorsionLabel, ...] = tuple(label(s) for s in CANONICAL_ORDER)
LABEL_INDEX: Dict[TwoTorsionLabel, int] = {lab: k for k, lab in enumerate(LABELS)}

_ADD_TABLE = {
    (x, y): TwoTorsionLabel.from_mask(x.mask ^ y.mask)
    for x in LABELS for y in LABELS
}


def add(alpha: TwoTorsionLabel, beta: TwoTorsionLabel) -> TwoTorsionLabel:
    """群运算（对称差）"""
    return alpha + beta


def sort_labels(items: Iterable[TwoTorsionLabel]) -> List[TwoTorsionLabel]:
    return sorted(items, key=lambda x: LABEL_INDEX[x])


def format_labels(items: Iterable[TwoTorsionLabel]) -> List[str]:
    return [str(x) for x in sort_labels(items)]


# ==================== 切面关联 ====================

I_T0 = labels("00", "16", "26", "36", "46", "56")


@lru_cache(maxsize=None)
def trope_incidence(beta: TwoTorsionLabel) -> FrozenSet[TwoTorsionLabel]:
    """I(T_β) = I(T_0) + β"""
    return frozenset(alpha + beta for alpha in I_T0)


def translate(alpha: TwoTorsionLabel, items):
    """平移作用于标号或标号集合"""
    if isinstance(items, TwoTorsionLabel):
        return items + alpha
    return frozenset(x + alpha for x in items)


def in_common_trope(subset: Iterable[TwoTorsionLabel]) -> bool:
    subset = frozenset(subset)
    return any(subset <= trope_incidence(beta) for beta in LABELS)


# ==================== Göpel 四元组 ====================

@dataclass(frozen=True)
class GopelTetrad:
    """Göpel 四元组，类型相对 T_0 计算"""
    labels: FrozenSet[TwoTorsionLabel]

    @property
    def type_tag(self) -> int:
        meet = len(self.labels & I_T0)
        if meet == 2:
            return 1
        if meet == 0:
            return 2
        raise GopelTypeError(f"不是 Göpel 四元组: {self}")

    def sorted(self) -> List[TwoTorsionLabel]:
        return sort_labels(self.labels)

    def key(self) -> Tuple[int, ...]:
        return tuple(x.index for x in self.sorted())

    def to_list(self) -> List[str]:
        return [str(x) for x in self.sorted()]

    def __str__(self) -> str:
        return "{" + ",".join(self.to_list()) + "}"


def is_gopel(subset: Iterable[TwoTorsionLabel]) -> bool:
    """四个结点中任意三个不在同一切面上"""
    subset = frozenset(subset)
    if len(subset) != 4:
        return False
    return not any(in_common_trope(triple) for triple in combinations(subset, 3))


def tetrad(*items) -> GopelTetrad:
    """构造并校验 Göpel 四元组"""
    subset = labels(*items)
    if not is_gopel(subset):
        raise GopelTypeError(f"不是 Göpel 四元组: {format_labels(subset)}")
    return GopelTetrad(subset)


def _p(i: int, j: int) -> TwoTorsionLabel:
    return TwoTorsionLabel.pair(i, j)


def _pairings(items: Sequence[int]) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """四个元素分成两对的 3 种方式"""
    a, b, c, d = items
    return [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]


@lru_cache(maxsize=None)
def enumerate_gopel() -> Tuple[GopelTetrad, ...]:
    """按封闭形式枚举全部 60 个 Göpel 四元组（45 个第一类，15 个第二类）"""
    found = set()
    five = range(1, 6)

    # 第一类 {0, i6, jk, lm}
    for i in five:
        rest = [k for k in five if k != i]
        for (j, k), (l, m) in _pairings(rest):
            found.add(frozenset({ZERO, _p(i, 6), _p(j, k), _p(l, m)}))

    # 第一类 {k6, l6, ik, il}
    for k, l in combinations(five, 2):
        for i in five:
            if i in (k, l):
                continue
            found.add(frozenset({_p(k, 6), _p(l, 6), _p(i, k), _p(i, l)}))

    # 第二类 {ik, il, jk, jl}
    for quad in combinations(five, 4):
        for (i, j), (k, l) in _pairings(quad):
            found.add(frozenset({_p(i, k), _p(i, l), _p(j, k), _p(j, l)}))

    result = tuple(sorted((GopelTetrad(s) for s in found), key=GopelTetrad.key))
    logger.debug(f"Göpel 四元组: {len(result)}")
    return result


def brute_force_gopel() -> List[FrozenSet[TwoTorsionLabel]]:
    """独立的暴力过滤：遍历全部 1820 个四元子集"""
    return [frozenset(s) for s in combinations(LABELS, 4) if is_gopel(s)]


def gopel_complement(g: GopelTetrad) -> FrozenSet[TwoTorsionLabel]:
    """g' = {β : I(T_β) ∩ g = ∅}，仅对第一类定义"""
    if g.type_tag != 1:
        raise GopelTypeError(f"第二类 Göpel 四元组没有 g': {g}")
    return frozenset(beta for beta in LABELS if not (trope_incidence(beta) & g.labels))


# ==================== Weber 六元组 ====================

@dataclass(frozen=True)
class WeberHexad:
    """Weber 六元组，类型相对 T_0 计算"""
    labels: FrozenSet[TwoTorsionLabel]

    @property
    def type_tag(self) -> int:
        meet = len(self.labels & I_T0)
        return 1 if meet == 3 else 2

    def sorted(self) -> List[TwoTorsionLabel]:
        return sort_labels(self.labels)

    def key(self) -> Tuple[int, ...]:
        return tuple(x.index for x in self.sorted())

    def to_list(self) -> List[str]:
        return [str(x) for x in self.sorted()]

    def __str__(self) -> str:
        return "{" + ",".join(self.to_list()) + "}"


@lru_cache(maxsize=None)
def _gopel_sets() -> FrozenSet[FrozenSet[TwoTorsionLabel]]:
    return frozenset(g.labels for g in enumerate_gopel())


def _forbidden_quadruple(quad: FrozenSet[TwoTorsionLabel]) -> bool:
    return in_common_trope(quad) or quad in _gopel_sets()


def is_weber(subset: Iterable[TwoTorsionLabel]) -> bool:
    """六个结点中任意四个既不在同一切面上，也不构成 Göpel 四元组"""
    subset = frozenset(subset)
    if len(subset) != 6:
        return False
    return not any(_forbidden_quadruple(frozenset(q)) for q in combinations(subset, 4))


def hexad(*items) -> WeberHexad:
    subset = labels(*items)
    if not is_weber(subset):
        raise LabelError(f"不是 Weber 六元组: {format_labels(subset)}")
    return WeberHexad(subset)


@lru_cache(maxsize=None)
def enumerate_weber() -> Tuple[WeberHexad, ...]:
    """回溯搜索全部 192 个 Weber 六元组"""
    found: List[WeberHexad] = []

    def extend(chosen: List[TwoTorsionLabel], start: int):
        if len(chosen) == 6:
            found.append(WeberHexad(frozenset(chosen)))
            return
        for k in range(start, len(LABELS)):
            new = LABELS[k]
            # 只检查包含新元素的四元子集
            if any(_forbidden_quadruple(frozenset(triple) | {new})
                   for triple in combinations(chosen, 3)):
                continue
            chosen.append(new)
            extend(chosen, k + 1)
            chosen.pop()

    extend([], 0)
    logger.debug(f"Weber 六元组: {len(found)}")
    return tuple(found)


def brute_force_weber() -> List[FrozenSet[TwoTorsionLabel]]:
    """独立的暴力过滤：遍历全部 8008 个六元子集"""
    return [frozenset(s) for s in combinations(LABELS, 6) if is_weber(s)]


def hexad_dual(w: WeberHexad) -> WeberHexad:
    """第一类六元组的对偶 w △ I(T_0)"""
    if w.type_tag != 1:
        raise LabelError(f"第二类 Weber 六元组没有对偶: {w}")
    return WeberHexad(w.labels ^ I_T0)


def weber_dual_pairs() -> List[Tuple[WeberHexad, WeberHexad]]:
    """第一类六元组的 60 个对偶对"""
    pairs = []
    seen = set()
    for w in enumerate_weber():
        if w.type_tag != 1 or w.labels in seen:
            continue
        dual = hexad_dual(w)
        seen.update({w.labels, dual.labels})
        pairs.append((w, dual))
    return pairs


# ==================== S_6 重标号 ====================

Permutation = Tuple[int, ...]


def permutation(images: Sequence[int]) -> Permutation:
    """images[k-1] = π(k)"""
    perm = tuple(int(x) for x in images)
    if sorted(perm) != [1, 2, 3, 4, 5, 6]:
        raise ValueError(f"无效的置换: {images}")
    return perm


IDENTITY_PERMUTATION: Permutation = (1, 2, 3, 4, 5, 6)


def transposition(i: int, j: int) -> Permutation:
    images = list(IDENTITY_PERMUTATION)
    images[i - 1], images[j - 1] = j, i
    return tuple(images)


def compose_permutations(pi: Permutation, sigma: Permutation) -> Permutation:
    """(πσ)(k) = π(σ(k))"""
    return tuple(pi[sigma[k] - 1] for k in range(6))


def invert_permutation(pi: Permutation) -> Permutation:
    images = [0] * 6
    for k, v in enumerate(pi, start=1):
        images[v - 1] = k
    return tuple(images)


def all_permutations() -> Iterable[Permutation]:
    return permutations(IDENTITY_PERMUTATION)


def _relabel_pair(pi: Permutation, x: TwoTorsionLabel) -> TwoTorsionLabel:
    if x.is_zero:
        return ZERO
    return TwoTorsionLabel.pair(pi[x.i - 1], pi[x.j - 1])


def relabel_trope(pi: Permutation, beta: TwoTorsionLabel) -> TwoTorsionLabel:
    """切面标号上的作用：两个下标同时置换"""
    return _relabel_pair(pi, beta)


def relabel(pi: Permutation, x):
    """结点上的 S_6 作用 ρ_π(x) = λ_π(x) + π(6)6

    与切面上的 λ_π 一起保持关联：ρ_π(I(T_β)) = I(T_{λ_π(β)})，
    且 ρ_π 保持 I(T_0)。
    """
    shift = TwoTorsionLabel.pair(pi[5], 6)
    if isinstance(x, TwoTorsionLabel):
        return _relabel_pair(pi, x) + shift
    if isinstance(x, GopelTetrad):
        return GopelTetrad(relabel(pi, x.labels))
    if isinstance(x, WeberHexad):
        return WeberHexad(relabel(pi, x.labels))
    return frozenset(relabel(pi, y) for y in x)


BASE_TETRAD = GopelTetrad(labels("46", "56", "14", "15"))


@lru_cache(maxsize=None)
def carrying_permutation(g: GopelTetrad) -> Permutation:
    """把基准四元组 {46,56,14,15} 映到 g 的第一个置换（字典序）"""
    if g.type_tag != 1:
        raise GopelTypeError(f"需要第一类 Göpel 四元组: {g}")
    for pi in all_permutations():
        if relabel(pi, BASE_TETRAD.labels) == g.labels:
            return pi
    raise GopelTypeError(f"找不到把基准四元组映到 {g} 的置换")


def translation_part(g: GopelTetrad) -> TwoTorsionLabel:
    """z_g = φ_g ∘ t_α 中的 α：g ∩ I(T_0) 两个元素之和"""
    if g.type_tag != 1:
        raise GopelTypeError(f"需要第一类 Göpel 四元组: {g}")
    first, second = sort_labels(g.labels & I_T0)
    return first + second


def type1_gopel() -> List[GopelTetrad]:
    return [g for g in enumerate_gopel() if g.type_tag == 1]


def type2_gopel() -> List[GopelTetrad]:
    return [g for g in enumerate_gopel() if g.type_tag == 2]


def type1_weber() -> List[WeberHexad]:
    return [w for w in enumerate_weber() if w.type_tag == 1]
