#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
NS(S) 的格等距
平移 t_α、交换 σ、投影 p_α、相关 q_α、Hutchinson–Göpel 型对合 z_g，
以及外部提供的 Keum 作用表（带校验）
"""

import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cachetools import cached, LRUCache
from sympy.polys.matrices import DomainMatrix

from .configuration import (
    LABELS, LABEL_INDEX, BASE_TETRAD, GopelTetrad, GopelTypeError, Permutation,
    TwoTorsionLabel, WeberHexad, carrying_permutation, hexad_dual, is_weber,
    label, labels, relabel, translation_part, type1_gopel,
)
from .linalg import column_values, column_vector, matrix_rows, qq_matrix
from .surface_lattice import (
    C_CLASS, LAMBDA, R_CLASS, RANK, W_DOUBLE_PRIME, SurfaceClass, ALL_NODES,
    gopel_root, gram_matrix, integral_basis, is_integral, node_class, node_sum,
    pair, proj_root, trope_class, weber_root,
)
from .utils import format_vector, get_file_hash, parse_rational

logger = logging.getLogger(__name__)

IDENTITY_ROWS = tuple(tuple(Fraction(int(i == j)) for j in range(RANK)) for i in range(RANK))


class KeumDataError(ValueError):
    """Keum 数据文件无法解析"""


class LatticeIsometry:
    """17×17 有理矩阵，第 j 列为第 j 个基向量的像"""

    __slots__ = ('matrix', 'tag', '_rows')

    def __init__(self, matrix: DomainMatrix, tag: str = ''):
        self.matrix = matrix
        self.tag = tag
        self._rows = None

    @classmethod
    def from_images(cls, images: Sequence[SurfaceClass], tag: str = '') -> 'LatticeIsometry':
        rows = [[images[j].coords[i] for j in range(RANK)] for i in range(RANK)]
        return cls(qq_matrix(rows), tag)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], tag: str = '') -> 'LatticeIsometry':
        if len(rows) != RANK or any(len(r) != RANK for r in rows):
            raise ValueError(f"需要 {RANK}×{RANK} 矩阵")
        return cls(qq_matrix(rows), tag)

    @classmethod
    def identity(cls) -> 'LatticeIsometry':
        return cls(qq_matrix(IDENTITY_ROWS), 'id')

    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        if self._rows is None:
            self._rows = matrix_rows(self.matrix)
        return self._rows

    def apply(self, x: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(column_values(self.matrix * column_vector(x.coords)))

    __call__ = apply

    def compose(self, other: 'LatticeIsometry') -> 'LatticeIsometry':
        """self ∘ other"""
        return LatticeIsometry(self.matrix * other.matrix, f"{self.tag}∘{other.tag}")

    def inverse(self) -> 'LatticeIsometry':
        return LatticeIsometry(self.matrix.inv(), f"({self.tag})^-1")

    def transpose_rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return matrix_rows(self.matrix.transpose())

    def is_identity(self) -> bool:
        return self.rows() == IDENTITY_ROWS

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeIsometry):
            return NotImplemented
        return self.rows() == other.rows()

    def __hash__(self) -> int:
        return hash(self.rows())

    def __repr__(self) -> str:
        return f"LatticeIsometry({self.tag or '?'})"

    def to_list(self) -> List[List[str]]:
        return [format_vector(row) for row in self.rows()]


def compose(f: LatticeIsometry, g: LatticeIsometry) -> LatticeIsometry:
    return f.compose(g)


def inverse(f: LatticeIsometry) -> LatticeIsometry:
    return f.inverse()


def apply(f: LatticeIsometry, x: SurfaceClass) -> SurfaceClass:
    return f.apply(x)


def compose_word(word: Sequence[LatticeIsometry]) -> LatticeIsometry:
    """word = [y_1, ..., y_k] -> y_k ∘ ... ∘ y_1"""
    result = LatticeIsometry.identity()
    for y in word:
        result = y.compose(result)
    return result


# ==================== 性质检查 ====================

_GRAM = None


def _gram() -> DomainMatrix:
    global _GRAM
    if _GRAM is None:
        _GRAM = qq_matrix(gram_matrix())
    return _GRAM


def is_isometry(f: LatticeIsometry) -> bool:
    """Mᵀ G M = G"""
    g = _gram()
    return (f.matrix.transpose() * g * f.matrix).to_list() == g.to_list()


def preserves_integrality(f: LatticeIsometry) -> bool:
    """M 与 M⁻¹ 都把整格映入整格"""
    inv = f.inverse()
    for b in integral_basis():
        if not is_integral(f.apply(b)) or not is_integral(inv.apply(b)):
            return False
    return True


def is_involution(f: LatticeIsometry) -> bool:
    return f.compose(f).is_identity()


# ==================== 经典对合 ====================

@cached(cache=LRUCache(maxsize=32))
def translation(alpha) -> LatticeIsometry:
    """t_α：固定 Λ，N_β ↦ N_{β+α}"""
    alpha = label(alpha)
    images = [LAMBDA] + [node_class(beta + alpha) for beta in LABELS]
    return LatticeIsometry.from_images(images, f"t_{alpha}")


@cached(cache=LRUCache(maxsize=1))
def switch() -> LatticeIsometry:
    """σ：N_α ↔ T_α，Λ ↦ 3Λ − Σ N_α"""
    images = [LAMBDA * 3 - ALL_NODES] + [trope_class(alpha) for alpha in LABELS]
    return LatticeIsometry.from_images(images, "σ")


def reflection(r: SurfaceClass, tag: str = '') -> LatticeIsometry:
    """x ↦ x + (x·r/2) r，对 r² = −4 的根为保形反射"""
    images = []
    for j in range(RANK):
        e = SurfaceClass(tuple(Fraction(int(i == j)) for i in range(RANK)))
        images.append(e + r * (pair(e, r) / 2))
    return LatticeIsometry.from_images(images, tag)


@cached(cache=LRUCache(maxsize=32))
def projection(alpha) -> LatticeIsometry:
    """p_α：关于 (−4) 根 Λ − 2N_α 的反射"""
    alpha = label(alpha)
    return reflection(proj_root(alpha), f"p_{alpha}")


@cached(cache=LRUCache(maxsize=32))
def correlation(alpha) -> LatticeIsometry:
    """q_α = σ ∘ p_α ∘ σ"""
    alpha = label(alpha)
    s = switch()
    q = s.compose(projection(alpha)).compose(s)
    q.tag = f"q_{alpha}"
    return q


def relabel_isometry(pi: Permutation) -> LatticeIsometry:
    """组态重标号诱导的等距：固定 Λ，N_x ↦ N_{ρ_π(x)}"""
    images = [LAMBDA] + [node_class(relabel(pi, alpha)) for alpha in LABELS]
    return LatticeIsometry.from_images(images, f"Π{pi}")


# ==================== Hutchinson–Göpel 型对合 ====================

def _base_hg_type() -> LatticeIsometry:
    """g = {46,56,14,15} 时 z_g 的矩阵"""
    g = BASE_TETRAD.labels
    s = node_sum(g)
    swaps = {
        "00": "16", "16": "00", "26": "36", "36": "26",
        "12": "13", "13": "12", "23": "45", "45": "23",
    }
    partner = {"46": "56", "56": "46", "14": "15", "15": "14"}

    images = [LAMBDA * 3 - s * 2]
    for alpha in LABELS:
        key = str(alpha)
        if key in partner:
            images.append(LAMBDA - s + node_class(partner[key]))
        elif key in swaps:
            images.append(node_class(swaps[key]))
        else:
            images.append(node_class(alpha))
    return LatticeIsometry.from_images(images, f"z_{BASE_TETRAD}")


@cached(cache=LRUCache(maxsize=64))
def hg_type(g: GopelTetrad) -> LatticeIsometry:
    """z_g = φ_g ∘ t_α，由基准情形经重标号共轭得到"""
    if g.type_tag != 1:
        raise GopelTypeError(f"第二类 Göpel 四元组的 z_g 未定义: {g}")
    base = _base_hg_type()
    if g == BASE_TETRAD:
        return base
    pi = carrying_permutation(g)
    conj = relabel_isometry(pi)
    z = conj.compose(base).compose(conj.inverse())
    z.tag = f"z_{g}"
    return z


def hg_involution(g: GopelTetrad) -> LatticeIsometry:
    """φ_g = z_g ∘ t_α"""
    phi = hg_type(g).compose(translation(translation_part(g)))
    phi.tag = f"φ_{g}"
    return phi


def all_hg_types() -> List[Tuple[GopelTetrad, LatticeIsometry]]:
    return [(g, hg_type(g)) for g in type1_gopel()]


# ==================== Aut(D′) ====================

def closure(generators: Sequence[LatticeIsometry], limit: int = 4096) -> List[LatticeIsometry]:
    """生成元在复合下的闭包（有限群）"""
    identity = LatticeIsometry.identity()
    elements = {identity: identity}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for x in frontier:
            for gen in generators:
                y = gen.compose(x)
                if y not in elements:
                    elements[y] = y
                    new_frontier.append(y)
                    if len(elements) > limit:
                        raise ArithmeticError(f"闭包超过 {limit} 个元素")
        frontier = new_frontier
    return list(elements.values())


@cached(cache=LRUCache(maxsize=1))
def aut_dprime_group() -> Tuple[LatticeIsometry, ...]:
    """⟨t_α, σ⟩，阶 32"""
    generators = [translation(alpha) for alpha in LABELS if not alpha.is_zero] + [switch()]
    return tuple(closure(generators))


def stabilizer_of(x: SurfaceClass, group: Iterable[LatticeIsometry]) -> List[LatticeIsometry]:
    return [f for f in group if f.apply(x) == x]


def permutes_nodes_and_tropes(f: LatticeIsometry) -> bool:
    curves = {node_class(a) for a in LABELS} | {trope_class(b) for b in LABELS}
    return {f.apply(x) for x in curves} == curves


# ==================== Keum 作用表 ====================

@dataclass
class KeumValidation:
    """单个条目的校验结果"""
    hexad: WeberHexad
    passed: bool
    failures: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "hexad": self.hexad.to_list(),
            "passed": self.passed,
            "failures": list(self.failures),
        }


@dataclass
class KeumActionTable:
    """120 个第一类 Weber 六元组上的 z_w"""
    entries: List[Tuple[WeberHexad, LatticeIsometry]]
    source_digest: str
    validations: List[KeumValidation] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return (len(self.entries) == 120 and len(self.validations) == len(self.entries)
                and all(v.passed for v in self.validations))

    def generators(self) -> List[Tuple[WeberHexad, LatticeIsometry]]:
        return list(self.entries)


def validate_keum(z: LatticeIsometry, w: WeberHexad, random_checks: int = 0,
                  seed: int = 0) -> KeumValidation:
    """检查 z 作为 z_w 应满足的全部性质

    z(w″) = w″ + 2r_w：等距要求 (w″ + k r_w)² = w″²，
    由 w″·r_w = 12、r_w² = −12 只能 k = 2。
    """
    failures = []
    if w.type_tag != 1:
        return KeumValidation(w, False, ["六元组不是第一类"])

    r_w = weber_root(w)
    r_dual = weber_root(hexad_dual(w))

    if not is_isometry(z):
        failures.append("不保持交数形式")
    if not preserves_integrality(z):
        failures.append("不保持整格")
    if z.apply(R_CLASS) != R_CLASS:
        failures.append("z(T_0) ≠ T_0")
    if z.apply(C_CLASS) != C_CLASS:
        failures.append("z(c) ≠ c")
    if z.apply(W_DOUBLE_PRIME) != W_DOUBLE_PRIME + r_w * 2:
        failures.append("z(w″) ≠ w″ + 2r_w")
    if z.apply(r_dual) != -r_w:
        failures.append("z(r_w') ≠ −r_w")
    if is_involution(z):
        failures.append("z 是对合，与半空间交换矛盾")

    if random_checks and not failures:
        rng = random.Random(seed)
        basis = integral_basis()
        for _ in range(random_checks):
            x = SurfaceClass.zero()
            for b in basis:
                x = x + b * rng.randint(-3, 3)
            if pair(z.apply(x), r_w) != -pair(x, r_dual):
                failures.append("z(x)·r_w ≠ −x·r_w'")
                break

    return KeumValidation(w, not failures, failures)


def _parse_entry(index: int, entry: dict) -> Tuple[WeberHexad, LatticeIsometry]:
    try:
        subset = labels(entry["hexad"])
        rows = [[parse_rational(v) for v in row] for row in entry["matrix"]]
    except (KeyError, TypeError, ValueError) as e:
        raise KeumDataError(f"第 {index} 条记录格式错误: {e}") from e

    if not is_weber(subset):
        raise KeumDataError(f"第 {index} 条记录不是 Weber 六元组: {entry['hexad']}")
    w = WeberHexad(subset)
    if w.type_tag != 1:
        raise KeumDataError(f"第 {index} 条记录不是第一类六元组: {w}")
    try:
        z = LatticeIsometry.from_rows(rows, f"z_{w}")
    except ValueError as e:
        raise KeumDataError(f"第 {index} 条记录矩阵尺寸错误: {e}") from e
    return w, z


def load_keum_actions(file_path: str, validate: bool = True,
                      random_checks: int = 0) -> KeumActionTable:
    """读取 Keum 数据文件并逐条校验

    Raises:
        KeumDataError: 文件为空、JSON 错误或结构错误
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise KeumDataError(f"无法读取 Keum 数据文件 {file_path}: {e}") from e

    if not text.strip():
        raise KeumDataError(f"Keum 数据文件为空: {file_path}")

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise KeumDataError(f"Keum 数据文件 JSON 格式错误: {e}") from e

    raw_entries = data.get("entries") if isinstance(data, dict) else None
    if not isinstance(raw_entries, list) or not raw_entries:
        raise KeumDataError("Keum 数据文件缺少 entries 列表")

    entries = [_parse_entry(k, e) for k, e in enumerate(raw_entries)]
    seen = set()
    for w, _ in entries:
        if w.labels in seen:
            raise KeumDataError(f"六元组重复: {w}")
        seen.add(w.labels)

    digest = get_file_hash(file_path)
    table = KeumActionTable(entries=entries, source_digest=digest)
    logger.info(f"读取 Keum 数据: {len(entries)} 条, sha256={digest[:16]}...")

    if validate:
        table.validations = [validate_keum(z, w, random_checks=random_checks, seed=k)
                             for k, (w, z) in enumerate(entries)]
        failed = [v for v in table.validations if not v.passed]
        if failed:
            logger.warning(f"Keum 数据校验失败: {len(failed)} 条")
    return table


def dump_keum_actions(entries: Sequence[Tuple[WeberHexad, LatticeIsometry]], file_path: str) -> None:
    """按 Keum 数据文件格式写出"""
    payload = {
        "entries": [
            {"hexad": w.to_list(), "matrix": z.to_list()}
            for w, z in entries
        ]
    }
    with open(file_path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, ensure_ascii=False, indent=1)
