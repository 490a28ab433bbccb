#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
有理多面锥 Ω = D̄′ ∩ A
墙系统、成员判定、精确 LP 求面维数、秩 15 证书与归位（homing）算法
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cachetools import cached, LRUCache

from .configuration import (
    LABELS, ZERO, GopelTetrad, WeberHexad, enumerate_gopel, enumerate_weber,
    labels, type1_gopel, type2_gopel,
)
from .exact_lp import LPError, LPStatus, linprog_max
from .isometry_group import (
    KeumActionTable, LatticeIsometry, compose_word, hg_type,
)
from .linalg import rank
from .surface_lattice import (
    C_CLASS, R_CLASS, RANK, W_DOUBLE_PRIME, SurfaceClass, c_class_for_point,
    corr_root, f_class, gopel_root, in_a, node_class, pair, pairing_row,
    proj_root, trope_class, weber_root,
)

logger = logging.getLogger(__name__)


class HomingError(ValueError):
    """归位输入不满足前提"""


@dataclass(frozen=True)
class Wall:
    """一面墙：类型标签、名称与墙类"""
    kind: str
    name: str
    cls: SurfaceClass

    def to_dict(self) -> dict:
        return {"kind": self.kind, "name": self.name, "class": self.cls.to_list()}


@dataclass
class WallSystem:
    walls: List[Wall]
    equalities: List[SurfaceClass]

    def counts(self) -> Dict[str, int]:
        result: Dict[str, int] = {}
        for w in self.walls:
            result[w.kind] = result.get(w.kind, 0) + 1
        return result

    def by_name(self, name: str) -> Wall:
        for w in self.walls:
            if w.name == name:
                return w
        raise KeyError(f"未知的墙: {name}")

    def find(self, cls: SurfaceClass) -> Optional[Wall]:
        for w in self.walls:
            if w.cls == cls:
                return w
        return None


def _set_name(prefix: str, items) -> str:
    return f"{prefix}{{{','.join(items.to_list())}}}"


@cached(cache=LRUCache(maxsize=1))
def wall_system() -> WallSystem:
    """16 结点 + 16 切面 + 16 投影根 + 16 相关根 + 60 r_g + 192 r_w"""
    walls = []
    walls += [Wall("node", f"N{a}", node_class(a)) for a in LABELS]
    walls += [Wall("trope", f"T{a}", trope_class(a)) for a in LABELS]
    walls += [Wall("projection", f"p{a}", proj_root(a)) for a in LABELS]
    walls += [Wall("correlation", f"q{a}", corr_root(a)) for a in LABELS]
    walls += [Wall(f"gopel{g.type_tag}", _set_name("g", g), gopel_root(g)) for g in enumerate_gopel()]
    walls += [Wall(f"weber{w.type_tag}", _set_name("w", w), weber_root(w)) for w in enumerate_weber()]
    logger.debug(f"墙系统: {len(walls)} 面")
    return WallSystem(walls=walls, equalities=[R_CLASS, C_CLASS])


def _is_t0(wall: Wall) -> bool:
    return wall.kind == "trope" and wall.cls == R_CLASS


# ==================== 成员判定 ====================

class Membership(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass
class MembershipResult:
    status: Membership
    tight: List[str] = field(default_factory=list)
    violated: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"status": self.status.value, "tight": self.tight, "violated": self.violated}


def omega_membership(x: SurfaceClass) -> MembershipResult:
    """检查 x·R = x·c = 0 以及各墙配对的符号

    T_0 = R 在 A 上恒为 0，严格性只看其余 315 面墙。
    """
    violated = []
    if pair(x, R_CLASS) != 0:
        violated.append("R")
    if pair(x, C_CLASS) != 0:
        violated.append("c")

    tight = []
    for wall in wall_system().walls:
        if _is_t0(wall):
            continue
        value = pair(x, wall.cls)
        if value < 0:
            violated.append(wall.name)
        elif value == 0:
            tight.append(wall.name)

    if violated:
        return MembershipResult(Membership.OUTSIDE, tight, violated)
    if tight:
        return MembershipResult(Membership.BOUNDARY, tight)
    return MembershipResult(Membership.INTERIOR)


# ==================== 面维数 ====================

@dataclass
class FaceReport:
    """Ω ∩ r^⊥ 的面报告"""
    wall: Optional[Wall]
    nonempty: bool
    dimension: int
    tight_set: List[str] = field(default_factory=list)
    witness: Optional[SurfaceClass] = None
    lp_count: int = 0

    def to_dict(self) -> dict:
        return {
            "wall": self.wall.name if self.wall else "Ω",
            "kind": self.wall.kind if self.wall else "chamber",
            "nonempty": self.nonempty,
            "dimension": self.dimension,
            "tight_set": sorted(self.tight_set),
            "witness": self.witness.to_list() if self.witness else None,
            "lp_count": self.lp_count,
        }


def wall_pairing_row(q: SurfaceClass) -> List[Fraction]:
    """以 (a, m_α = −n_α) 为变量时 x·q 的系数 [4q_a, 2q_α ...]"""
    return [4 * q.coords[0]] + [2 * n for n in q.coords[1:]]


def _to_class(point: Sequence[Fraction]) -> SurfaceClass:
    return SurfaceClass((point[0],) + tuple(-m for m in point[1:RANK]))


def _face_dimension_rows(equalities: Sequence[SurfaceClass], tight: Iterable[Wall]) -> int:
    rows = [pairing_row(q) for q in equalities] + [pairing_row(w.cls) for w in tight]
    return RANK - rank(rows, RANK)


def _dual_method(target: Optional[Wall], system: WallSystem) -> FaceReport:
    """最大化 t：q·x ≥ t（非紧墙），由对偶乘子迭代识别隐含等式"""
    equalities = list(system.equalities) + ([target.cls] if target else [])
    tight: Dict[str, Wall] = {}
    lp_count = 0
    nodes = {w.name: w for w in system.walls if w.kind == "node"}

    while True:
        candidates = [w for w in system.walls
                      if w.name not in tight and w is not target and not _is_t0(w)]
        eq_rows = [wall_pairing_row(q) + [0] for q in equalities]
        eq_rows += [wall_pairing_row(w.cls) + [0] for w in tight.values()]
        eq_rhs = [0] * len(eq_rows)
        eq_rows.append(wall_pairing_row(W_DOUBLE_PRIME) + [0])
        eq_rhs.append(1)

        ge_rows = [wall_pairing_row(w.cls) + [-1] for w in candidates]
        ge_rows.append([0] * RANK + [-1])
        ge_rhs = [0] * len(candidates) + [-1]

        objective = [0] * RANK + [1]
        result = linprog_max(objective, eq_rows, eq_rhs, ge_rows, ge_rhs)
        lp_count += 1

        if result.status == LPStatus.INFEASIBLE:
            return FaceReport(target, False, -1, sorted(tight), None, lp_count)
        if result.status != LPStatus.OPTIMAL:
            raise LPError(f"面 LP 状态异常: {result.status.value}")

        t_star = result.point[RANK]
        if t_star > 0:
            witness = _to_class(result.point)
            dim = _face_dimension_rows(equalities, tight.values())
            return FaceReport(target, True, dim, sorted(tight), witness, lp_count)

        new = [w for w, y in zip(candidates, result.ge_duals) if y > 0]
        for k, s in enumerate(result.bound_duals[1:RANK]):
            if s > 0:
                node = nodes[f"N{LABELS[k]}"]
                if node is not target and node.name not in tight:
                    new.append(node)
        if not new:
            raise LPError("最优值为 0 但对偶解没有给出新的紧墙")
        for w in new:
            tight[w.name] = w
        logger.debug(f"{target.name if target else 'Ω'}: +{len(new)} 紧墙, 共 {len(tight)}")


def _per_wall_method(target: Optional[Wall], system: WallSystem) -> FaceReport:
    """逐墙最大化 q·x；最优值为 0 的墙为隐含等式"""
    equalities = list(system.equalities) + ([target.cls] if target else [])
    candidates = [w for w in system.walls if w is not target and not _is_t0(w)]

    eq_rows = [wall_pairing_row(q) for q in equalities] + [wall_pairing_row(W_DOUBLE_PRIME)]
    eq_rhs = [0] * len(equalities) + [1]
    ge_rows = [wall_pairing_row(w.cls) for w in candidates]
    ge_rhs = [0] * len(candidates)

    points: List[SurfaceClass] = []
    positive = set()
    tight = []
    lp_count = 0
    for wall in candidates:
        if wall.name in positive:
            continue
        result = linprog_max(wall_pairing_row(wall.cls), eq_rows, eq_rhs, ge_rows, ge_rhs)
        lp_count += 1
        if result.status == LPStatus.INFEASIBLE:
            return FaceReport(target, False, -1, [], None, lp_count)
        if result.status != LPStatus.OPTIMAL:
            raise LPError(f"面 LP 状态异常: {result.status.value}")
        if result.value == 0:
            tight.append(wall)
            continue
        x = _to_class(result.point)
        points.append(x)
        positive.update(w.name for w in candidates if pair(x, w.cls) > 0)

    witness = None
    if points:
        witness = points[0]
        for p in points[1:]:
            witness = witness + p
        witness = witness / len(points)
    dim = _face_dimension_rows(equalities, tight)
    return FaceReport(target, True, dim, sorted(w.name for w in tight), witness, lp_count)


FACE_METHODS = {"dual": _dual_method, "per_wall": _per_wall_method}


def face_dimension(wall, method: str = "dual") -> FaceReport:
    """计算 Ω ∩ r^⊥ 的隐含等式集与维数"""
    system = wall_system()
    if isinstance(wall, str):
        wall = system.by_name(wall)
    elif isinstance(wall, SurfaceClass):
        found = system.find(wall)
        if found is None:
            raise ValueError(f"不是 316 面墙之一: {wall}")
        wall = found
    if method not in FACE_METHODS:
        raise ValueError(f"未知的面维数方法: {method}")
    return FACE_METHODS[method](wall, system)


def omega_dimension(method: str = "dual") -> FaceReport:
    """Ω 本身（无额外墙）"""
    return FACE_METHODS[method](None, wall_system())


def representative_walls() -> Dict[str, Wall]:
    """各证明情形的轨道代表"""
    system = wall_system()
    type2_weber = next(w for w in enumerate_weber() if w.type_tag == 2)
    return {
        "ia": system.by_name(f"p{LABELS[0]}"),
        "ib": system.by_name("p12"),
        "ii": system.by_name(f"q{LABELS[0]}"),
        "iii": system.find(gopel_root(labels("13", "15", "23", "25"))),
        "iv": system.find(weber_root(type2_weber)),
    }


def facet_representative() -> Wall:
    return wall_system().find(gopel_root(labels("46", "56", "14", "15")))


def sweep_walls(full: bool = False) -> List[Wall]:
    """representatives 或全部非结点非切面墙"""
    if not full:
        return list(representative_walls().values()) + [facet_representative()]
    return [w for w in wall_system().walls if w.kind not in ("node", "trope")]


# ==================== 秩 15 证书 ====================

@dataclass
class RankCertificate:
    rank: int
    rows: List[str]
    memberships: Dict[str, str]
    on_faces: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return (self.rank == 15 and all(s != Membership.OUTSIDE.value for s in self.memberships.values())
                and all(self.on_faces.values()))

    def to_dict(self) -> dict:
        return {"rank": self.rank, "rows": self.rows, "memberships": self.memberships,
                "on_faces": self.on_faces, "passed": self.passed}


def dimension_certificate() -> RankCertificate:
    """{C_i} ∪ {F_g}（第二类 g）的秩为 15，且均在 Ω 中"""
    classes = {}
    for i in range(1, 7):
        classes[f"C{i}"] = c_class_for_point(i)
    on_faces = {}
    for g in type2_gopel():
        name = f"F{g}"
        classes[name] = f_class(g)
        on_faces[name] = pair(classes[name], gopel_root(g)) == 0
    memberships = {name: omega_membership(x).status.value for name, x in classes.items()}
    r = rank([pairing_row(x) for x in classes.values()], RANK)
    return RankCertificate(r, list(classes), memberships, on_faces)


# ==================== 归位算法 ====================

@dataclass
class Generator:
    name: str
    isometry: LatticeIsometry
    inverse_image: SurfaceClass  # y⁻¹(w″)


@dataclass
class HomingResult:
    word: List[str]
    isometry: LatticeIsometry
    point: SurfaceClass
    values: List[Fraction]
    membership: Membership

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "steps": len(self.word),
            "point": self.point.to_list(),
            "values": [str(v) for v in self.values],
            "membership": self.membership.value,
        }


def homing_generators(keum_table: Optional[KeumActionTable] = None) -> List[Generator]:
    """45 个 z_g，加上（若有）已通过校验的 z_w 及其逆"""
    gens = []
    for g in type1_gopel():
        z = hg_type(g)
        gens.append(Generator(f"z{g}", z, z.apply(W_DOUBLE_PRIME)))
    if keum_table is not None:
        if not keum_table.accepted:
            raise HomingError("Keum 作用表未通过校验")
        for w, z in keum_table.entries:
            inv = z.inverse()
            gens.append(Generator(f"z{w}", z, inv.apply(W_DOUBLE_PRIME)))
            gens.append(Generator(f"z{w}^-1", inv, z.apply(W_DOUBLE_PRIME)))
    return gens


def homing(u: SurfaceClass, generators: Sequence[Generator], max_steps: int = 500) -> HomingResult:
    """贪心下降：每步选使 y(u)·w″ 最小且严格下降的生成元

    y(u)·w″ = u·y⁻¹(w″)；并列时取生成元顺序靠前者。
    """
    if not in_a(u):
        raise HomingError("输入不在 A 中")
    if pair(u, u) <= 0 or pair(u, W_DOUBLE_PRIME) <= 0:
        raise HomingError("输入不在正锥中")

    word: List[Generator] = []
    current = u
    value = pair(current, W_DOUBLE_PRIME)
    values = [value]
    for _ in range(max_steps):
        best = None
        for gen in generators:
            candidate = pair(current, gen.inverse_image)
            if candidate < value and (best is None or candidate < best[0]):
                best = (candidate, gen)
        if best is None:
            break
        value, gen = best
        current = gen.isometry.apply(current)
        word.append(gen)
        values.append(value)
    else:
        raise HomingError(f"超过 {max_steps} 步仍未终止")

    h = compose_word([g.isometry for g in word])
    status = omega_membership(current).status
    return HomingResult([g.name for g in word], h, current, values, status)


def random_word(rng: random.Random, generators: Sequence[Generator], max_length: int) -> List[Generator]:
    length = rng.randint(1, max_length)
    return [rng.choice(generators) for _ in range(length)]


@dataclass
class RoundTrip:
    word: List[str]
    recovered: bool
    identity: bool
    homing: HomingResult

    @property
    def passed(self) -> bool:
        return self.recovered and self.identity


def homing_round_trip(rng: random.Random, generators: Sequence[Generator],
                      max_length: int = 6, max_steps: int = 500) -> RoundTrip:
    """u = W(w″)，归位后应回到 w″ 且 h∘W = id"""
    word = random_word(rng, generators, max_length)
    w_iso = compose_word([g.isometry for g in word])
    u = w_iso.apply(W_DOUBLE_PRIME)
    result = homing(u, generators, max_steps)
    recovered = result.point == W_DOUBLE_PRIME
    identity = result.isometry.compose(w_iso).is_identity()
    return RoundTrip([g.name for g in word], recovered, identity, result)


def face_pairing(g: GopelTetrad) -> bool:
    """z_g 交换 r_g 两侧：z_g(r_g) = −r_g"""
    r = gopel_root(g)
    return hg_type(g).apply(r) == -r
