#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
精确有理单纯形法
两阶段、Bland 规则，系数为 QQ 元素（gmpy2 mpq 时更快）
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import QQ

from .linalg import from_qq, to_qq

logger = logging.getLogger(__name__)


class LPError(ArithmeticError):
    """线性规划求解异常"""


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    """线性规划结果

    point 为原问题最优点，ge_duals 为每条不等式的对偶乘子，
    bound_duals 为每个变量非负约束的对偶乘子。
    """
    status: LPStatus
    value: Optional[Fraction] = None
    point: List[Fraction] = field(default_factory=list)
    ge_duals: List[Fraction] = field(default_factory=list)
    bound_duals: List[Fraction] = field(default_factory=list)
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL


@dataclass
class _StandardResult:
    status: LPStatus
    value: object = None
    solution: list = field(default_factory=list)
    multipliers: list = field(default_factory=list)
    pivots: int = 0


class SimplexTableau:
    """标准形 min cost·y, A y = b, y >= 0 的两阶段单纯形"""

    def __init__(self, rows: Sequence[Sequence], rhs: Sequence, cost: Sequence):
        zero = QQ(0)
        self.m = len(rows)
        self.n = len(cost)
        self.cost = [to_qq(c) for c in cost]
        self.signs = []
        self.table = []
        for i, (row, b) in enumerate(zip(rows, rhs)):
            qrow = [to_qq(a) for a in row]
            qb = to_qq(b)
            sign = -1 if qb < zero else 1
            if sign < 0:
                qrow = [-a for a in qrow]
                qb = -qb
            self.signs.append(sign)
            art = [zero] * self.m
            art[i] = QQ(1)
            self.table.append(qrow + art + [qb])
        # 人工变量编号 n..n+m-1
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    @property
    def width(self) -> int:
        return self.n + self.m

    def _pivot(self, r: int, j: int):
        row = self.table[r]
        piv = row[j]
        row = [a / piv for a in row]
        self.table[r] = row
        for k in range(self.m):
            if k == r:
                continue
            f = self.table[k][j]
            if f:
                other = self.table[k]
                self.table[k] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = j
        self.pivots += 1

    def _reduced_costs(self, cost: List, allowed: range) -> List:
        zero = QQ(0)
        result = {}
        for j in allowed:
            d = cost[j]
            for r in range(self.m):
                t = self.table[r][j]
                if t:
                    cb = cost[self.basis[r]]
                    if cb:
                        d -= cb * t
            result[j] = d
        return result

    def _run(self, cost: List, allowed: range) -> LPStatus:
        zero = QQ(0)
        while True:
            reduced = self._reduced_costs(cost, allowed)
            entering = next((j for j in allowed if reduced[j] < zero), None)
            if entering is None:
                return LPStatus.OPTIMAL

            best = None
            for r in range(self.m):
                t = self.table[r][entering]
                if t > zero:
                    ratio = self.table[r][-1] / t
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return LPStatus.UNBOUNDED
            self._pivot(best[1], entering)

    def _objective(self, cost: List):
        return sum((cost[self.basis[r]] * self.table[r][-1] for r in range(self.m)), QQ(0))

    def _drive_out_artificials(self):
        zero = QQ(0)
        for r in range(self.m):
            if self.basis[r] < self.n:
                continue
            col = next((j for j in range(self.n) if self.table[r][j] != zero), None)
            if col is not None:
                self._pivot(r, col)
            # 否则该行冗余，人工变量以 0 留在基中

    def solve(self) -> _StandardResult:
        zero = QQ(0)
        phase1 = [zero] * self.n + [QQ(1)] * self.m
        self._run(phase1, range(self.width))
        if self._objective(phase1) != zero:
            return _StandardResult(LPStatus.INFEASIBLE, pivots=self.pivots)

        self._drive_out_artificials()
        cost = self.cost + [zero] * self.m
        status = self._run(cost, range(self.n))
        if status == LPStatus.UNBOUNDED:
            return _StandardResult(LPStatus.UNBOUNDED, pivots=self.pivots)

        solution = [zero] * self.n
        for r, j in enumerate(self.basis):
            if j < self.n:
                solution[j] = self.table[r][-1]

        multipliers = []
        for i in range(self.m):
            art = self.n + i
            pi = sum((cost[self.basis[r]] * self.table[r][art] for r in range(self.m)), zero)
            multipliers.append(pi if self.signs[i] > 0 else -pi)

        return _StandardResult(LPStatus.OPTIMAL, self._objective(cost), solution,
                               multipliers, self.pivots)


def solve_standard(rows, rhs, cost) -> _StandardResult:
    """min cost·y, A y = b, y >= 0"""
    return SimplexTableau(rows, rhs, cost).solve()


def linprog_max(objective: Sequence, eq_rows: Sequence[Sequence] = (), eq_rhs: Sequence = (),
                ge_rows: Sequence[Sequence] = (), ge_rhs: Sequence = ()) -> LPResult:
    """max objective·v s.t. E v = e, G v >= g, v >= 0

    求解其对偶（行数等于变量个数，适合约束多变量少的情形）：
    min e·μ − g·y  s.t.  Eᵀμ − Gᵀy − s = objective, y, s >= 0, μ 自由。
    原问题的最优点即对偶问题等式约束的乘子。

    Returns:
        LPResult，状态区分 OPTIMAL / INFEASIBLE / UNBOUNDED
    """
    nvars = len(objective)
    n_eq, n_ge = len(eq_rows), len(ge_rows)
    if len(eq_rhs) != n_eq or len(ge_rhs) != n_ge:
        raise LPError("约束行数与右端项个数不一致")

    columns = []
    cost = []
    for row, e in zip(eq_rows, eq_rhs):
        columns.append([Fraction(a) for a in row])
        cost.append(Fraction(e))
    for row, e in zip(eq_rows, eq_rhs):
        columns.append([-Fraction(a) for a in row])
        cost.append(-Fraction(e))
    for row, g in zip(ge_rows, ge_rhs):
        columns.append([-Fraction(a) for a in row])
        cost.append(-Fraction(g))
    for k in range(nvars):
        columns.append([Fraction(-1 if i == k else 0) for i in range(nvars)])
        cost.append(Fraction(0))

    rows = [[col[i] for col in columns] for i in range(nvars)]
    dual = solve_standard(rows, objective, cost)
    logger.debug(f"对偶单纯形: {dual.status.value}, {dual.pivots} 次转轴")

    if dual.status == LPStatus.UNBOUNDED:
        return LPResult(LPStatus.INFEASIBLE, pivots=dual.pivots)

    if dual.status == LPStatus.INFEASIBLE:
        probe = solve_standard(rows, [0] * nvars, cost)
        if probe.status == LPStatus.UNBOUNDED:
            return LPResult(LPStatus.INFEASIBLE, pivots=dual.pivots + probe.pivots)
        return LPResult(LPStatus.UNBOUNDED, pivots=dual.pivots + probe.pivots)

    y = dual.solution
    offset = 2 * n_eq
    return LPResult(
        status=LPStatus.OPTIMAL,
        value=from_qq(dual.value),
        point=[from_qq(p) for p in dual.multipliers],
        ge_duals=[from_qq(v) for v in y[offset:offset + n_ge]],
        bound_duals=[from_qq(v) for v in y[offset + n_ge:]],
        pivots=dual.pivots,
    )
