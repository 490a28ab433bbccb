#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
精确线性代数工具
基于 sympy DomainMatrix（QQ/ZZ），对外统一使用 Fraction
"""

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def to_qq(value):
    """Fraction/int -> QQ 元素"""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(element) -> Fraction:
    """QQ 元素 -> Fraction"""
    return Fraction(int(element.numerator), int(element.denominator))


def qq_matrix(rows: Sequence[Sequence], ncols: int = None) -> DomainMatrix:
    """从有理数行构造 QQ 上的 DomainMatrix（支持零行）"""
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if nrows else 0
    data = [[to_qq(e) for e in row] for row in rows]
    return DomainMatrix(data, (nrows, ncols), QQ)


def zz_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    """从整数行构造 ZZ 上的 DomainMatrix"""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    return DomainMatrix([[ZZ(int(e)) for e in row] for row in rows], (nrows, ncols), ZZ)


def matrix_rows(matrix: DomainMatrix) -> Tuple[Vector, ...]:
    """DomainMatrix -> Fraction 行元组"""
    m = matrix.convert_to(QQ)
    return tuple(tuple(from_qq(e) for e in row) for row in m.to_list())


def column_vector(values: Sequence) -> DomainMatrix:
    return qq_matrix([[v] for v in values], 1)


def column_values(matrix: DomainMatrix) -> Vector:
    return tuple(from_qq(row[0]) for row in matrix.to_list())


def rank(rows: Sequence[Sequence], ncols: int = None) -> int:
    """精确秩"""
    if not rows:
        return 0
    return qq_matrix(rows, ncols).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """{x : rows·x = 0} 的一组基"""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    basis = qq_matrix(rows, ncols).nullspace()
    if basis.shape[0] == 0:
        return []
    return list(matrix_rows(basis))


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Vector:
    """求解方阵线性方程组 A x = b"""
    a = qq_matrix(rows)
    x = a.lu_solve(column_vector(rhs))
    return column_values(x)


def inverse_rows(rows: Sequence[Sequence]) -> Tuple[Vector, ...]:
    return matrix_rows(qq_matrix(rows).inv())


def inertia(gram: Sequence[Sequence]) -> Tuple[int, int, int]:
    """对称矩阵的惯性指数 (正, 负, 零)，合同对角化，无浮点

    Args:
        gram: 对称有理矩阵

    Returns:
        (正特征数, 负特征数, 零特征数)
    """
    a = [[Fraction(e) for e in row] for row in gram]
    n = len(a)
    pos = neg = zero = 0

    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][i] != 0), None)
        if pivot is None:
            # 对角全零时用 i+j 合同变换制造非零对角元
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                zero += n - k
                break
            i, j = pair
            for r in range(n):
                a[r][i] += a[r][j]
            for c in range(n):
                a[i][c] += a[j][c]
            pivot = i

        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            for row in a:
                row[k], row[pivot] = row[pivot], row[k]

        d = a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / d
            if f:
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
        for r in range(k + 1, n):
            a[k][r] = Fraction(0)
            a[r][k] = Fraction(0)

        if d > 0:
            pos += 1
        else:
            neg += 1

    return pos, neg, zero


def lattice_basis(generators: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """整数生成元的 Hermite 基（返回基向量列表）

    Args:
        generators: 整数向量列表

    Returns:
        生成格的一组基（每个元素为一个基向量）
    """
    columns = zz_matrix(generators).transpose()
    hnf = hermite_normal_form(columns)
    cols = hnf.transpose().to_list()
    basis = tuple(tuple(int(e) for e in col) for col in cols if any(col))
    logger.debug(f"Hermite 基: {len(basis)} 个向量")
    return basis


def smith_invariants(rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """整数矩阵的不变因子"""
    return tuple(abs(int(f)) for f in invariant_factors(zz_matrix(rows)))


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))
