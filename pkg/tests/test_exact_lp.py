# -*- coding: utf-8 -*-

"""精确单纯形"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from core.exact_lp import LPError, LPStatus, linprog_max


def test_textbook_optimum():
    # max x + y,  x + 2y <= 4,  3x + y <= 6
    result = linprog_max([1, 1], ge_rows=[[-1, -2], [-3, -1]], ge_rhs=[-4, -6])
    assert result.status == LPStatus.OPTIMAL
    assert result.value == Fraction(14, 5)
    assert result.point == [Fraction(8, 5), Fraction(6, 5)]


def test_equality_constraint():
    result = linprog_max([1, 0], eq_rows=[[1, 1]], eq_rhs=[3])
    assert result.optimal
    assert result.value == 3
    assert result.point[0] == 3


def test_infeasible():
    result = linprog_max([0], eq_rows=[[1], [1]], eq_rhs=[1, 2])
    assert result.status == LPStatus.INFEASIBLE


def test_unbounded():
    result = linprog_max([1, 0], ge_rows=[[0, 1]], ge_rhs=[1])
    assert result.status == LPStatus.UNBOUNDED


def test_mismatched_rhs():
    with pytest.raises(LPError):
        linprog_max([1], eq_rows=[[1]], eq_rhs=[])


@given(st.lists(st.integers(1, 9), min_size=2, max_size=2),
       st.lists(st.lists(st.integers(1, 6), min_size=2, max_size=2), min_size=1, max_size=3),
       st.lists(st.integers(1, 12), min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_bounded_packing_is_feasible(objective, rows, caps):
    # 系数全正的打包问题总有有限最优解
    caps = caps[:len(rows)]
    result = linprog_max(objective, ge_rows=[[-a for a in r] for r in rows], ge_rhs=[-c for c in caps])
    assert result.status == LPStatus.OPTIMAL
    assert all(v >= 0 for v in result.point)
    for r, c in zip(rows, caps):
        assert sum(a * v for a, v in zip(r, result.point)) <= c
    assert result.value == sum(a * v for a, v in zip(objective, result.point))
