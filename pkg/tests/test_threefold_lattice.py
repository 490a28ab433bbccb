# -*- coding: utf-8 -*-

"""Pic(X)：限制映射与 Φ_g 的作用"""

import pytest
from hypothesis import given, settings, strategies as st

from core.configuration import BASE_TETRAD, I_T0, LABELS, ZERO, label, type1_gopel
from core.isometry_group import hg_type, relabel_isometry
from core.surface_lattice import B_CLASS, LAMBDA, node_class, node_sum, trope_class
from core.threefold_lattice import (
    H, LINES, SUM_E, ThreefoldClass, canonical_class, canonical_restriction_sign,
    check_all, compatibility_check, d_class, exceptional_image_table, f_classes,
    basis, hg_pseudo_action, line_class, line_of_label, point_class, point_relabel, restrict,
)

G_PRIME_LINES = ((0, 2), (0, 3), (1, 2), (1, 3))


def test_restrict_basis():
    others = [a for a in LABELS if a not in I_T0]
    assert restrict(H) == (LAMBDA * 3 - node_sum(others)) / 2
    assert restrict(point_class(0)) == node_class("00")
    assert restrict(point_class(3)) == node_class("36")
    assert restrict(line_class(1, 2)) == trope_class("12")
    assert restrict(line_class(0, 5)) == trope_class("56")


def test_canonical_class_restricts_to_b():
    assert restrict(canonical_class()) == B_CLASS
    assert canonical_restriction_sign() == 1


def test_line_of_label():
    assert line_of_label(label("26")) == (0, 2)
    with pytest.raises(ValueError):
        line_of_label(ZERO)


def test_wrong_length():
    with pytest.raises(ValueError):
        ThreefoldClass.of([1, 2, 3])


def test_d_class_base():
    expected = H * 5 - SUM_E * 2
    for line in G_PRIME_LINES:
        expected = expected - line_class(*line) * 2
    assert d_class(BASE_TETRAD) == expected
    assert d_class(BASE_TETRAD).degree() == 5


def test_base_action():
    action = hg_pseudo_action(BASE_TETRAD)
    g_lines = sum((line_class(*l) for l in G_PRIME_LINES), H * 0)
    assert action.apply(point_class(4)) == H * 2 - SUM_E + point_class(5) - g_lines
    assert action.apply(H) == d_class(BASE_TETRAD)
    assert action.apply(point_class(0)) == point_class(1)
    assert action.apply(line_class(0, 4)) == line_class(1, 5)
    for i, j in ((0, 1), (2, 3), (4, 5)):
        assert action.apply(line_class(i, j)) == line_class(i, j)


def test_pseudo_action_is_involution():
    action = hg_pseudo_action(BASE_TETRAD)
    assert action.compose(action).is_identity()
    assert action.apply(canonical_class()) == canonical_class()


def test_quadric_restrictions():
    classes = f_classes()
    assert restrict(classes["F5"]) == LAMBDA - node_sum(["46", "14", "15"])
    assert restrict(classes["F4"]) == LAMBDA - node_sum(["56", "14", "15"])


def test_exceptional_image_degrees():
    table = exceptional_image_table(BASE_TETRAD)
    assert len(table) == 6 + len(LINES) == 21
    quadrics = {"E4", "E5"} | {f"E{i}{j}" for i, j in G_PRIME_LINES}
    for name, image in table.items():
        assert image.degree() == (2 if name in quadrics else 0), name


def test_compatibility_base():
    result = compatibility_check(BASE_TETRAD)
    assert result.passed, result.failure


@pytest.mark.slow
def test_compatibility_all():
    results = check_all()
    assert len(results) == 45
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


def test_d_class_restricts_to_moved_hyperplane():
    for g in type1_gopel()[:8]:
        assert restrict(d_class(g)) == hg_type(g).apply(restrict(H))


@given(st.permutations([1, 2, 3, 4, 5, 6]).map(tuple))
@settings(max_examples=20, deadline=None)
def test_point_relabel_matches_node_relabel(pi):
    action = point_relabel(pi)
    f = relabel_isometry(pi)
    for e in basis():
        assert restrict(action.apply(e)) == f.apply(restrict(e))
