# -*- coding: utf-8 -*-

"""(16,6) 组态：标号群、Göpel/Weber 枚举与重标号"""

from collections import Counter

import pytest
from hypothesis import given, strategies as st

from core.configuration import (
    BASE_TETRAD, I_T0, LABELS, ZERO, GopelTypeError, LabelError, all_permutations,
    brute_force_gopel, brute_force_weber, carrying_permutation, compose_permutations,
    enumerate_gopel, enumerate_weber, gopel_complement, hexad, hexad_dual, invert_permutation,
    is_gopel, label, labels, permutation, relabel, relabel_trope, tetrad, translate,
    translation_part, trope_incidence, type1_gopel, type2_gopel, type1_weber, weber_dual_pairs,
)

label_st = st.sampled_from(LABELS)
perm_st = st.permutations([1, 2, 3, 4, 5, 6]).map(tuple)


class TestLabels:

    def test_parse_variants(self):
        assert label("61") == label("16")
        assert label("66") == ZERO
        assert label("0") == ZERO
        assert str(label("35")) == "35"

    @pytest.mark.parametrize("text", ["77", "1", "a2", "123", "07"])
    def test_parse_invalid(self, text):
        with pytest.raises(LabelError):
            label(text)

    def test_addition_examples(self):
        assert label("12") + label("23") == label("13")
        assert label("12") + label("34") == label("56")
        assert ZERO + label("46") == label("46")

    @given(label_st, label_st, label_st)
    def test_group_laws(self, x, y, z):
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x + x == ZERO
        assert x + ZERO == x

    def test_sixteen_distinct(self):
        assert len(set(LABELS)) == 16
        assert LABELS[0] == ZERO


class TestIncidence:

    def test_base_trope(self):
        assert trope_incidence(ZERO) == I_T0
        assert trope_incidence(label("16")) == labels("00", "16", "12", "13", "14", "15")

    def test_sixteen_six(self):
        counts = Counter(a for b in LABELS for a in trope_incidence(b))
        assert set(counts.values()) == {6}

    @given(label_st, label_st)
    def test_two_tropes_share_two_nodes(self, b1, b2):
        shared = trope_incidence(b1) & trope_incidence(b2)
        assert len(shared) == (6 if b1 == b2 else 2)


class TestGopel:

    def test_counts(self):
        tetrads = enumerate_gopel()
        assert len(tetrads) == 60
        assert len(type1_gopel()) == 45
        assert len(type2_gopel()) == 15

    def test_brute_force_agrees(self):
        assert set(brute_force_gopel()) == {g.labels for g in enumerate_gopel()}

    def test_types(self):
        assert BASE_TETRAD.type_tag == 1
        assert tetrad("13", "15", "23", "25").type_tag == 2

    def test_not_gopel(self):
        # 三个结点在 T_0 上
        assert not is_gopel(labels("00", "16", "26", "12"))
        with pytest.raises(GopelTypeError):
            tetrad("00", "16", "26", "12")

    def test_complement(self):
        assert gopel_complement(BASE_TETRAD) == labels("26", "36", "12", "13")
        assert gopel_complement(tetrad("00", "16", "23", "45")) == labels("24", "25", "34", "35")

    def test_complement_type2_rejected(self):
        with pytest.raises(GopelTypeError):
            gopel_complement(tetrad("13", "15", "23", "25"))

    def test_complement_misses_tetrad(self):
        for g in type1_gopel():
            comp = gopel_complement(g)
            assert len(comp) == 4
            assert all(not (trope_incidence(b) & g.labels) for b in comp)

    @given(label_st)
    def test_translation_preserves_gopel(self, alpha):
        assert all(is_gopel(translate(alpha, g.labels)) for g in enumerate_gopel())

    def test_translation_part(self):
        assert translation_part(BASE_TETRAD) == label("45")

    def test_carrying_permutation(self):
        assert carrying_permutation(BASE_TETRAD) == (1, 2, 3, 4, 5, 6)
        for g in type1_gopel()[:10]:
            assert relabel(carrying_permutation(g), BASE_TETRAD) == g


class TestWeber:

    def test_counts(self):
        hexads = enumerate_weber()
        types = Counter(w.type_tag for w in hexads)
        assert len(hexads) == 192
        assert (types[1], types[2]) == (120, 72)
        assert len(type1_weber()) == 120

    @pytest.mark.slow
    def test_brute_force_agrees(self):
        assert set(brute_force_weber()) == {w.labels for w in enumerate_weber()}

    def test_dual_example(self):
        w = hexad("00", "16", "26", "13", "34", "24")
        assert w.type_tag == 1
        assert hexad_dual(w).labels == labels("36", "46", "56", "13", "34", "24")

    def test_dual_pairs(self):
        pairs = weber_dual_pairs()
        assert len(pairs) == 60
        assert all(hexad_dual(d) == w for w, d in pairs)

    def test_trope_meet(self):
        sizes = {len(w.labels & trope_incidence(b)) for w in enumerate_weber() for b in LABELS}
        assert sizes <= {1, 3}

    def test_rejects_gopel_subset(self):
        with pytest.raises(LabelError):
            hexad("46", "56", "14", "15", "00", "23")


class TestRelabel:

    def test_permutation_validation(self):
        with pytest.raises(ValueError):
            permutation([1, 1, 2, 3, 4, 5])

    @given(perm_st)
    def test_inverse(self, pi):
        assert compose_permutations(pi, invert_permutation(pi)) == (1, 2, 3, 4, 5, 6)

    @given(perm_st, label_st)
    def test_incidence_equivariance(self, pi, beta):
        assert relabel(pi, trope_incidence(beta)) == trope_incidence(relabel_trope(pi, beta))

    @given(perm_st)
    def test_fixes_t0(self, pi):
        assert relabel(pi, I_T0) == I_T0

    @given(perm_st, perm_st, label_st)
    def test_group_action(self, pi, sigma, x):
        assert relabel(compose_permutations(pi, sigma), x) == relabel(pi, relabel(sigma, x))

    @given(perm_st)
    def test_complement_equivariance(self, pi):
        for g in type1_gopel():
            moved = relabel(pi, g)
            assert moved.type_tag == 1
            assert gopel_complement(moved) == frozenset(relabel_trope(pi, b) for b in gopel_complement(g))

    def test_all_permutations(self):
        assert len(set(all_permutations())) == 720
