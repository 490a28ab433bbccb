# -*- coding: utf-8 -*-

"""NS(S)：交数、特殊类、整性与 A = B^⊥"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from core.configuration import BASE_TETRAD, LABELS, ZERO, enumerate_weber, label, trope_incidence
from core.surface_lattice import (
    ALL_NODES, B_CLASS, C_CLASS, LAMBDA, R_CLASS, RANK, W_DOUBLE_PRIME, SurfaceClass,
    a_basis, b_class_displayed, discriminant_invariants, f_class, gopel_root, in_a,
    integral_basis, is_even, is_integral, named_class, neg2_classes_in_b, random_point_in_a,
    neg2_solutions_in_b, node_class, pair, signature, trope_class, weber_root,
)

coords_st = st.lists(st.integers(-5, 5), min_size=RANK, max_size=RANK).map(SurfaceClass.of)


class TestPairing:

    def test_basis_squares(self):
        assert pair(LAMBDA, LAMBDA) == 4
        assert pair(node_class("12"), node_class("12")) == -2
        assert pair(LAMBDA, node_class("12")) == 0

    @pytest.mark.parametrize("beta", ["00", "16", "12", "45"])
    def test_trope_square(self, beta):
        t = trope_class(beta)
        assert pair(t, t) == -2

    def test_node_trope_incidence(self):
        for alpha in LABELS:
            for beta in LABELS:
                expected = 1 if alpha in trope_incidence(beta) else 0
                assert pair(node_class(alpha), trope_class(beta)) == expected

    @given(coords_st, coords_st, st.integers(-3, 3))
    def test_symmetric_bilinear(self, x, y, k):
        assert pair(x, y) == pair(y, x)
        assert pair(x * k, y) == k * pair(x, y)
        assert pair(x + y, y) == pair(x, y) + pair(y, y)

    def test_signature(self):
        assert signature() == (1, 16)


class TestDistinguishedClasses:

    def test_lambda_identity(self):
        # c = 2Λ − ΣN
        assert LAMBDA * 2 == C_CLASS + ALL_NODES

    def test_c_square(self):
        assert pair(C_CLASS, C_CLASS) == -16

    def test_b_display(self):
        assert b_class_displayed() == B_CLASS

    def test_w_double_prime_display(self):
        assert W_DOUBLE_PRIME == (LAMBDA * 13 - ALL_NODES * 3 + R_CLASS * 4) / 7

    def test_w_double_prime_in_a(self):
        assert in_a(W_DOUBLE_PRIME)
        assert pair(W_DOUBLE_PRIME, R_CLASS) == 0
        assert pair(W_DOUBLE_PRIME, C_CLASS) == 0
        assert pair(W_DOUBLE_PRIME, W_DOUBLE_PRIME) > 0

    def test_root_squares(self):
        assert pair(gopel_root(BASE_TETRAD), gopel_root(BASE_TETRAD)) == -4
        w = enumerate_weber()[0]
        assert pair(weber_root(w), weber_root(w)) == -12

    def test_f_class_requires_type2(self):
        with pytest.raises(ValueError):
            f_class(BASE_TETRAD)

    def test_named_class(self):
        assert named_class('Λ') == LAMBDA
        assert named_class('N', '16') == node_class(label("16"))
        assert named_class('R') == trope_class(ZERO)
        with pytest.raises(ValueError):
            named_class('nope')

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            SurfaceClass((Fraction(1),) * 3)

    def test_list_form(self):
        x = (LAMBDA * 3 - ALL_NODES) / 2
        assert SurfaceClass.from_list(x.to_list()) == x
        assert x.to_list()[0] == "3/2"


class TestIntegrality:

    def test_examples(self):
        assert is_integral(R_CLASS)
        assert is_integral(B_CLASS)
        assert not is_integral(LAMBDA / 2)
        assert not is_integral(W_DOUBLE_PRIME)

    def test_basis(self):
        basis = integral_basis()
        assert len(basis) == RANK
        assert all(is_integral(b) for b in basis)

    def test_even_and_discriminant(self):
        assert is_even()
        invariants = discriminant_invariants()
        product = 1
        for f in invariants:
            product *= f
        assert product == 64


class TestComplement:

    def test_a_rank(self):
        basis = a_basis()
        assert len(basis) == 15
        assert all(in_a(x) for x in basis)

    def test_neg2_in_b(self):
        assert neg2_solutions_in_b() == [(0, -1), (0, 1)]
        assert set(neg2_classes_in_b()) == {R_CLASS, -R_CLASS}

    @given(st.integers(0, 10 ** 6))
    @settings(max_examples=20, deadline=None)
    def test_random_point_in_a(self, seed):
        assert in_a(random_point_in_a(random.Random(seed)))
