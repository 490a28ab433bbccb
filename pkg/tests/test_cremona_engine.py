# -*- coding: utf-8 -*-

"""Cremona 对合：特化、一般性与各验证步骤"""

import random
from fractions import Fraction

import pytest

from core.cremona_engine import (
    CERTIFICATE_STEPS, PASS, CremonaContext, GenericityError, certify,
    parameters_generic, random_parameters, specialize,
)


def test_parameters_generic():
    assert parameters_generic((Fraction(2), Fraction(3), Fraction(5)))
    assert not parameters_generic((Fraction(1), Fraction(3), Fraction(5)))
    assert not parameters_generic((Fraction(2), Fraction(2), Fraction(5)))


def test_zero_parameter_rejected():
    with pytest.raises(GenericityError):
        CremonaContext((0, 2, 3))


def test_random_parameters_are_reproducible():
    first = random_parameters(random.Random(5), 9)
    second = random_parameters(random.Random(5), 9)
    assert first == second


def test_specialize_distinct_and_generic():
    contexts = specialize(7, 2)
    assert len(contexts) == 2
    assert contexts[0].params != contexts[1].params
    assert all(parameters_generic(ctx.params) for ctx in contexts)
    assert [ctx.index for ctx in contexts] == [0, 1]
    assert [c.params for c in specialize(7, 2)] == [c.params for c in contexts]


def test_symbolic_context_specializes_for_gcd_checks():
    ctx = CremonaContext(None)
    assert ctx.symbolic
    twin = ctx.specialization(random.Random(3))
    assert not twin.symbolic
    assert parameters_generic(twin.params)
    assert twin.params == ctx.specialization(random.Random(3)).params
    numeric = specialize(7, 1)[0]
    assert numeric.specialization(random.Random(3)) is numeric


def test_step_names():
    names = [name for name, _ in CERTIFICATE_STEPS]
    assert names[0] == "sections"
    assert len(set(names)) == len(names)
    assert {"compose_self", "jacobian", "line_permutation"} <= set(names)


@pytest.fixture(scope="module")
def specialized_ctx():
    return specialize(7, 1)[0]


def _failures(certs):
    return [(c.name, c.detail) for c in certs if c.status != PASS]


@pytest.mark.slow
class TestSpecialization:

    def test_sections(self, specialized_ctx):
        certs = certify(specialized_ctx, steps=["sections"])
        by_name = {c.name: c for c in certs}
        assert by_name["plane p034 vanishes at p0, p3, p4"].status == PASS
        assert by_name["s01 has no common factor"].status == PASS
        assert "specialization" not in by_name["s01 has no common factor"].witness
        assert not _failures(certs)

    def test_linear_system(self, specialized_ctx):
        certs = certify(specialized_ctx, steps=["linear_system"])
        by_name = {c.name: c for c in certs}
        assert by_name["h0(X, D) = 4"].status == PASS
        assert by_name["h0(X, D) = 4"].witness["dimension"] == 4
        assert not _failures(certs)

    @pytest.mark.parametrize("step", [
        "exceptional_images", "rational_curve", "compose_self",
        "jacobian", "noncontraction", "line_permutation",
    ])
    def test_step_passes(self, specialized_ctx, step):
        certs = certify(specialized_ctx, steps=[step])
        assert certs
        assert not _failures(certs)

    def test_compose_self_random_point(self, specialized_ctx):
        certs = certify(specialized_ctx, steps=["compose_self"])
        names = [c.name for c in certs]
        assert "psi∘psi fixes a random point" in names

    def test_jacobian_degree(self, specialized_ctx):
        certs = certify(specialized_ctx, steps=["jacobian"])
        by_name = {c.name: c for c in certs}
        assert by_name["deg J = 16"].witness["degree"] == 16

    def test_line_permutation_degree(self, specialized_ctx):
        certs = certify(specialized_ctx, steps=["line_permutation"])
        l01 = next(c for c in certs if c.name.startswith("psi(l01) = "))
        assert l01.witness["degree"] == 1


@pytest.fixture(scope="module")
def symbolic_ctx():
    return CremonaContext(None)


@pytest.mark.slow
class TestSymbolic:

    def test_linear_system_counts_on_a_specialization(self, symbolic_ctx):
        certs = certify(symbolic_ctx, steps=["linear_system"])
        assert not _failures(certs)
        assert all(len(c.witness["specialization"]) == 3 for c in certs)

    def test_jacobian_over_parameter_field(self, symbolic_ctx):
        certs = certify(symbolic_ctx, steps=["jacobian"])
        assert certs and not _failures(certs)
        assert all("specialization" not in c.witness for c in certs)

    def test_sections_gcd_on_a_specialization(self, symbolic_ctx):
        certs = certify(symbolic_ctx, steps=["sections"])
        by_name = {c.name: c for c in certs}
        gcd = by_name["s01 has no common factor"]
        assert gcd.status == PASS
        assert "specialization" in gcd.witness
        assert not _failures(certs)
