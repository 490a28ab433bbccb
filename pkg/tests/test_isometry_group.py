# -*- coding: utf-8 -*-

"""格等距：经典对合、z_g 与 Keum 数据文件"""

import json

import pytest
from hypothesis import given, settings, strategies as st

from core.configuration import BASE_TETRAD, LABELS, ZERO, label, type1_gopel, type1_weber
from core.isometry_group import (
    KeumDataError, LatticeIsometry, aut_dprime_group, compose_word, correlation,
    dump_keum_actions, hg_involution, hg_type, is_involution, is_isometry,
    load_keum_actions, preserves_integrality, projection, relabel_isometry,
    stabilizer_of, switch, translation, validate_keum,
)
from core.surface_lattice import (
    C_CLASS, LAMBDA, R_CLASS, W_DOUBLE_PRIME, gopel_root, node_class, node_sum,
    pair, proj_root, trope_class, weber_root,
)
from core.utils import get_file_hash

label_st = st.sampled_from(LABELS)


class TestClassicalIsometries:

    @given(label_st)
    @settings(max_examples=16, deadline=None)
    def test_translation(self, alpha):
        t = translation(alpha)
        assert is_isometry(t)
        assert is_involution(t)
        assert t.apply(node_class(ZERO)) == node_class(alpha)

    def test_translation_law(self):
        a, b = label("12"), label("34")
        assert translation(a).compose(translation(b)) == translation(a + b)

    def test_switch(self):
        s = switch()
        assert is_isometry(s)
        assert is_involution(s)
        assert all(s.apply(node_class(a)) == trope_class(a) for a in LABELS)

    @pytest.mark.parametrize("alpha", ["00", "16", "12"])
    def test_projection_reflects_root(self, alpha):
        p = projection(alpha)
        assert is_isometry(p)
        assert p.apply(proj_root(alpha)) == -proj_root(alpha)

    def test_correlation_is_conjugate(self):
        q = correlation("12")
        assert q == switch().compose(projection("12")).compose(switch())

    def test_integrality(self):
        assert preserves_integrality(translation("16"))
        assert preserves_integrality(switch())

    def test_compose_word_order(self):
        t, s = translation("16"), switch()
        x = node_class("00")
        assert compose_word([t, s]).apply(x) == s.apply(t.apply(x))

    def test_from_rows_size(self):
        with pytest.raises(ValueError):
            LatticeIsometry.from_rows([[1, 0], [0, 1]])

    def test_aut_dprime(self):
        group = aut_dprime_group()
        assert len(group) == 32
        assert len(stabilizer_of(R_CLASS, group)) == 1


class TestHutchinsonGopel:

    def test_base_properties(self):
        z = hg_type(BASE_TETRAD)
        assert is_isometry(z)
        assert is_involution(z)
        assert z.apply(R_CLASS) == R_CLASS
        assert z.apply(C_CLASS) == C_CLASS

    def test_moves_w_double_prime(self):
        z = hg_type(BASE_TETRAD)
        r = gopel_root(BASE_TETRAD)
        assert z.apply(W_DOUBLE_PRIME) == W_DOUBLE_PRIME + r * 2
        assert z.apply(r) == -r

    def test_involution_example(self):
        phi = hg_involution(BASE_TETRAD)
        s = node_sum(BASE_TETRAD.labels)
        assert phi.apply(node_class("00")) == node_class("23")
        assert phi.apply(trope_class("26")) == LAMBDA - s + trope_class("26")

    @pytest.mark.slow
    def test_all_type1(self):
        for g in type1_gopel():
            z = hg_type(g)
            assert is_isometry(z), g
            assert z.apply(R_CLASS) == R_CLASS, g
            assert z.apply(W_DOUBLE_PRIME) == W_DOUBLE_PRIME + gopel_root(g) * 2, g

    def test_relabel_isometry(self):
        pi = (2, 1, 3, 4, 5, 6)
        f = relabel_isometry(pi)
        assert is_isometry(f)
        assert f.apply(R_CLASS) == R_CLASS


class TestKeumData:

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text("", encoding='utf-8')
        with pytest.raises(KeumDataError):
            load_keum_actions(str(path))

    def test_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{entries: ", encoding='utf-8')
        with pytest.raises(KeumDataError):
            load_keum_actions(str(path))

    def test_missing_entries(self, tmp_path):
        path = tmp_path / "none.json"
        path.write_text(json.dumps({"rows": []}), encoding='utf-8')
        with pytest.raises(KeumDataError):
            load_keum_actions(str(path))

    def test_not_a_hexad(self, tmp_path):
        path = tmp_path / "gopel.json"
        rows = LatticeIsometry.identity().to_list()
        entry = {"hexad": ["46", "56", "14", "15", "00", "23"], "matrix": rows}
        path.write_text(json.dumps({"entries": [entry]}), encoding='utf-8')
        with pytest.raises(KeumDataError):
            load_keum_actions(str(path))

    def test_duplicate_hexad(self, tmp_path):
        path = tmp_path / "dup.json"
        rows = LatticeIsometry.identity().to_list()
        w = type1_weber()[0].to_list()
        path.write_text(json.dumps({"entries": [{"hexad": w, "matrix": rows}] * 2}), encoding='utf-8')
        with pytest.raises(KeumDataError):
            load_keum_actions(str(path))

    def test_identity_entries_fail_validation(self, identity_keum_file):
        table = load_keum_actions(identity_keum_file)
        assert len(table.entries) == 2
        assert not table.accepted
        assert all(not v.passed for v in table.validations)
        assert any("z(w″) ≠ w″ + 2r_w" in v.failures for v in table.validations)
        assert table.source_digest == get_file_hash(identity_keum_file)

    def test_w_double_prime_shift_coefficient(self):
        # 只有 k = 2 时 w″ + k r_w 与 w″ 等长
        for w in type1_weber():
            r_w = weber_root(w)
            assert pair(W_DOUBLE_PRIME, r_w) == 12
            assert pair(r_w, r_w) == -12
            norm = pair(W_DOUBLE_PRIME, W_DOUBLE_PRIME)
            shifted = W_DOUBLE_PRIME + r_w * 2
            assert pair(shifted, shifted) == norm
            wrong = W_DOUBLE_PRIME + r_w * 3
            assert pair(wrong, wrong) != norm

    def test_validate_rejects_translation(self):
        w = type1_weber()[0]
        result = validate_keum(translation("16"), w)
        assert not result.passed

    def test_dump_then_load(self, tmp_path):
        path = str(tmp_path / "dumped.json")
        entries = [(type1_weber()[3], switch())]
        dump_keum_actions(entries, path)
        table = load_keum_actions(path, validate=False)
        assert table.entries[0][0] == type1_weber()[3]
        assert table.entries[0][1] == switch()
        assert table.validations == []
