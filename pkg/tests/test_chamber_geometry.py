# -*- coding: utf-8 -*-

"""墙系统、Ω 的成员判定、面维数与归位"""

import random

import pytest

from core.chamber_geometry import (
    HomingError, Membership, dimension_certificate, face_dimension, face_pairing,
    facet_representative, homing, homing_generators, homing_round_trip, omega_dimension,
    omega_membership, representative_walls, sweep_walls, wall_system,
)
from core.configuration import BASE_TETRAD, type1_gopel, type1_weber
from core.isometry_group import (
    KeumActionTable, KeumValidation, hg_type, load_keum_actions, translation,
)
from core.surface_lattice import LAMBDA, W_DOUBLE_PRIME, c_class_for_point, gopel_root, is_integral


class TestWallSystem:

    def test_counts(self):
        system = wall_system()
        assert len(system.walls) == 316
        assert system.counts() == {
            "node": 16, "trope": 16, "projection": 16, "correlation": 16,
            "gopel1": 45, "gopel2": 15, "weber1": 120, "weber2": 72,
        }

    def test_walls_integral(self):
        assert all(is_integral(w.cls) for w in wall_system().walls)

    def test_lookup(self):
        system = wall_system()
        assert system.by_name("N00").kind == "node"
        assert system.find(gopel_root(BASE_TETRAD)).kind == "gopel1"
        with pytest.raises(KeyError):
            system.by_name("x99")

    def test_sweeps(self):
        assert len(sweep_walls()) == 6
        assert len(sweep_walls(full=True)) == 316 - 32
        assert set(representative_walls()) == {"ia", "ib", "ii", "iii", "iv"}


class TestMembership:

    def test_w_double_prime_interior(self):
        assert omega_membership(W_DOUBLE_PRIME).status == Membership.INTERIOR

    @pytest.mark.parametrize("i", [1, 2, 3, 4, 5])
    def test_c_classes_on_boundary(self, i):
        result = omega_membership(c_class_for_point(i))
        assert result.status == Membership.BOUNDARY
        assert f"p{i}6" in result.tight
        assert f"T{i}6" in result.tight

    def test_c6_on_boundary(self):
        result = omega_membership(c_class_for_point(6))
        assert result.status == Membership.BOUNDARY
        assert "p00" in result.tight

    def test_lambda_outside(self):
        result = omega_membership(LAMBDA)
        assert result.status == Membership.OUTSIDE
        assert "R" in result.violated


@pytest.mark.slow
class TestFaceDimension:

    def test_omega_is_full_dimensional(self):
        report = omega_dimension()
        assert report.nonempty
        assert report.dimension == 15

    def test_certificate(self):
        cert = dimension_certificate()
        assert cert.rank == 15
        assert cert.passed

    def test_facet(self):
        report = face_dimension(facet_representative())
        assert report.nonempty
        assert report.dimension == 14

    def test_projection_case(self):
        report = face_dimension(representative_walls()["ia"])
        assert report.dimension <= 10
        assert {f"T{i}6" for i in range(1, 6)} <= set(report.tight_set)

    def test_methods_agree(self):
        wall = representative_walls()["ib"]
        assert face_dimension(wall, "dual").dimension == face_dimension(wall, "per_wall").dimension

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            face_dimension(facet_representative(), "simplex")


class TestHoming:

    def test_face_pairing(self):
        assert all(face_pairing(g) for g in type1_gopel())

    def test_generators(self):
        gens = homing_generators()
        assert len(gens) == 45
        assert [g.name for g in gens] == [f"z{t}" for t in type1_gopel()]
        assert all(g.isometry == hg_type(t) for g, t in zip(gens, type1_gopel()))

    def test_generators_with_keum_table(self):
        # 只检查生成元的组成：每个 z_w 连同其逆各一个
        z = translation("16")
        entries = [(w, z) for w in type1_weber()]
        table = KeumActionTable(entries, "0" * 64,
                                [KeumValidation(w, True) for w in type1_weber()])
        gens = homing_generators(table)
        assert len(gens) == 45 + 2 * 120
        extra = gens[45:]
        assert [g.name for g in extra[:2]] == [f"z{type1_weber()[0]}", f"z{type1_weber()[0]}^-1"]
        assert extra[1].isometry == z.inverse()

    def test_home_is_fixed(self):
        result = homing(W_DOUBLE_PRIME, homing_generators())
        assert result.word == []
        assert result.point == W_DOUBLE_PRIME
        assert result.isometry.is_identity()

    @pytest.mark.parametrize("index", [0, 7, 21, 44])
    def test_single_step(self, index):
        g = type1_gopel()[index]
        u = hg_type(g).apply(W_DOUBLE_PRIME)
        result = homing(u, homing_generators())
        assert result.word == [f"z{g}"]
        assert result.point == W_DOUBLE_PRIME
        assert result.membership == Membership.INTERIOR

    def test_single_letter_round_trip(self):
        trip = homing_round_trip(random.Random(3), homing_generators(), max_length=1)
        assert trip.passed

    def test_rejects_outside_a(self):
        with pytest.raises(HomingError):
            homing(LAMBDA, homing_generators())

    def test_rejects_unvalidated_keum(self, identity_keum_file):
        table = load_keum_actions(identity_keum_file)
        with pytest.raises(HomingError):
            homing_generators(table)
