import pytest

from hurwitzcalc.bundles import k1_pentagonal, m_r_pentagonal
from hurwitzcalc.directrix import (DirectrixFamily, directrix_pushforward_degree,
                                   maroni_intersection_pentagonal,
                                   perfectly_balanced_jump_count,
                                   rotating_directrix_class,
                                   rotating_directrix_closed_form)
from hurwitzcalc.errors import InvalidFamily
from hurwitzcalc.symkernel import Poly


class TestPipelineInstances:
    def test_flagship_instance(self):
        fam = DirectrixFamily(5, 2, 2, 1)
        cls = rotating_directrix_class(fam)
        ring = cls.ring
        h, f = ring.gen("H"), ring.gen("F")
        assert cls == h ** 3 + 4 * h ** 2 * f

    def test_degree_zero_rotation(self):
        fam = DirectrixFamily(5, 2, 3, -4)      # a = -l - 1
        cls = rotating_directrix_class(fam)
        h = cls.ring.gen("H")
        assert cls == h ** 3

    def test_smallest_admissible_size(self):
        fam = DirectrixFamily(4, 1, 0, 0)
        cls = rotating_directrix_class(fam)
        h, f = cls.ring.gen("H"), cls.ring.gen("F")
        assert cls == h ** 3 + h ** 2 * f

    def test_pushforward_degree_is_minus_a_minus_l(self):
        for n, r, a, l in ((4, 1, 3, -2), (5, 3, -1, 2), (6, 2, 0, 0)):
            fam = DirectrixFamily(n, r, a, l)
            assert directrix_pushforward_degree(fam) == Poly.const(-a - l)

    def test_invalid_families(self):
        with pytest.raises(InvalidFamily):
            DirectrixFamily(5, 4, 0, 0)         # r must stay below N-1
        with pytest.raises(InvalidFamily):
            DirectrixFamily(2, 1, 0, 0)


def test_exhaustive_small_window():
    for n in range(3, 7):
        for r in range(1, n - 1):
            for a in range(-3, 4):
                for l in range(-3, 4):
                    fam = DirectrixFamily(n, r, a, l)
                    assert rotating_directrix_class(fam) == \
                        rotating_directrix_closed_form(fam)


class TestPerfectlyBalanced:
    def test_count_is_still_a_plus_l_plus_one(self):
        for n in (3, 4, 5, 6):
            for a in range(-4, 5):
                for l in range(-4, 5):
                    assert perfectly_balanced_jump_count(n, a, l) == a + l + 1


def test_pairing_against_general_linear_subspace():
    # the rotation degree is read off by pairing with H^2 inside the
    # product ring: N = 5, r = 2, a = 2, l = 1 meets a general plane at
    # a + l + 1 = 4 parameter values
    fam = DirectrixFamily(5, 2, 2, 1)
    swept = rotating_directrix_class(fam)
    h = swept.ring.gen("H")
    assert (swept * h ** 2).integrate() == Poly.const(4)


class TestMaroniIntersection:
    def test_pinned_values(self):
        assert maroni_intersection_pentagonal(16) == 2       # 17 - 15
        assert maroni_intersection_pentagonal(36) == 4       # 34 - 30

    def test_equals_ceiling_sum_on_a_range(self):
        for g_r in range(2, 60):
            expected = k1_pentagonal(g_r) + m_r_pentagonal(g_r)
            assert maroni_intersection_pentagonal(g_r) == expected

    def test_nonnegative_on_admissible_range(self):
        for g_r in range(2, 80):
            assert maroni_intersection_pentagonal(g_r) >= 0
