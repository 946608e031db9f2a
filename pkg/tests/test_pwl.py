from fractions import Fraction as F

import pytest

import groupcut as gc
from groupcut.errors import ConstructionError


class TestConstructors:
    def test_from_values_gmic_data(self, gmic45):
        assert gmic45.end_points() == [0, F(4, 5), 1]
        assert gmic45.values_at_end_points() == [0, 1, 0]
        assert gmic45.is_continuous

    def test_zero_function(self, zero_fn):
        for x in (0, F(1, 3), F(7, 9), 1):
            assert zero_fn(x) == 0

    def test_midpoint_interpolation(self):
        fn = gc.from_breakpoints_and_values([0, F(1, 2), 1], [0, 1, 0])
        assert fn(F(1, 4)) == F(1, 2)

    def test_length_mismatch(self):
        with pytest.raises(ConstructionError):
            gc.from_breakpoints_and_values([0, F(1, 2), 1], [0, 1])

    def test_non_monotone(self):
        with pytest.raises(ConstructionError):
            gc.from_breakpoints_and_values([0, F(2, 3), F(1, 3), 1], [0, 1, 1, 0])

    def test_bad_endpoints(self):
        with pytest.raises(ConstructionError):
            gc.from_breakpoints_and_values([F(1, 5), 1], [0, 0])
        with pytest.raises(ConstructionError):
            gc.from_breakpoints_and_values([0, F(4, 5)], [0, 0])

    def test_periodicity_seam_must_agree(self):
        with pytest.raises(ConstructionError):
            gc.from_breakpoints_and_values([0, 1], [0, 1])
        with pytest.raises(ConstructionError):
            gc.from_breakpoints_and_limits(
                [0, 1], [(0, 0, 0), (0, 0, F(1, 2))])

    def test_limits_constructor_continuous_detection(self):
        fn = gc.from_breakpoints_and_limits(
            [0, F(1, 2), 1],
            [(0, 0, 0), (1, 1, 1), (0, 0, 0)])
        assert fn.is_continuous

    def test_dict_limit_spelling(self, equiv5):
        fn = gc.from_breakpoints_and_limits(
            [0, F(1, 5), F(2, 5), F(3, 5), F(4, 5), 1],
            [{-1: 0, 0: 0, 1: 0}, {-1: 1, 0: 1, 1: 1},
             {-1: 0, 0: F(2, 5), 1: F(2, 5)},
             {-1: F(2, 5), 0: F(1, 2), 1: F(3, 5)},
             {-1: F(3, 5), 0: F(3, 5), 1: 1}, {-1: 0, 0: 0, 1: 0}])
        assert fn == equiv5

    def test_merge_drops_flat_interior_points(self):
        fn = gc.from_breakpoints_and_values(
            [0, F(1, 4), F(1, 2), 1], [0, F(1, 2), 1, 0])
        assert fn.end_points() == [0, F(1, 2), 1]
        unmerged = gc.from_breakpoints_and_values(
            [0, F(1, 4), F(1, 2), 1], [0, F(1, 2), 1, 0], merge=False)
        assert unmerged.end_points() == [0, F(1, 4), F(1, 2), 1]
        assert unmerged == fn  # equal as periodic functions


class TestEvaluation:
    def test_gmic_values(self, gmic45):
        assert gmic45(F(4, 5)) == 1
        assert gmic45(F(9, 5)) == 1  # periodicity
        assert gmic45(F(1, 2)) == F(5, 8)

    def test_periodicity_everywhere(self, equiv5):
        for x in (F(1, 7), F(3, 5), F(9, 10)):
            for t in (-2, -1, 1, 5):
                assert equiv5(x + t) == equiv5(x)

    def test_equiv5_limits(self, equiv5):
        assert equiv5.limits_at_end_points() == [
            (0, 0, 0), (1, 1, 1), (F(2, 5), F(2, 5), 0),
            (F(1, 2), F(3, 5), F(2, 5)), (F(3, 5), 1, F(3, 5)), (0, 0, 0)]
        assert equiv5.limits_at(F(3, 5)) == (F(1, 2), F(3, 5), F(2, 5))
        # periodic reduction of limit queries
        assert equiv5.limits_at(F(7, 5)) == (F(2, 5), F(2, 5), 0)

    def test_equiv5_value_on_flat_piece(self, equiv5):
        # on (2/5, 3/5) the function interpolates the right limit 2/5 at 2/5
        # to the left limit 2/5 at 3/5, hence is constant 2/5
        assert equiv5(F(1, 2)) == F(2, 5)

    def test_limits_at_continuous_point(self, gmic45):
        assert gmic45.limits_at(F(2, 5)) == (F(1, 2), F(1, 2), F(1, 2))

    def test_which_function(self, gmic45):
        piece = gmic45.which_function(F(1, 2))
        assert (piece.slope, piece.intercept) == (F(5, 4), 0)
        # line through (4/5, 1) and (1, 0)
        piece = gmic45.which_function(F(9, 10))
        assert (piece.slope, piece.intercept) == (-5, 5)
        at_bkpt = gmic45.which_function(F(4, 5))
        assert at_bkpt.slope == 0 and at_bkpt.intercept == 1
        assert at_bkpt.face == (F(4, 5), F(4, 5))

    def test_number_of_slopes(self, gmic45, equiv5, zero_fn):
        assert gmic45.number_of_slopes() == 2
        assert zero_fn.number_of_slopes() == 1
        # slopes from the limit data: 5, -5, 0, 0, -5
        assert equiv5.interval_slopes() == [5, -5, 0, 0, -5]
        assert equiv5.number_of_slopes() == 3

    def test_roundtrip_from_limits(self, equiv5, hildebrand):
        for fn in (equiv5, hildebrand):
            again = gc.from_breakpoints_and_limits(
                fn.end_points(), fn.limits_at_end_points(), merge=False)
            assert again.end_points() == fn.end_points()
            assert again.limits_at_end_points() == fn.limits_at_end_points()


class TestDiscrete:
    def test_constructor(self):
        dfn = gc.discrete_from_points_and_values(
            [0, F(1, 5), F(2, 5), F(3, 5), F(4, 5), 1],
            [0, F(1, 4), F(1, 2), F(3, 4), 1, 0])
        assert dfn.q == 5
        assert dfn(F(3, 5)) == F(3, 4)
        assert dfn(F(8, 5)) == F(3, 4)

    def test_zero(self):
        dfn = gc.discrete_from_points_and_values([0, 1], [0, 0])
        assert dfn.q == 1 and dfn(0) == 0

    def test_mismatched_lengths(self):
        with pytest.raises(ConstructionError):
            gc.discrete_from_points_and_values([0, F(1, 2), 1], [0, 1])

    def test_incomplete_grid_rejected(self):
        with pytest.raises(ConstructionError):
            gc.discrete_from_points_and_values([0, F(1, 3), 1], [0, F(1, 3), 0])

    def test_non_grid_evaluation(self):
        dfn = gc.discrete_from_points_and_values(
            [0, F(1, 2), 1], [0, 1, 0])
        with pytest.raises(ConstructionError):
            dfn(F(1, 3))


class TestRandomGeneration:
    def test_deterministic(self):
        a = gc.random_piecewise_function(5, 5, F(1, 3), True, seed=11)
        b = gc.random_piecewise_function(5, 5, F(1, 3), True, seed=11)
        assert a == b and a.f == b.f

    def test_proba_one_is_continuous(self):
        fn = gc.random_piecewise_function(5, 5, 1, False, seed=3)
        assert fn.is_continuous
        assert all(b.denominator in (1, 5) for b in fn.breakpoints)
        assert fn(0) == 0

    def test_symmetry_condition_with_limits(self):
        for seed in range(4):
            fn = gc.random_piecewise_function(5, 5, F(1, 3), True, seed=seed)
            f = fn.f
            assert fn(f) == 1
            for i in range(6):
                x = F(i, 5)
                tx, tm = fn.limits_at(x), fn.limits_at(f - x)
                assert tx[0] + tm[0] == 1
                assert tx[1] + tm[2] == 1
                assert tx[2] + tm[1] == 1

    def test_values_on_y_grid(self):
        fn = gc.random_piecewise_function(6, 4, F(1, 2), False, seed=9)
        for v, r, l in fn.limits:
            for val in (v, r, l):
                assert val.denominator in (1, 2, 4)


class TestLinearCombination:
    def test_affine_mix(self, gmic45):
        double = gc.linear_combination(2, gmic45, 0, gmic45)
        assert double(F(2, 5)) == 1
        mix = gc.linear_combination(F(1, 2), gmic45, F(1, 2), gmic45)
        assert mix == gmic45

    def test_seam_of_mix(self, hildebrand):
        mix = gc.linear_combination(F(1, 3), hildebrand, F(2, 3), hildebrand)
        assert mix == hildebrand


class TestMergeSemantics:
    def test_interior_breakpoints_are_genuine_after_merge(self):
        for seed in range(8):
            fn = gc.random_piecewise_function(6, 4, F(1, 2), True, seed=seed)
            slopes = fn.interval_slopes()
            for i in range(1, len(fn.breakpoints) - 1):
                v, r, l = fn.limits[i]
                genuine = not (v == r == l) or slopes[i - 1] != slopes[i]
                assert genuine, f"non-breakpoint survived merge at index {i}"


def test_random_symmetry_needs_interior_f():
    import pytest
    from groupcut.errors import ConstructionError

    with pytest.raises(ConstructionError):
        gc.random_piecewise_function(1, 3, 1, True, seed=0)
    fn = gc.random_piecewise_function(1, 3, 1, False, seed=0)
    assert fn.end_points() == [0, 1]
