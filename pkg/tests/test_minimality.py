from fractions import Fraction as F

import pytest

import groupcut as gc
from groupcut.errors import ConstructionError, NoCandidateFError


class TestFindF:
    def test_gmic(self, gmic45):
        assert gc.find_f(gmic45) == F(4, 5)

    def test_equiv5(self, equiv5):
        assert gc.find_f(equiv5) == F(1, 5)

    def test_zero_function_errors(self, zero_fn):
        with pytest.raises(NoCandidateFError):
            gc.find_f(zero_fn)

    def test_limit_only_case_is_explicit_error(self):
        fn = gc.from_breakpoints_and_limits(
            [0, F(1, 2), 1],
            [(0, 0, 0), (F(1, 2), 1, 1), (0, 0, 0)])
        with pytest.raises(NoCandidateFError, match="one-sided limit"):
            gc.find_f(fn)


class TestMinimalityTest:
    def test_gmic_minimal(self, gmic45):
        rep = gc.minimality_test(gmic45)
        assert rep.is_minimal and rep.violations == ()
        assert rep.f_used == F(4, 5)

    def test_gomory_fractional_range_violation(self):
        rep = gc.minimality_test(gc.gomory_fractional(F(4, 5)))
        assert not rep.is_minimal
        kinds = {v.kind for v in rep.violations}
        assert "range" in kinds

    def test_equiv5_limit_witness(self, equiv5):
        rep = gc.minimality_test(equiv5)
        assert not rep.is_minimal
        hits = [v for v in rep.violations
                if v.kind == "subadditivity" and (v.x, v.y) == (F(2, 5), F(4, 5))
                and v.face is not None and v.face.edge_kind == "horizontal"]
        assert hits and hits[0].slack == F(-2, 5)
        assert hits[0].face.key() == gc.face_from_triple(
            (F(1, 5), F(2, 5)), F(4, 5), (1, F(6, 5))).key()

    def test_compendium_minimal_functions(self, gj, drlm, hildebrand, gmic15):
        for fn in (gj, drlm, hildebrand, gmic15):
            rep = gc.minimality_test(fn)
            assert rep.is_minimal and rep.violations == ()

    def test_fail_fast(self, equiv5):
        rep = gc.minimality_test(equiv5, collect_all=False)
        assert not rep.is_minimal and len(rep.violations) == 1

    def test_value_at_zero(self):
        fn = gc.from_breakpoints_and_values(
            [0, F(1, 2), 1], [F(1, 4), 1, F(1, 4)], f=F(1, 2))
        rep = gc.minimality_test(fn)
        assert {v.kind for v in rep.violations} >= {"value-at-0"}

    def test_invalid_f(self, gmic45):
        with pytest.raises(ConstructionError):
            gc.minimality_test(gmic45, f=F(3, 2))

    def test_symmetry_and_value_at_f_consistent(self):
        # pi(0) = 0 and symmetry holding forces pi(f) = 1: a function where
        # pi(f) != 1 must report symmetry (not a bare value error)
        fn = gc.from_breakpoints_and_values(
            [0, F(1, 2), 1], [0, F(3, 4), 0], f=F(1, 2))
        rep = gc.minimality_test(fn)
        assert not rep.is_minimal
        assert "symmetry" in {v.kind for v in rep.violations}
        assert "value-at-0" not in {v.kind for v in rep.violations}

    def test_upper_triangle_restriction_is_lossless(self, equiv5):
        # scanning the full square finds exactly the mirror closures of the
        # upper-triangle violations
        from groupcut.complex2d import scan_vertex_slacks

        _, full, _, _, _ = scan_vertex_slacks(equiv5, upper_triangle=False)
        _, upper, _, _, _ = scan_vertex_slacks(equiv5, upper_triangle=True)

        def norm(entries):
            out = set()
            for (x, y), (sx, sy, ss), slack in entries:
                if (x, sx) > (y, sy):
                    x, y, sx, sy = y, x, sy, sx
                out.add(((x, y), (sx, sy, ss), slack))
            return out

        assert norm(full) == norm(upper)

    def test_minimal_implies_bruteforce_grid_subadditive(self, gj):
        assert gc.minimality_test(gj).is_minimal
        grid = [F(i, 60) for i in range(61)]
        assert all(gc.delta_pi(gj, x, y) >= 0 for x in grid for y in grid)


class TestDetectZeroPeriod:
    def test_gmic_has_none(self, gmic45):
        assert gc.detect_zero_period(gmic45) is None

    def test_period_five(self):
        fn = gc.from_breakpoints_and_values(
            [F(i, 10) for i in range(11)],
            [0, F(1, 2)] * 5 + [0])
        assert gc.detect_zero_period(fn) == 5

    def test_period_three(self):
        fn = gc.from_breakpoints_and_values(
            [0, F(1, 6), F(1, 3), F(1, 2), F(2, 3), F(5, 6), 1],
            [0, F(1, 2), 0, F(1, 2), 0, F(1, 2), 0])
        assert gc.detect_zero_period(fn) == 3

    def test_non_periodic_zero_rejected(self):
        fn = gc.from_breakpoints_and_values(
            [0, F(1, 3), F(2, 3), 1], [0, 0, 1, 0])
        with pytest.raises(ConstructionError):
            gc.detect_zero_period(fn)


class TestDiscreteMinimality:
    def test_gmic_restriction(self, gmic45):
        dfn = gc.restrict_to_finite_group(gmic45)
        rep = gc.minimality_test_discrete(dfn)
        assert rep.is_minimal and rep.f_used == F(4, 5)

    def test_violations(self):
        dfn = gc.discrete_from_points_and_values(
            [0, F(1, 3), F(2, 3), 1], [0, 1, F(1, 4), 0], f=F(1, 3))
        rep = gc.minimality_test_discrete(dfn)
        assert not rep.is_minimal
        assert "symmetry" in {v.kind for v in rep.violations}
