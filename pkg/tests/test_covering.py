from fractions import Fraction as F

import pytest

import groupcut as gc
from groupcut.complex2d import generate_additive_faces
from groupcut.covering import directly_covered_components
from groupcut.errors import UnsupportedCaseError

from conftest import random_minimal_functions


class TestDirectlyCovered:
    def test_gj_phase_one_merges(self, gj):
        additive = generate_additive_faces(gj)
        cc = directly_covered_components(gj, additive)
        # two components after merging the overlapping corner component
        assert len(cc.components) == 2
        assert cc.components[0] == ((0, F(7, 30)), (F(11, 30), F(3, 5)))
        assert cc.components[1] == ((F(7, 30), F(11, 30)), (F(3, 5), 1))

    def test_zero_function_single_component(self, zero_fn):
        cc = gc.generate_covered_components(zero_fn)
        assert cc.components == (((0, 1),),)
        assert cc.uncovered == ()

    def test_no_two_dimensional_faces(self):
        # constant 1/2 with pinned value 0 at the origin: subadditive, but
        # every limit slack on a 2-face interior is 1/2, so nothing is
        # directly covered
        fn = gc.from_breakpoints_and_limits(
            [0, 1], [(0, F(1, 2), F(1, 2)), (0, F(1, 2), F(1, 2))])
        additive = generate_additive_faces(fn)
        assert not [f for f in additive.faces if f.dimension == 2]
        cc = directly_covered_components(fn, additive)
        assert cc.components == ()
        assert cc.uncovered == ((0, 1),)


class TestGenerateCoveredComponents:
    def test_hildebrand_published_components(self, hildebrand):
        cc = gc.generate_covered_components(hildebrand)
        assert not cc.closed
        assert cc.components == (
            ((0, F(1, 8)), (F(3, 8), F(1, 2))),
            ((F(1, 8), F(1, 4)), (F(1, 4), F(3, 8)),
             (F(1, 2), F(5, 8)), (F(7, 8), 1)),
            ((F(5, 8), F(3, 4)), (F(3, 4), F(7, 8))),
        )
        assert cc.uncovered == ()

    def test_hildebrand_translation_step(self, hildebrand):
        cc = gc.generate_covered_components(hildebrand)
        moves = [(mv.kind, mv.source, mv.moved) for mv in cc.edges_used]
        assert ("translation", (F(1, 8), F(1, 4)), (F(1, 2), F(5, 8))) in moves
        assert any(kind == "reflection" and moved == (F(7, 8), 1)
                   for kind, _, moved in moves)

    def test_gmic_two_components(self, gmic45):
        cc = gc.generate_covered_components(gmic45)
        assert cc.closed
        assert cc.components == (((0, F(4, 5)),), ((F(4, 5), 1),))
        assert cc.uncovered == ()

    def test_drlm_uncovered(self, drlm):
        assert gc.uncovered_intervals(drlm) == [(F(5, 12), F(2, 3))]

    def test_gmic_fully_covered(self, gmic45):
        assert gc.uncovered_intervals(gmic45) == []

    def test_zero_uncovered_empty(self, zero_fn):
        assert gc.uncovered_intervals(zero_fn) == []

    def test_two_sided_discontinuity_at_origin_rejected(self):
        fn = gc.from_breakpoints_and_limits(
            [0, F(1, 2), 1],
            [(0, F(1, 4), F(1, 4)), (1, 1, 1), (0, F(1, 4), F(1, 4))],
            f=F(1, 2))
        with pytest.raises(UnsupportedCaseError):
            gc.generate_covered_components(fn)


class TestCoveringInvariants:
    def test_slope_coherence(self, gj, hildebrand, gmic45):
        # the function has one single slope on every covered component
        for fn in (gj, hildebrand, gmic45):
            cc = gc.generate_covered_components(fn)
            for comp in cc.components:
                slopes = set()
                for lo, hi in comp:
                    mid = (lo + hi) / 2
                    slopes.add(fn.which_function(mid).slope)
                assert len(slopes) == 1

    def test_phase_two_extends_phase_one(self, hildebrand):
        additive = generate_additive_faces(hildebrand)
        phase1 = directly_covered_components(hildebrand, additive)
        final = gc.generate_covered_components(hildebrand, additive)

        def covers(comp, iv):
            return any(a <= iv[0] and iv[1] <= b for a, b in comp)

        for comp in phase1.components:
            target = [c for c in final.components
                      if all(covers(c, iv) for iv in comp)]
            assert target, "phase-one component lost during propagation"

    def test_disjoint_interiors(self, hildebrand, gj):
        for fn in (hildebrand, gj):
            cc = gc.generate_covered_components(fn)
            ivs = cc.all_intervals()
            for i, (a, b) in enumerate(ivs):
                for (c, d) in ivs[i + 1:]:
                    assert not (a < d and c < b), "interval interiors overlap"

    def test_closure_partition(self, gj, drlm, hildebrand):
        for fn in (gj, drlm, hildebrand):
            cc = gc.generate_covered_components(fn)
            pieces = sorted(cc.all_intervals() + list(cc.uncovered))
            cursor = F(0)
            for a, b in pieces:
                assert a <= cursor  # closures meet or overlap
                cursor = max(cursor, b)
            assert cursor == 1

    def test_random_functions_cover_partition(self):
        for fn in random_minimal_functions(5, xgrid=5, ygrid=5, start_seed=50):
            cc = gc.generate_covered_components(fn)
            pieces = sorted(cc.all_intervals() + list(cc.uncovered))
            cursor = F(0)
            for a, b in pieces:
                assert a <= cursor
                cursor = max(cursor, b)
            assert cursor == 1
