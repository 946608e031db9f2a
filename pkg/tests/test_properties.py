"""Property-based tests of the core invariants."""

from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

import groupcut as gc

rationals_01 = st.fractions(min_value=0, max_value=1, max_denominator=24)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=24)


def _pool():
    fns = [
        gc.gmic(F(4, 5)),
        gc.gj_2_slope(F(3, 5), F(1, 3)),
        gc.hildebrand_discont_3_slope_1(),
        gc.equiv5_random_discont_1(),
        gc.drlm_backward_3_slope(F(1, 12), F(4, 12)),
    ]
    for seed in (1, 2, 5):
        fns.append(gc.random_piecewise_function(5, 5, F(1, 3), True, seed=seed))
    return fns


POOL = _pool()
functions = st.sampled_from(POOL)


@given(functions, rationals, st.integers(min_value=-3, max_value=3))
@settings(max_examples=120, deadline=None)
def test_periodicity(fn, x, t):
    assert fn(x + t) == fn(x)
    assert fn.limits_at(x + t) == fn.limits_at(x)


@given(functions, rationals_01)
@settings(max_examples=120, deadline=None)
def test_limit_consistency_off_breakpoints(fn, x):
    if x in fn.breakpoints or x == 1:
        return
    v, r, l = fn.limits_at(x)
    assert v == r == l == fn(x)


@given(functions, rationals_01)
@settings(max_examples=120, deadline=None)
def test_interpolation_matches_which_function(fn, x):
    piece = fn.which_function(x)
    if piece.face[0] != piece.face[1]:
        assert piece(x) == fn(x)
    else:
        assert piece.intercept == fn(x)


@given(functions)
@settings(max_examples=20, deadline=None)
def test_round_trip_reconstruction(fn):
    again = gc.from_breakpoints_and_limits(
        fn.end_points(), fn.limits_at_end_points(), merge=False)
    assert again.end_points() == fn.end_points()
    assert again.limits_at_end_points() == fn.limits_at_end_points()


@given(functions, rationals, rationals)
@settings(max_examples=200, deadline=None)
def test_delta_pi_symmetry(fn, x, y):
    assert gc.delta_pi(fn, x, y) == gc.delta_pi(fn, y, x)


@given(st.fractions(min_value=0, max_value=1, max_denominator=16),
       st.fractions(min_value=0, max_value=1, max_denominator=16),
       st.fractions(min_value=0, max_value=1, max_denominator=16),
       st.fractions(min_value=0, max_value=1, max_denominator=16),
       st.fractions(min_value=0, max_value=2, max_denominator=16),
       st.fractions(min_value=0, max_value=2, max_denominator=16))
@settings(max_examples=150, deadline=None)
def test_face_vertices_feasible(a1, b1, a2, b2, c1, c2):
    I = tuple(sorted((a1, b1)))
    J = tuple(sorted((a2, b2)))
    K = tuple(sorted((c1, c2)))
    face = gc.face_from_triple(I, J, K)
    for (x, y) in face.vertices:
        assert I[0] <= x <= I[1]
        assert J[0] <= y <= J[1]
        assert K[0] <= x + y <= K[1]
    if not face.is_empty:
        xs = [v[0] for v in face.vertices]
        ys = [v[1] for v in face.vertices]
        ss = [v[0] + v[1] for v in face.vertices]
        assert face.proj1 == (min(xs), max(xs))
        assert face.proj2 == (min(ys), max(ys))
        assert face.proj3 == (min(ss), max(ss))


@given(st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=25, deadline=None)
def test_random_function_generator_properties(seed):
    fn = gc.random_piecewise_function(5, 5, F(1, 3), True, seed=seed)
    assert fn(0) == 0
    f = fn.f
    assert fn(f) == 1
    for i in range(6):
        x = F(i, 5)
        tx, tm = fn.limits_at(x), fn.limits_at(f - x)
        assert tx[0] + tm[0] == 1
        assert tx[1] + tm[2] == 1
        assert tx[2] + tm[1] == 1


@given(st.sampled_from(POOL[:3]), st.integers(min_value=-3, max_value=3))
@settings(max_examples=30, deadline=None)
def test_homomorphism_pointwise(fn, lam):
    if lam == 0:
        return
    out = gc.multiplicative_homomorphism(fn, lam)
    for i in range(11):
        x = F(i, 10)
        assert out(x) == fn(lam * x)
