"""Shared fixtures and independent oracles for the test suite."""

from fractions import Fraction as F
from math import lcm

import pytest

import groupcut as gc
from groupcut.complex2d import delta_pi, face_area, faces_of_complex


@pytest.fixture(scope="session")
def gmic45():
    return gc.gmic(F(4, 5))


@pytest.fixture(scope="session")
def gmic15():
    return gc.gmic(F(1, 5))


@pytest.fixture(scope="session")
def equiv5():
    return gc.equiv5_random_discont_1()


@pytest.fixture(scope="session")
def gj():
    return gc.gj_2_slope(F(3, 5), F(1, 3))


@pytest.fixture(scope="session")
def drlm():
    return gc.drlm_backward_3_slope(F(1, 12), F(4, 12))


@pytest.fixture(scope="session")
def hildebrand():
    return gc.hildebrand_discont_3_slope_1()


@pytest.fixture(scope="session")
def zero_fn():
    return gc.from_breakpoints_and_values([0, 1], [0, 0])


# -- independent oracles ------------------------------------------------------

def oracle_maximal_additive_faces(fn):
    """Brute force: mark every face whose vertices all have zero slack,
    then keep the inclusion-maximal ones.  Valid for continuous functions,
    independent of the incremental enumeration under test."""
    additive = [
        face for face in faces_of_complex(fn)
        if all(delta_pi(fn, x, y) == 0 for (x, y) in face.vertices)
    ]
    return sorted(
        f.key() for f in additive
        if not any(g.dimension > f.dimension and g.contains_face(f)
                   for g in additive)
    )


def oracle_delta_pi_limit(fn, face, v):
    """Directional limit by exact extrapolation: the slack is affine on a
    short initial segment from v toward the face centroid, so two samples
    determine the limit."""
    if face.dimension == 0:
        return delta_pi(fn, *face.vertices[0])
    n = len(face.vertices)
    cx = sum((p[0] for p in face.vertices), F(0)) / n
    cy = sum((p[1] for p in face.vertices), F(0)) / n
    dx, dy = cx - v[0], cy - v[1]
    D = lcm(*(x.denominator for x in fn.breakpoints),
            v[0].denominator, v[1].denominator)
    t1 = F(1, 4 * D)
    t2 = F(1, 8 * D)
    d1 = delta_pi(fn, v[0] + t1 * dx, v[1] + t1 * dy)
    d2 = delta_pi(fn, v[0] + t2 * dx, v[1] + t2 * dy)
    return 2 * d2 - d1


def oracle_additivity_area(fn):
    """Area of the zero-slack set: a two-dimensional face lies in it exactly
    when the slack vanishes at three affinely independent interior points
    (the slack is affine there and continuous on the open cell)."""
    total = F(0)
    for face in faces_of_complex(fn, dims=(2,)):
        n = len(face.vertices)
        cx = sum((p[0] for p in face.vertices), F(0)) / n
        cy = sum((p[1] for p in face.vertices), F(0)) / n
        probes = [(cx, cy)]
        for vx, vy in face.vertices:
            probes.append(((cx + vx) / 2, (cy + vy) / 2))
        independent = [probes[0]]
        for p in probes[1:]:
            if len(independent) == 1 and p != independent[0]:
                independent.append(p)
            elif len(independent) == 2:
                (x1, y1), (x2, y2) = independent
                if (x2 - x1) * (p[1] - y1) != (y2 - y1) * (p[0] - x1):
                    independent.append(p)
                    break
        if all(delta_pi(fn, x, y) == 0 for x, y in independent):
            total += face_area(face)
    return total


def oracle_kernel_dimension(rows, ncols):
    """Kernel dimension via sympy, independent of the exact elimination."""
    import sympy

    if not rows:
        return ncols
    m = sympy.Matrix([[sympy.Rational(e) for e in row] for row in rows])
    return ncols - m.rank()


def random_minimal_functions(count, xgrid=4, ygrid=4, proba=1, start_seed=1,
                             max_seed=4000):
    """Deterministic stream of random minimal valid functions."""
    out = []
    seed = start_seed
    while len(out) < count and seed < max_seed:
        fn = gc.random_piecewise_function(xgrid, ygrid, proba, True, seed=seed)
        seed += 1
        try:
            if gc.minimality_test(fn).is_minimal:
                out.append(fn)
        except gc.NoCandidateFError:
            continue
    assert len(out) == count, f"only found {len(out)} functions"
    return out
