"""The two-dimensional additivity complex of a periodic piecewise function.

The subadditivity slack delta(x, y) = pi(x) + pi(y) - pi(x+y) is piecewise
linear; its domains of linearity are the faces F(I, J, K) cut out by
x in I, y in J, x+y in K, where I, J, K run over the breakpoints and
breakpoint intervals of pi (K shifted into [0, 2]).  This module builds
faces, enumerates the complex, computes directional limits of the slack,
enumerates additive faces (where the slack vanishes, in the limit sense for
discontinuous functions), and the merit index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import ConstructionError, NotSubadditiveError
from .pwl import PiecewiseFunction
from .rational import to_rational

Interval = tuple[Fraction, Fraction]
Point = tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)
TWO = Fraction(2)


@dataclass(frozen=True)
class Face:
    """A face of the complex: the polytope {x in I, y in J, x+y in K},
    stored by its vertex list and tight projections.

    proj1/proj2/proj3 are the exact min/max of x, y, x+y over the vertices;
    the face equals the set cut out by its own projections, which makes the
    triple a canonical key.  dimension is 0, 1 or 2 (-1 for the empty
    face); one-dimensional faces carry edge_kind 'vertical', 'horizontal'
    or 'diagonal' according to which projection is a point.
    """

    proj1: Optional[Interval]
    proj2: Optional[Interval]
    proj3: Optional[Interval]
    vertices: tuple[Point, ...]
    dimension: int
    edge_kind: Optional[str]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def proj3_mod_1(self) -> Interval:
        """View of proj3 reduced into [0, 1] (faces never straddle 1)."""
        lo, hi = self.proj3
        if lo >= 1:
            return (lo - 1, hi - 1)
        return (lo, hi)

    def contains_point(self, p: Point) -> bool:
        if self.is_empty:
            return False
        x, y = p
        return (self.proj1[0] <= x <= self.proj1[1]
                and self.proj2[0] <= y <= self.proj2[1]
                and self.proj3[0] <= x + y <= self.proj3[1])

    def contains_face(self, other: "Face") -> bool:
        return (not other.is_empty
                and all(self.contains_point(v) for v in other.vertices))

    def key(self):
        return (self.proj1, self.proj2, self.proj3)

    def mirror_key(self):
        return (self.proj2, self.proj1, self.proj3)

    def __repr__(self):
        if self.is_empty:
            return "<Face empty>"
        return (f"<Face dim {self.dimension} I'={_fmt_iv(self.proj1)} "
                f"J'={_fmt_iv(self.proj2)} K'={_fmt_iv(self.proj3)}>")


def _fmt_iv(iv: Interval) -> str:
    return f"[{iv[0]}, {iv[1]}]" if iv[0] != iv[1] else f"{{{iv[0]}}}"


_EMPTY_FACE = Face(None, None, None, (), -1, None)


def _coerce_interval(iv, lo_bound: Fraction, hi_bound: Fraction) -> Interval:
    if isinstance(iv, (tuple, list)):
        if len(iv) == 1:
            a = b = to_rational(iv[0])
        elif len(iv) == 2:
            a, b = to_rational(iv[0]), to_rational(iv[1])
        else:
            raise ConstructionError(f"interval needs 1 or 2 endpoints, got {iv!r}")
    else:
        a = b = to_rational(iv)
    if a > b:
        raise ConstructionError(f"malformed interval [{a}, {b}]")
    if a < lo_bound or b > hi_bound:
        raise ConstructionError(
            f"interval [{a}, {b}] outside [{lo_bound}, {hi_bound}]")
    return (a, b)


def face_from_triple(I, J, K) -> Face:
    """Face F(I, J, K) from intervals (or single points) I, J in [0, 1] and
    K in [0, 2].  The basic solutions, where two of x, y, x+y are fixed to
    interval endpoints, are filtered for feasibility; an empty face (no
    feasible basic solution) is allowed."""
    I = _coerce_interval(I, ZERO, ONE)
    J = _coerce_interval(J, ZERO, ONE)
    K = _coerce_interval(K, ZERO, TWO)
    cand = set()
    for x in I:
        for y in J:
            cand.add((x, y))
        for s in K:
            cand.add((x, s - x))
    for y in J:
        for s in K:
            cand.add((s - y, y))
    verts = sorted(
        (x, y) for (x, y) in cand
        if I[0] <= x <= I[1] and J[0] <= y <= J[1] and K[0] <= x + y <= K[1]
    )
    return _face_from_vertices(verts)


def _face_from_vertices(verts: Sequence[Point]) -> Face:
    if not verts:
        return _EMPTY_FACE
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    ss = [v[0] + v[1] for v in verts]
    p1 = (min(xs), max(xs))
    p2 = (min(ys), max(ys))
    p3 = (min(ss), max(ss))
    singles = (p1[0] == p1[1]) + (p2[0] == p2[1]) + (p3[0] == p3[1])
    dim = {0: 2, 1: 1, 3: 0}[singles]
    kind = None
    if dim == 1:
        kind = ("vertical" if p1[0] == p1[1]
                else "horizontal" if p2[0] == p2[1] else "diagonal")
    return Face(p1, p2, p3, tuple(verts), dim, kind)


def mirror_face(face: Face) -> Face:
    verts = sorted((y, x) for (x, y) in face.vertices)
    return _face_from_vertices(verts)


# -- slack and its directional limits ----------------------------------------

def delta_pi(fn: PiecewiseFunction, x, y) -> Fraction:
    """Subadditivity slack pi(x) + pi(y) - pi(x+y)."""
    x = to_rational(x)
    y = to_rational(y)
    return fn(x) + fn(y) - fn(x + y)


def _approach_side(iv: Interval, t: Fraction) -> int:
    """Side from which a coordinate functional approaches t when the point
    tends into the relative interior of a face with projection iv."""
    lo, hi = iv
    if lo == hi:
        return 0
    if t == lo:
        return 1
    if t == hi:
        return -1
    return 0  # interior of the projection: the function is continuous there


def face_sides(face: Face, v: Point) -> tuple[int, int, int]:
    x, y = v
    return (
        _approach_side(face.proj1, x),
        _approach_side(face.proj2, y),
        _approach_side(face.proj3, x + y),
    )


def delta_pi_limit(fn: PiecewiseFunction, face: Face, v) -> Fraction:
    """Limit of the slack at v approached from the relative interior of
    face.  v must belong to the face."""
    v = (to_rational(v[0]), to_rational(v[1]))
    if not face.contains_point(v):
        raise ConstructionError(f"point {v} does not belong to {face}")
    sx, sy, ss = face_sides(face, v)
    x, y = v
    return fn.limit(x, sx) + fn.limit(y, sy) - fn.limit(x + y, ss)


# -- complex enumeration ------------------------------------------------------

def enumerate_complex_vertices(fn: PiecewiseFunction,
                               upper_triangle_only: bool = False) -> list[Point]:
    """All vertices of the complex in [0,1]^2: pairwise intersections of the
    grid lines x = x_i, y = x_j, x + y = x_k (+1), sorted and deduplicated.
    With upper_triangle_only, restrict to x <= y."""
    b, _, _, _, D, _ = fn.scaled_tables()
    pts = kernels.scan.complex_vertices(b)
    out = [(Fraction(px, D), Fraction(py, D)) for px, py in pts]
    if upper_triangle_only:
        out = [p for p in out if p[0] <= p[1]]
    return out


def scan_vertex_slacks(fn: PiecewiseFunction, upper_triangle: bool = True,
                       with_limits: Optional[bool] = None):
    """Kernel scan of the slack at every complex vertex (value plus, for
    discontinuous functions, every limit cone).

    Returns (points, neg, zero, min_pos, max_abs): points is the scanned
    vertex list; neg has entries (point, sides, slack) with negative slack;
    zero has (point, sides); min_pos is the smallest positive slack seen
    (None when none) and max_abs the largest absolute slack.
    """
    if with_limits is None:
        with_limits = not fn.is_continuous
    b, vals, rights, lefts, D, V = fn.scaled_tables()
    raw = kernels.scan.complex_vertices(b)
    if upper_triangle:
        raw = [p for p in raw if p[0] <= p[1]]
    xs = [p[0] for p in raw]
    ys = [p[1] for p in raw]
    neg, zero, mp, ma = kernels.scan.scan_slacks(
        b, vals, rights, lefts, V, xs, ys, with_limits)
    points = [(Fraction(px, D), Fraction(py, D)) for px, py in raw]
    neg_out = [(points[k], (sx, sy, ss), Fraction(num, den))
               for k, sx, sy, ss, num, den in neg]
    zero_out = [(points[k], (sx, sy, ss)) for k, sx, sy, ss in zero]
    min_pos = Fraction(mp[0], mp[1]) if mp[1] else None
    max_abs = Fraction(ma[0], ma[1])
    return points, neg_out, zero_out, min_pos, max_abs


def scan_points_slacks(fn: PiecewiseFunction, points: Sequence[Point],
                       with_limits: bool):
    """Slack scan of fn at an externally supplied point list (used to probe
    a perturbation on the vertex set of the original function)."""
    extra = 1
    for x, y in points:
        extra = lcm(extra, x.denominator, y.denominator)
    b, vals, rights, lefts, D, V = fn.scaled_tables(extra_denominator=extra)
    xs = [int(x * D) for x, _ in points]
    ys = [int(y * D) for _, y in points]
    neg, zero, mp, ma = kernels.scan.scan_slacks(
        b, vals, rights, lefts, V, xs, ys, with_limits)
    min_pos = Fraction(mp[0], mp[1]) if mp[1] else None
    max_abs = Fraction(ma[0], ma[1])
    neg_out = [(points[k], (sx, sy, ss), Fraction(num, den))
               for k, sx, sy, ss, num, den in neg]
    zero_out = [(points[k], (sx, sy, ss)) for k, sx, sy, ss in zero]
    return neg_out, zero_out, min_pos, max_abs


def _cells(fn: PiecewiseFunction) -> list[Interval]:
    b = fn.breakpoints
    return [(b[i], b[i + 1]) for i in range(len(b) - 1)]


def _ext_cells(fn: PiecewiseFunction) -> list[Interval]:
    cells = _cells(fn)
    return cells + [(lo + 1, hi + 1) for lo, hi in cells]


def _ext_points(fn: PiecewiseFunction) -> list[Interval]:
    b = list(fn.breakpoints) + [x + 1 for x in fn.breakpoints[1:]]
    return [(x, x) for x in b]


def faces_of_complex(fn: PiecewiseFunction, dims: Iterable[int] = (0, 1, 2)) -> list[Face]:
    """All distinct faces of the complex (deduplicated across the many
    (I, J, K) representations), lexicographically ordered by projections."""
    dims = set(dims)
    pieces = _cells(fn) + _points(fn)
    kpieces = _ext_cells(fn) + _ext_points(fn)
    seen: dict = {}
    for I in pieces:
        for J in pieces:
            lo, hi = I[0] + J[0], I[1] + J[1]
            for K in kpieces:
                if K[1] < lo or K[0] > hi:
                    continue
                face = face_from_triple(I, J, K)
                if face.is_empty or face.dimension not in dims:
                    continue
                seen.setdefault(face.key(), face)
    return [seen[k] for k in sorted(seen)]


def _points(fn: PiecewiseFunction) -> list[Interval]:
    return [(x, x) for x in fn.breakpoints]


@dataclass(frozen=True)
class AdditiveFaceSet:
    """Additive faces of the complex with per-face maximality flags."""

    faces: tuple[Face, ...]
    maximal: tuple[bool, ...]

    def maximal_faces(self) -> list[Face]:
        return [f for f, m in zip(self.faces, self.maximal) if m]

    def faces_of_dim(self, dim: int, maximal_only: bool = False) -> list[Face]:
        return [f for f, m in zip(self.faces, self.maximal)
                if f.dimension == dim and (m or not maximal_only)]

    def __len__(self):
        return len(self.faces)


class _SlackOracle:
    """Memoized signs of the (limit) slack at complex vertices."""

    def __init__(self, fn: PiecewiseFunction):
        self.fn = fn
        self.tables = fn.scaled_tables()
        self._memo: dict = {}

    def sign(self, v: Point, sides: tuple[int, int, int]) -> int:
        key = (v, sides)
        if key not in self._memo:
            b, vals, rights, lefts, D, V = self.tables
            num, _ = kernels.scan.delta_num_den(
                b, vals, rights, lefts, V,
                int(v[0] * D), sides[0], int(v[1] * D), sides[1], sides[2])
            self._memo[key] = (num > 0) - (num < 0)
        return self._memo[key]

    def face_additive_at(self, face: Face, v: Point) -> bool:
        return self.sign(v, face_sides(face, v)) == 0

    def vertex_additive(self, v: Point) -> bool:
        return any(self.sign(v, t) == 0 for t in kernels.SIDE_TRIPLES)


def _require_subadditive(fn: PiecewiseFunction):
    _, neg, _, _, _ = scan_vertex_slacks(fn, upper_triangle=True)
    if neg:
        (pt, sides, slack) = neg[0]
        raise NotSubadditiveError(
            f"slack {slack} < 0 at {pt} (sides {sides}); "
            "additive-face enumeration requires subadditivity")


def generate_additive_faces_discontinuous(fn: PiecewiseFunction) -> AdditiveFaceSet:
    """Every additive face of the complex, by the limit criterion.

    A two-dimensional face is additive when the limit slack vanishes at all
    of its vertices.  An edge is additive when some containing face (itself
    or one of the up to two incident two-dimensional faces) has vanishing
    limit slack at both edge endpoints.  A vertex is additive when any
    containing face gives a vanishing limit.  Maximality flags are computed
    by inclusion filtering.
    """
    _require_subadditive(fn)
    oracle = _SlackOracle(fn)
    all_faces = faces_of_complex(fn)
    two_faces = [f for f in all_faces if f.dimension == 2]
    additive: list[Face] = []
    additive_keys: set = set()

    for face in all_faces:
        if face.dimension == 2:
            ok = all(oracle.face_additive_at(face, v) for v in face.vertices)
        elif face.dimension == 1:
            containers = [face] + [g for g in two_faces if g.contains_face(face)]
            ok = any(
                all(oracle.face_additive_at(g, v) for v in face.vertices)
                for g in containers
            )
        else:
            ok = oracle.vertex_additive(face.vertices[0])
        if ok:
            additive.append(face)
            additive_keys.add(face.key())

    flags = []
    for face in additive:
        maximal = not any(
            other.dimension > face.dimension and other.contains_face(face)
            for other in additive
        )
        flags.append(maximal)
    return AdditiveFaceSet(tuple(additive), tuple(flags))


def generate_maximal_additive_faces_continuous(fn: PiecewiseFunction) -> AdditiveFaceSet:
    """Inclusion-maximal additive faces of a continuous subadditive
    function.

    Two-dimensional faces F(I, J, K) are visited in lexicographic order on
    (I, J, K) with I <= J, with a fast rejection of non-full-dimensional
    triples.  Each face is classified by its number of additive vertices:
    none (skip); one (record the vertex when this is the lexicographically
    last containing 2-face and the vertex is not already part of a recorded
    maximal face); two (they span an edge, recorded when this is the last
    containing 2-face and the unique other containing face was not itself
    recorded); more (the face is fully additive and recorded).  The other
    half of the square is filled in by mirror symmetry at the end.
    """
    if not fn.is_continuous:
        raise ConstructionError("continuous enumeration on a discontinuous function")
    _require_subadditive(fn)
    oracle = _SlackOracle(fn)

    cells = _cells(fn)
    ext_cells = _ext_cells(fn)

    def is_2d(I: Interval, J: Interval, K: Interval) -> bool:
        return I[0] + J[0] < K[1] and I[1] + J[1] > K[0]

    def cells_around(t: Fraction, universe: list[Interval]) -> list[Interval]:
        return [c for c in universe if c[0] <= t <= c[1]]

    def containing_2faces(points: Sequence[Point], require_i_le_j: bool):
        """Distinct 2-face triples containing every listed point."""
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        sums = [p[0] + p[1] for p in points]
        Is = [c for c in cells if all(c[0] <= x <= c[1] for x in xs)]
        Js = [c for c in cells if all(c[0] <= y <= c[1] for y in ys)]
        Ks = [c for c in ext_cells if all(c[0] <= s <= c[1] for s in sums)]
        out = []
        for I in Is:
            for J in Js:
                if require_i_le_j and I > J:
                    continue
                for K in Ks:
                    if is_2d(I, J, K):
                        out.append((I, J, K))
        return out

    recorded: list[Face] = []
    recorded_keys: set = set()
    recorded_vertices: set = set()

    def record(face: Face):
        recorded.append(face)
        recorded_keys.add(face.key())
        recorded_vertices.update(face.vertices)

    for ic, I in enumerate(cells):
        for J in cells[ic:]:
            lo, hi = I[0] + J[0], I[1] + J[1]
            for K in ext_cells:
                if not is_2d(I, J, K):
                    continue
                face = face_from_triple(I, J, K)
                add_verts = [v for v in face.vertices
                             if oracle.sign(v, (0, 0, 0)) == 0]
                if not add_verts:
                    continue
                if len(add_verts) == 1:
                    v = add_verts[0]
                    if max(containing_2faces([v], True)) != (I, J, K):
                        continue
                    if v not in recorded_vertices:
                        record(face_from_triple((v[0], v[0]), (v[1], v[1]),
                                                (v[0] + v[1], v[0] + v[1])))
                elif len(add_verts) == 2:
                    v1, v2 = add_verts
                    edge = _face_from_vertices(sorted([v1, v2]))
                    if edge.dimension != 1:
                        raise ConstructionError(
                            "two additive vertices of a 2-face must span an edge")
                    in_half = containing_2faces([v1, v2], True)
                    if max(in_half) != (I, J, K):
                        continue
                    others = [t for t in containing_2faces([v1, v2], False)
                              if t != (I, J, K)]
                    other_recorded = False
                    for (oi, oj, ok) in others:
                        oface = face_from_triple(oi, oj, ok)
                        k = oface.key() if oi <= oj else oface.mirror_key()
                        if k in recorded_keys:
                            other_recorded = True
                    if not other_recorded:
                        record(edge)
                else:
                    record(face)

    by_key = {f.key(): f for f in recorded}
    for f in recorded:
        m = mirror_face(f)
        by_key.setdefault(m.key(), m)
    faces = tuple(by_key[k] for k in sorted(by_key))
    return AdditiveFaceSet(faces, tuple(True for _ in faces))


def generate_maximal_additive_faces(fn: PiecewiseFunction) -> AdditiveFaceSet:
    """Inclusion-maximal additive faces (dispatching on continuity)."""
    if fn.is_continuous:
        return generate_maximal_additive_faces_continuous(fn)
    full = generate_additive_faces_discontinuous(fn)
    faces = tuple(full.maximal_faces())
    return AdditiveFaceSet(faces, tuple(True for _ in faces))


def generate_additive_faces(fn: PiecewiseFunction) -> AdditiveFaceSet:
    """All additive faces: limit-based enumeration for discontinuous
    functions, subface closure of the maximal list for continuous ones."""
    if not fn.is_continuous:
        return generate_additive_faces_discontinuous(fn)
    # continuous: every subface of an additive face is additive, so the
    # maximal enumeration determines everything; expand to all faces
    maximal = generate_maximal_additive_faces_continuous(fn)
    out = []
    flags = []
    for face in faces_of_complex(fn):
        container = next((g for g in maximal.faces if g.contains_face(face)), None)
        if container is not None:
            out.append(face)
            flags.append(face.key() == container.key())
    return AdditiveFaceSet(tuple(out), tuple(flags))


# -- areas and the merit index ------------------------------------------------

def _convex_hull(points: Sequence[Point]) -> list[Point]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def face_area(face: Face) -> Fraction:
    if face.dimension < 2:
        return ZERO
    hull = _convex_hull(face.vertices)
    area2 = ZERO
    for i in range(len(hull)):
        x1, y1 = hull[i]
        x2, y2 = hull[(i + 1) % len(hull)]
        area2 += x1 * y2 - x2 * y1
    return abs(area2) / 2


def merit_index(fn: PiecewiseFunction) -> Fraction:
    """Twice the area of the additivity domain in the unit square.

    Requires a minimal valid function; the slack then vanishes exactly on
    the additive faces, so the area is the summed area of the additive
    two-dimensional faces.
    """
    from .minimality import minimality_test  # deferred to avoid an import cycle

    report = minimality_test(fn)
    if not report.is_minimal:
        raise ConstructionError("merit index is defined for minimal valid functions")
    faces = generate_additive_faces(fn)
    return 2 * sum((face_area(f) for f in faces.faces_of_dim(2)), ZERO)
