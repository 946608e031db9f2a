"""Z-periodic piecewise linear functions with exact rational data.

A function is represented by its restriction to [0, 1]: an increasing list
of possible breakpoints 0 = x_0 < ... < x_n = 1 and, at each breakpoint, the
triple (value, right limit, left limit).  On each open interval
(x_i, x_{i+1}) the function is the affine interpolation of the right limit
at x_i and the left limit at x_{i+1}; this supports one-sided
discontinuities.  Periodicity is implicit: the triples stored at 0 and at 1
are equal and describe the one periodic point, so the slot lefts[0] is the
left limit at 1 and rights[-1] the right limit at 0.

Discrete functions on the cyclic group (1/q)Z are represented by their full
value table on [0, 1].

All instances are immutable after construction and safe to share.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .errors import ConstructionError
from .rational import common_denominator, to_rational

Triple = tuple[Fraction, Fraction, Fraction]  # (value, right limit, left limit)


class AffinePiece:
    """Affine data of the smallest face of the breakpoint complex containing
    a point: value = slope*x + intercept on the relative interior of face."""

    __slots__ = ("slope", "intercept", "face")

    def __init__(self, slope: Fraction, intercept: Fraction, face: tuple[Fraction, Fraction]):
        self.slope = slope
        self.intercept = intercept
        self.face = face

    def __call__(self, x) -> Fraction:
        return self.slope * to_rational(x) + self.intercept

    def __eq__(self, other):
        return (
            isinstance(other, AffinePiece)
            and (self.slope, self.intercept, self.face) == (other.slope, other.intercept, other.face)
        )

    def __repr__(self):
        return f"AffinePiece({self.slope}*x + {self.intercept} on {self.face})"


def _coerce_triple(t) -> Triple:
    if isinstance(t, dict):
        # alternative spelling {-1: left, 0: value, 1: right}
        return (to_rational(t[0]), to_rational(t[1]), to_rational(t[-1]))
    value, right, left = t
    return (to_rational(value), to_rational(right), to_rational(left))


def _reduce_mod_one(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


class PiecewiseFunction:
    """Z-periodic piecewise linear function, possibly discontinuous.

    Construct through :func:`from_breakpoints_and_values`,
    :func:`from_breakpoints_and_limits` or the compendium constructors.
    """

    __slots__ = ("breakpoints", "limits", "f", "_cache")

    def __init__(self, breakpoints: tuple[Fraction, ...], limits: tuple[Triple, ...],
                 f: Optional[Fraction] = None):
        self.breakpoints = breakpoints
        self.limits = limits
        self.f = f
        self._cache = {}

    # -- data access -------------------------------------------------------

    def end_points(self) -> list[Fraction]:
        return list(self.breakpoints)

    def values_at_end_points(self) -> list[Fraction]:
        return [t[0] for t in self.limits]

    def limits_at_end_points(self) -> list[Triple]:
        return [tuple(t) for t in self.limits]

    @property
    def is_continuous(self) -> bool:
        if "cont" not in self._cache:
            self._cache["cont"] = all(t[0] == t[1] == t[2] for t in self.limits)
        return self._cache["cont"]

    def interval_slopes(self) -> list[Fraction]:
        """Slope of each piece (x_i, x_{i+1})."""
        if "slopes" not in self._cache:
            bk, lm = self.breakpoints, self.limits
            self._cache["slopes"] = [
                (lm[i + 1][2] - lm[i][1]) / (bk[i + 1] - bk[i])
                for i in range(len(bk) - 1)
            ]
        return list(self._cache["slopes"])

    def number_of_slopes(self) -> int:
        return len(set(self.interval_slopes()))

    # -- evaluation --------------------------------------------------------

    def _locate(self, x: Fraction) -> int:
        """Index i with breakpoints[i] <= x < breakpoints[i+1] for x in [0,1)."""
        return bisect_right(self.breakpoints, x) - 1

    def __call__(self, x) -> Fraction:
        x = _reduce_mod_one(to_rational(x))
        i = self._locate(x)
        bk, lm = self.breakpoints, self.limits
        if bk[i] == x:
            return lm[i][0]
        span = bk[i + 1] - bk[i]
        return lm[i][1] + (lm[i + 1][2] - lm[i][1]) * (x - bk[i]) / span

    def limits_at(self, x) -> Triple:
        """(value, right limit, left limit) at x, periodically reduced."""
        x = _reduce_mod_one(to_rational(x))
        i = self._locate(x)
        if self.breakpoints[i] == x:
            return tuple(self.limits[i])
        v = self(x)
        return (v, v, v)

    def limit(self, x, side: int) -> Fraction:
        """One-sided evaluation: side 0 value, 1 right limit, -1 left limit."""
        t = self.limits_at(x)
        return t[0] if side == 0 else (t[1] if side > 0 else t[2])

    def which_function(self, x) -> AffinePiece:
        """Affine data of the smallest face containing x; a constant piece at
        breakpoints."""
        x = _reduce_mod_one(to_rational(x))
        i = self._locate(x)
        bk, lm = self.breakpoints, self.limits
        if bk[i] == x:
            return AffinePiece(Fraction(0), lm[i][0], (bk[i], bk[i]))
        slope = (lm[i + 1][2] - lm[i][1]) / (bk[i + 1] - bk[i])
        intercept = lm[i][1] - slope * bk[i]
        return AffinePiece(slope, intercept, (bk[i], bk[i + 1]))

    # -- scaled integer tables for the scan kernels -------------------------

    def scaled_tables(self, extra_denominator: int = 1):
        """(b, vals, rights, lefts, D, V): integer tables scaled so that all
        breakpoints (and any query with denominator dividing
        extra_denominator) are integers over D, and all limit data integers
        over V."""
        key = ("scaled", extra_denominator)
        if key not in self._cache:
            D = lcm(common_denominator(self.breakpoints), extra_denominator)
            flat = [v for t in self.limits for v in t]
            V = common_denominator(flat)
            b = [int(x * D) for x in self.breakpoints]
            vals = [int(t[0] * V) for t in self.limits]
            rights = [int(t[1] * V) for t in self.limits]
            lefts = [int(t[2] * V) for t in self.limits]
            self._cache[key] = (b, vals, rights, lefts, D, V)
        return self._cache[key]

    # -- equality as periodic functions -------------------------------------

    def _canonical(self):
        if "canon" not in self._cache:
            bk, lm = _merge(self.breakpoints, self.limits)
            self._cache["canon"] = (bk, lm)
        return self._cache["canon"]

    def __eq__(self, other):
        if not isinstance(other, PiecewiseFunction):
            return NotImplemented
        return self._canonical() == other._canonical()

    __hash__ = None

    def __repr__(self):
        kind = "continuous" if self.is_continuous else "discontinuous"
        return (f"<PiecewiseFunction {kind}, {len(self.breakpoints) - 1} pieces, "
                f"f={self.f}>")


def _validate_breakpoints(bkpt: Sequence) -> tuple[Fraction, ...]:
    pts = tuple(to_rational(x) for x in bkpt)
    if len(pts) < 2:
        raise ConstructionError("need at least the two endpoints 0 and 1")
    if pts[0] != 0 or pts[-1] != 1:
        raise ConstructionError("breakpoints must start at 0 and end at 1")
    if any(a >= b for a, b in zip(pts, pts[1:])):
        raise ConstructionError("breakpoints must be strictly increasing")
    return pts


def _merge(bkpt: tuple[Fraction, ...], limits: tuple[Triple, ...]):
    """Drop interior points that are neither slope changes nor
    discontinuities.  0 and 1 are always retained."""
    n = len(bkpt) - 1
    keep = [True] * (n + 1)
    for i in range(1, n):
        v, r, l = limits[i]
        if not (v == r == l):
            continue
        left_slope = (limits[i][2] - limits[i - 1][1]) / (bkpt[i] - bkpt[i - 1])
        right_slope = (limits[i + 1][2] - limits[i][1]) / (bkpt[i + 1] - bkpt[i])
        if left_slope == right_slope:
            keep[i] = False
    bk = tuple(b for b, k in zip(bkpt, keep) if k)
    lm = tuple(t for t, k in zip(limits, keep) if k)
    return bk, lm


def from_breakpoints_and_limits(bkpt, limits, f=None, merge: bool = True) -> PiecewiseFunction:
    """Possibly discontinuous function from breakpoints and limit triples.

    Each triple is (value, right limit, left limit); the dict spelling
    {-1: left, 0: value, 1: right} is also accepted.  The triples given at 0
    and at 1 must be equal, since they describe the same periodic point
    (value at 0, right limit at 0, left limit at 1).
    """
    pts = _validate_breakpoints(bkpt)
    if len(limits) != len(pts):
        raise ConstructionError(
            f"{len(pts)} breakpoints but {len(limits)} limit triples")
    triples = tuple(_coerce_triple(t) for t in limits)
    if triples[0] != triples[-1]:
        raise ConstructionError(
            "limit triples at 0 and 1 must agree (one periodic point)")
    if merge:
        pts, triples = _merge(pts, triples)
    ff = to_rational(f) if f is not None else None
    if ff is not None and not (0 < ff < 1):
        raise ConstructionError("f must lie in (0, 1)")
    return PiecewiseFunction(pts, triples, ff)


def from_breakpoints_and_values(bkpt, values, f=None, merge: bool = True) -> PiecewiseFunction:
    """Continuous function interpolating the given breakpoint values."""
    pts = _validate_breakpoints(bkpt)
    if len(values) != len(pts):
        raise ConstructionError(
            f"{len(pts)} breakpoints but {len(values)} values")
    vals = [to_rational(v) for v in values]
    if vals[0] != vals[-1]:
        raise ConstructionError(
            "values at 0 and 1 must agree (periodicity)")
    triples = tuple((v, v, v) for v in vals)
    return from_breakpoints_and_limits(pts, triples, f=f, merge=merge)


def linear_combination(a, fn1: PiecewiseFunction, b, fn2: PiecewiseFunction,
                       f=None) -> PiecewiseFunction:
    """a*fn1 + b*fn2 on the common refinement of the two breakpoint sets."""
    a = to_rational(a)
    b = to_rational(b)
    grid = sorted(set(fn1.breakpoints) | set(fn2.breakpoints))
    triples = []
    for x in grid:
        t1 = fn1.limits_at(x)
        t2 = fn2.limits_at(x)
        triples.append(tuple(a * u + b * v for u, v in zip(t1, t2)))
    ff = f if f is not None else fn1.f
    return from_breakpoints_and_limits(grid, triples, f=ff, merge=True)


class DiscreteFunction:
    """Function on the cyclic group (1/q)Z, given by its values on [0, 1].

    points is the full grid 0, 1/q, ..., 1 and values the corresponding
    list with values[0] == values[-1] (periodicity).  Equality compares
    points and values; the optional f is ignored.
    """

    __slots__ = ("q", "points", "values", "f")

    def __init__(self, q: int, points: tuple[Fraction, ...], values: tuple[Fraction, ...],
                 f: Optional[Fraction] = None):
        self.q = q
        self.points = points
        self.values = values
        self.f = f

    def __call__(self, x) -> Fraction:
        x = _reduce_mod_one(to_rational(x))
        idx = x * self.q
        if idx.denominator != 1:
            raise ConstructionError(f"{x} is not a point of (1/{self.q})Z")
        return self.values[int(idx)]

    def __eq__(self, other):
        if not isinstance(other, DiscreteFunction):
            return NotImplemented
        return self.points == other.points and self.values == other.values

    __hash__ = None

    def __repr__(self):
        return f"<DiscreteFunction on (1/{self.q})Z, f={self.f}>"


def discrete_from_points_and_values(points, values, f=None) -> DiscreteFunction:
    """Discrete function from the full grid of the generated cyclic group."""
    pts = tuple(to_rational(p) for p in points)
    vals = tuple(to_rational(v) for v in values)
    if len(pts) != len(vals):
        raise ConstructionError(f"{len(pts)} points but {len(vals)} values")
    if len(pts) < 2 or pts[0] != 0 or pts[-1] != 1:
        raise ConstructionError("points must run from 0 to 1")
    if any(a >= b for a, b in zip(pts, pts[1:])):
        raise ConstructionError("points must be strictly increasing")
    q = common_denominator(pts)
    if len(pts) != q + 1 or any(p != Fraction(i, q) for i, p in enumerate(pts)):
        raise ConstructionError(
            f"points must be the full grid of (1/{q})Z in [0, 1]")
    if vals[0] != vals[-1]:
        raise ConstructionError("values at 0 and 1 must agree (periodicity)")
    ff = to_rational(f) if f is not None else None
    return DiscreteFunction(q, pts, vals, ff)


# -- random generation ------------------------------------------------------

def random_piecewise_function(xgrid: int = 5, ygrid: int = 5,
                              continuous_proba=Fraction(1),
                              symmetry: bool = True,
                              seed: Optional[int] = None) -> PiecewiseFunction:
    """Random piecewise linear function with breakpoints on (1/xgrid)Z and
    values on (1/ygrid)Z.

    Each grid point is continuous with probability continuous_proba (the
    coin is exact: an integer draw against the fraction).  With symmetry, f
    is drawn on the grid, pi(f) = 1, and the symmetry condition
    pi(x) + pi(f - x) = 1 holds including one-sided limits, enforced by
    mirroring x -> f - x; the midpoint of a mirror pair is pinned to 1/2
    even when 1/2 is off the y-grid.  Deterministic for a fixed seed.
    """
    if xgrid < 1 or ygrid < 1:
        raise ConstructionError("xgrid and ygrid must be at least 1")
    proba = to_rational(continuous_proba)
    if not (0 <= proba <= 1):
        raise ConstructionError("continuous_proba must lie in [0, 1]")
    rng = random.Random(seed)

    def coin() -> bool:
        return rng.randrange(proba.denominator) < proba.numerator

    def yval() -> Fraction:
        return Fraction(rng.randrange(ygrid + 1), ygrid)

    pts = [Fraction(i, xgrid) for i in range(xgrid + 1)]
    triples: list[Optional[Triple]] = [None] * (xgrid + 1)

    f: Optional[Fraction] = None
    if symmetry:
        if xgrid < 2:
            raise ConstructionError(
                "symmetry needs xgrid >= 2 (f must be an interior grid point)")
        f = Fraction(rng.randrange(1, xgrid), xgrid)

    def assign(i: int, triple: Triple):
        triples[i] = triple
        if i == 0:
            triples[xgrid] = triple

    # origin first: pi(0) = 0, limits free unless the continuity coin says so
    if coin():
        assign(0, (Fraction(0), Fraction(0), Fraction(0)))
    else:
        assign(0, (Fraction(0), yval(), yval()))

    if symmetry:
        fi = int(f * xgrid)
        for i in range(xgrid):
            j = (fi - i) % xgrid  # mirror grid index of x_i
            if triples[i] is not None:
                if triples[j] is None:
                    v, r, l = triples[i]
                    assign(j, (1 - v, 1 - l, 1 - r))
                continue
            if j == i:
                half = Fraction(1, 2)
                if coin():
                    assign(i, (half, half, half))
                else:
                    left = yval()
                    assign(i, (half, 1 - left, left))
            else:
                if coin():
                    v = yval()
                    assign(i, (v, v, v))
                else:
                    assign(i, (yval(), yval(), yval()))
                v, r, l = triples[i]
                assign(j, (1 - v, 1 - l, 1 - r))
    else:
        for i in range(1, xgrid):
            if coin():
                v = yval()
                assign(i, (v, v, v))
            else:
                assign(i, (yval(), yval(), yval()))

    return from_breakpoints_and_limits(pts, triples, f=f, merge=True)
