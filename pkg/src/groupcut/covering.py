"""Connected components of covered intervals.

A two-dimensional additive face forces every effective perturbation to be
affine, with one common slope, on the interiors of its three projections
(closed projections when the function is continuous); those intervals are
directly covered and belong to one connected component.  A one-dimensional
additive face connects its two proper projections through a translation
(vertical or horizontal edge) or a reflection (diagonal edge): whenever a
subinterval of one projection is covered, its image becomes covered in the
same component.  Phase one collects the direct components and merges any
two whose interiors meet; phase two propagates through edges to a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .complex2d import (AdditiveFaceSet, Face,
                         generate_maximal_additive_faces)
from .errors import InternalConsistencyError, UnsupportedCaseError
from .pwl import PiecewiseFunction

Interval = tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)

_MAX_ROUNDS = 10_000


@dataclass(frozen=True)
class EdgeMove:
    """Log record of one phase-two propagation step."""

    face: Face
    kind: str  # translation | reflection
    source: Interval
    moved: Interval


@dataclass(frozen=True)
class CoveredComponentSet:
    """Connected covered components, each a union of disjoint intervals.

    Interval tuples are interpreted as open intervals for discontinuous
    functions and closed ones for continuous functions (closed flag).
    """

    components: tuple[tuple[Interval, ...], ...]
    uncovered: tuple[Interval, ...]
    edges_used: tuple[EdgeMove, ...]
    closed: bool

    @property
    def is_fully_covered(self) -> bool:
        return not self.uncovered

    def all_intervals(self) -> list[Interval]:
        return [iv for comp in self.components for iv in comp]

    def component_of(self, x: Fraction) -> Optional[int]:
        """Index of the component whose interior contains x."""
        for i, comp in enumerate(self.components):
            for lo, hi in comp:
                if lo < x < hi:
                    return i
        return None


def _add_interval(intervals: list[Interval], new: Interval, closed: bool) -> list[Interval]:
    lo, hi = new
    if lo >= hi:
        return intervals
    out = []
    for a, b in intervals:
        joins = (b >= lo and a <= hi) if closed else (b > lo and a < hi)
        if joins:
            lo, hi = min(lo, a), max(hi, b)
        else:
            out.append((a, b))
    out.append((lo, hi))
    out.sort()
    return out


def _interiors_overlap(c1: list[Interval], c2: list[Interval]) -> bool:
    return any(a < d and c < b for a, b in c1 for c, d in c2)


def _merge_overlapping(comps: list[list[Interval]], closed: bool) -> list[list[Interval]]:
    changed = True
    while changed:
        changed = False
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                if _interiors_overlap(comps[i], comps[j]):
                    merged = comps[i]
                    for iv in comps[j]:
                        merged = _add_interval(merged, iv, closed)
                    comps[i] = merged
                    del comps[j]
                    changed = True
                    break
            if changed:
                break
    return sorted(comps, key=lambda c: c[0])


def _covered_subset(comp: list[Interval], piece: Interval) -> bool:
    return any(a <= piece[0] and piece[1] <= b for a, b in comp)


def directly_covered_components(fn: PiecewiseFunction,
                                additive: AdditiveFaceSet) -> CoveredComponentSet:
    """Phase one: one component per two-dimensional additive face (its three
    projections, the third reduced mod 1), merged until no two components
    have overlapping interiors."""
    closed = fn.is_continuous
    comps: list[list[Interval]] = []
    for face in (f for f in additive.faces if f.dimension == 2):
        comp: list[Interval] = []
        for iv in (face.proj1, face.proj2, face.proj3_mod_1()):
            comp = _add_interval(comp, iv, closed)
        comps.append(comp)
    comps = _merge_overlapping(comps, closed)
    return _finalize(comps, (), closed)


def _edge_maps(edge: Face):
    """Propagation maps of an additive edge: (source interval, image
    interval, pointwise map, kind) for both directions."""
    if edge.edge_kind == "vertical" or edge.edge_kind == "horizontal":
        src = edge.proj2 if edge.edge_kind == "vertical" else edge.proj1
        dst = edge.proj3_mod_1()
        shift = dst[0] - src[0]

        def fwd(u, s=shift):
            return u + s

        def bwd(u, s=shift):
            return u - s

        return [(src, dst, fwd, "translation"), (dst, src, bwd, "translation")]
    r = edge.proj3[0]

    def refl(u, r=r):
        return r - u

    return [(edge.proj1, edge.proj2, refl, "reflection"),
            (edge.proj2, edge.proj1, refl, "reflection")]


def _map_interval(piece: Interval, f: Callable) -> Interval:
    a, b = f(piece[0]), f(piece[1])
    return (a, b) if a <= b else (b, a)


def _pieces_in(comp: list[Interval], window: Interval) -> list[Interval]:
    out = []
    for a, b in comp:
        lo, hi = max(a, window[0]), min(b, window[1])
        if lo < hi:
            out.append((lo, hi))
    return out


def generate_covered_components(fn: PiecewiseFunction,
                                additive: Optional[AdditiveFaceSet] = None) -> CoveredComponentSet:
    """Phase one plus phase two: propagate covering through one-dimensional
    additive faces until no further change.

    The function must be at least one-sided continuous at the origin; a
    two-sided discontinuity there is rejected as unsupported.
    """
    value0, right0, left0 = fn.limits[0]
    if right0 != value0 and left0 != value0:
        raise UnsupportedCaseError(
            "two-sided discontinuity at the origin is not supported by the "
            "covered-interval propagation")
    if additive is None:
        # maximal faces suffice: a subface of an additive face has all its
        # projections nested in the container's, so it can neither extend
        # nor merge components
        additive = generate_maximal_additive_faces(fn)
    closed = fn.is_continuous

    phase1 = directly_covered_components(fn, additive)
    comps = [list(c) for c in phase1.components]
    edges = sorted((f for f in additive.faces if f.dimension == 1),
                   key=lambda f: f.key())
    moves: list[EdgeMove] = []

    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        if rounds > _MAX_ROUNDS:
            raise InternalConsistencyError(
                "covered-component propagation did not reach a fixpoint")
        for edge in edges:
            for src, dst, mapf, kind in _edge_maps(edge):
                for comp in comps:
                    for piece in _pieces_in(comp, src):
                        img = _map_interval(piece, mapf)
                        if _covered_subset(comp, img):
                            continue
                        comp[:] = _add_interval(comp, img, closed)
                        moves.append(EdgeMove(edge, kind, piece, img))
                        changed = True
            if changed:
                break
        if changed:
            comps = [list(c) for c in
                     _merge_overlapping([list(c) for c in comps], closed)]

    comps = _merge_overlapping([list(c) for c in comps], closed)
    return _finalize(comps, tuple(moves), closed)


def _finalize(comps: list[list[Interval]], moves, closed: bool) -> CoveredComponentSet:
    covered: list[Interval] = []
    for comp in comps:
        for iv in comp:
            covered = _add_interval(covered, iv, True)  # closures for the complement
    uncovered = []
    prev = ZERO
    for a, b in sorted(covered):
        if prev < a:
            uncovered.append((prev, a))
        prev = max(prev, b)
    if prev < ONE:
        uncovered.append((prev, ONE))
    return CoveredComponentSet(
        components=tuple(tuple(c) for c in comps),
        uncovered=tuple(uncovered),
        edges_used=tuple(moves),
        closed=closed,
    )


def uncovered_intervals(fn: PiecewiseFunction) -> list[Interval]:
    """Open intervals in the complement of the closure of the covered set."""
    return list(generate_covered_components(fn).uncovered)
