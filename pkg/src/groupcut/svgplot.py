"""Deterministic SVG diagrams.

Function graphs with one color per slope value and open/closed markers at
discontinuities; the two-dimensional diagram of the additivity complex with
colored slack cones at the vertices (green = zero, red = negative); the
additive-faces diagram with gray projection shadows; step frames of the
covered-component computation; and perturbation plots.

Conventions: the x-axis runs along the top border, the y-axis down the left
border, and the (x+y)-axis is a ruler along the bottom border (values in
[0, 1]) continuing down the right border (values in [1, 2]).  Output is
plain SVG 1.1 text, byte-for-byte reproducible for equal input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .complex2d import (AdditiveFaceSet, _convex_hull,
                        generate_additive_faces,
                        generate_maximal_additive_faces,
                        scan_vertex_slacks)
from .covering import generate_covered_components
from .pwl import PiecewiseFunction

ROLE_COLORS = {
    "function": "#1f5fbf",
    "additive": "#2ca02c",
    "violated": "#d62728",
    "shadow": "#b0b0b0",
    "grid": "#888888",
    "highlight": "#ff9900",
}

SLOPE_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)

COMPONENT_PALETTE = (
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#8c564b", "#e377c2",
)


@dataclass(frozen=True)
class DiagramSpec:
    """Rendering parameters shared by the diagram builders."""

    kind: str = "function"
    size: int = 600
    palette: tuple[str, ...] = SLOPE_PALETTE
    role_colors: dict = field(default_factory=lambda: dict(ROLE_COLORS))


def _fmt(x) -> str:
    return f"{float(x):.4f}"


def _slope_colors(fn: PiecewiseFunction, palette) -> dict:
    slopes = sorted(set(fn.interval_slopes()))
    return {s: palette[i % len(palette)] for i, s in enumerate(slopes)}


class _Doc:
    def __init__(self, width, height):
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(height)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
        ]

    def add(self, element: str):
        self.parts.append(element + "\n")

    def line(self, x1, y1, x2, y2, color, width=1.0, dash=None):
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.add(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
                 f'y2="{_fmt(y2)}" stroke="{color}" stroke-width="{_fmt(width)}"{d}/>')

    def circle(self, cx, cy, r, color, fill=True):
        style = (f'fill="{color}"' if fill
                 else f'fill="white" stroke="{color}" stroke-width="1.2"')
        self.add(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" {style}/>')

    def polygon(self, pts, color, opacity=1.0, stroke=None):
        d = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        s = f' stroke="{stroke}" stroke-width="0.8"' if stroke else ""
        self.add(f'<polygon points="{d}" fill="{color}" '
                 f'fill-opacity="{_fmt(opacity)}"{s}/>')

    def rect(self, x, y, w, h, color, opacity=1.0):
        self.add(f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" '
                 f'height="{_fmt(h)}" fill="{color}" fill-opacity="{_fmt(opacity)}"/>')

    def text(self, x, y, s, size=10, color="#333333"):
        self.add(f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(size)}" '
                 f'fill="{color}" font-family="monospace">{s}</text>')

    def finish(self) -> str:
        return "".join(self.parts) + "</svg>\n"


def _graph_segments(fn: PiecewiseFunction):
    """Per-piece segments ((x1, v1), (x2, v2), slope) and the marker triples."""
    segs = []
    bk, lm = fn.breakpoints, fn.limits
    slopes = fn.interval_slopes()
    for i in range(len(bk) - 1):
        segs.append(((bk[i], lm[i][1]), (bk[i + 1], lm[i + 1][2]), slopes[i]))
    return segs


def plot_function(fn: PiecewiseFunction, colored_slopes: bool = True,
                  spec: Optional[DiagramSpec] = None) -> str:
    """Graph over [0, 1] with a color per slope value and open/closed
    endpoint markers at discontinuities."""
    spec = spec or DiagramSpec(kind="function")
    S = spec.size
    pad = S * 0.08
    vs = [v for t in fn.limits for v in t]
    vmax = max(max(vs), 1)
    vmin = min(min(vs), 0)

    def X(x):
        return pad + float(x) * (S - 2 * pad)

    def Y(v):
        rng = float(vmax - vmin)
        return S - pad - (float(v - vmin) / rng) * (S - 2 * pad)

    doc = _Doc(S, S)
    doc.rect(0, 0, S, S, "#ffffff")
    doc.line(X(0), Y(0), X(1), Y(0), "#cccccc")
    doc.line(X(0), Y(vmax), X(0), Y(vmin), "#cccccc")
    colors = _slope_colors(fn, spec.palette)
    for (x1, v1), (x2, v2), slope in _graph_segments(fn):
        color = colors[slope] if colored_slopes else ROLE_COLORS["function"]
        doc.line(X(x1), Y(v1), X(x2), Y(v2), color, width=2.0)
    r = max(2.5, S * 0.006)
    for x, (v, right, left) in zip(fn.breakpoints, fn.limits):
        if left != v:
            doc.circle(X(x), Y(left), r, "#555555", fill=False)
        if right != v:
            doc.circle(X(x), Y(right), r, "#555555", fill=False)
        filled = (left != v) or (right != v)
        if filled:
            doc.circle(X(x), Y(v), r, "#222222", fill=True)
    return doc.finish()


_RAY_DIRS = {
    (1, 0, 1): ((1, 0),),
    (-1, 0, -1): ((-1, 0),),
    (0, 1, 1): ((0, 1),),
    (0, -1, -1): ((0, -1),),
    (1, -1, 0): ((1, -1),),
    (-1, 1, 0): ((-1, 1),),
    (1, 1, 1): ((1, 0), (0, 1)),
    (-1, -1, -1): ((-1, 0), (0, -1)),
    (1, -1, -1): ((0, -1), (1, -1)),
    (1, -1, 1): ((1, -1), (1, 0)),
    (-1, 1, 1): ((0, 1), (-1, 1)),
    (-1, 1, -1): ((-1, 1), (-1, 0)),
}


class _Square:
    """Unit square with border strips for the three axes and the function."""

    def __init__(self, fn, spec):
        self.fn = fn
        self.spec = spec
        self.M = spec.size * 0.16
        self.S = spec.size
        self.doc = _Doc(spec.size + self.M, spec.size + self.M)
        self.doc.rect(0, 0, spec.size + self.M, spec.size + self.M, "#ffffff")

    def X(self, x):
        return self.M + float(x) * (self.S - self.M)

    def Y(self, y):
        return self.M + float(y) * (self.S - self.M)

    def draw_grid(self):
        fn, doc = self.fn, self.doc
        for b in fn.breakpoints:
            doc.line(self.X(b), self.Y(0), self.X(b), self.Y(1),
                     ROLE_COLORS["grid"], 0.6)
            doc.line(self.X(0), self.Y(b), self.X(1), self.Y(b),
                     ROLE_COLORS["grid"], 0.6)
        diagonals = sorted({b for b in fn.breakpoints}
                           | {b + 1 for b in fn.breakpoints[1:]})
        for c in diagonals:
            lo = max(0, float(c) - 1)
            hi = min(1, float(c))
            doc.line(self.X(lo), self.Y(float(c) - lo),
                     self.X(hi), self.Y(float(c) - hi),
                     ROLE_COLORS["grid"], 0.6)

    def draw_border_functions(self):
        fn, doc = self.fn, self.doc
        vs = [v for t in fn.limits for v in t]
        vmax = float(max(max(vs), 1))
        band = self.M * 0.75

        def top_y(v):
            return self.M * 0.9 - (float(v) / vmax) * band * 0.9

        def left_x(v):
            return self.M * 0.9 - (float(v) / vmax) * band * 0.9

        for (x1, v1), (x2, v2), _ in _graph_segments(fn):
            doc.line(self.X(x1), top_y(v1), self.X(x2), top_y(v2),
                     ROLE_COLORS["function"], 1.2)
            doc.line(left_x(v1), self.Y(x1), left_x(v2), self.Y(x2),
                     ROLE_COLORS["function"], 1.2)

    def sum_ruler_rect(self, lo, hi, color, opacity):
        """Shadow on the (x+y)-ruler: bottom border for [0,1], right for [1,2]."""
        doc = self.doc
        thick = self.M * 0.25
        a, b = float(lo), float(hi)
        if b <= 1:
            doc.rect(self.X(a), self.Y(1) + thick * 0.2,
                     self.X(b) - self.X(a), thick, color, opacity)
        else:
            doc.rect(self.X(1) + thick * 0.2, self.Y(a - 1),
                     thick, self.Y(b - 1) - self.Y(a - 1), color, opacity)

    def finish(self):
        return self.doc.finish()


def plot_2d_diagram_with_cones(fn: PiecewiseFunction,
                               spec: Optional[DiagramSpec] = None) -> str:
    """Complex diagram with the slack sign at every vertex: green dots or
    cones where the (limit) slack is zero, red where it is negative."""
    spec = spec or DiagramSpec(kind="2d_cones")
    sq = _Square(fn, spec)
    sq.draw_grid()
    sq.draw_border_functions()
    _, neg, zero, _, _ = scan_vertex_slacks(fn, upper_triangle=False,
                                            with_limits=not fn.is_continuous)
    radius = (sq.S - sq.M) * 0.035
    dot = max(2.2, spec.size * 0.005)

    def draw(pt, sides, color):
        px, py = sq.X(pt[0]), sq.Y(pt[1])
        if sides == (0, 0, 0):
            sq.doc.circle(px, py, dot, color)
            return
        dirs = _RAY_DIRS[sides]
        if len(dirs) == 1:
            dx, dy = dirs[0]
            n = (dx * dx + dy * dy) ** 0.5
            sq.doc.line(px, py, px + radius * dx / n, py + radius * dy / n,
                        color, 2.0)
        else:
            pts = [(px, py)]
            for dx, dy in dirs:
                n = (dx * dx + dy * dy) ** 0.5
                pts.append((px + radius * dx / n, py + radius * dy / n))
            sq.doc.polygon(pts, color, opacity=0.65)

    for pt, sides in sorted(zero):
        draw(pt, sides, ROLE_COLORS["additive"])
    for pt, sides, _slack in sorted(neg):
        draw(pt, sides, ROLE_COLORS["violated"])
    return sq.finish()


def plot_2d_diagram(fn: PiecewiseFunction,
                    spec: Optional[DiagramSpec] = None,
                    additive: Optional[AdditiveFaceSet] = None) -> str:
    """Maximal additive faces shaded green; the projections of the
    two-dimensional ones drawn as gray shadows on the three axes."""
    spec = spec or DiagramSpec(kind="2d_additive_faces")
    sq = _Square(fn, spec)
    sq.draw_grid()
    sq.draw_border_functions()
    if additive is None:
        additive = generate_maximal_additive_faces(fn)
    shadow = ROLE_COLORS["shadow"]
    for face in additive.maximal_faces():
        if face.dimension == 2:
            sq.doc.rect(sq.X(face.proj1[0]), sq.M * 0.2,
                        sq.X(face.proj1[1]) - sq.X(face.proj1[0]),
                        sq.M * 0.2, shadow, 0.8)
            sq.doc.rect(sq.M * 0.2, sq.Y(face.proj2[0]),
                        sq.M * 0.2,
                        sq.Y(face.proj2[1]) - sq.Y(face.proj2[0]), shadow, 0.8)
            sq.sum_ruler_rect(face.proj3[0], face.proj3[1], shadow, 0.8)
    green = ROLE_COLORS["additive"]
    for face in additive.maximal_faces():
        pts = [(sq.X(x), sq.Y(y)) for x, y in _convex_hull(face.vertices)]
        if face.dimension == 2:
            sq.doc.polygon(pts, green, opacity=0.45, stroke=green)
        elif face.dimension == 1:
            (x1, y1), (x2, y2) = pts[0], pts[-1]
            sq.doc.line(x1, y1, x2, y2, green, 2.4)
        else:
            sq.doc.circle(pts[0][0], pts[0][1], max(2.2, spec.size * 0.005), green)
    return sq.finish()


def _covered_bars(sq: _Square, components: Sequence[Sequence[tuple]], thick):
    for ci, comp in enumerate(components):
        color = COMPONENT_PALETTE[ci % len(COMPONENT_PALETTE)]
        for lo, hi in comp:
            sq.doc.rect(sq.X(lo), sq.M * 0.55, sq.X(hi) - sq.X(lo), thick,
                        color, 0.9)


def covered_steps_frames(fn: PiecewiseFunction,
                         spec: Optional[DiagramSpec] = None) -> list[str]:
    """One frame per propagation step: the additive-face diagram, the
    covered intervals so far as colored bars on the x-axis strip, and the
    edge used in the step highlighted."""
    spec = spec or DiagramSpec(kind="covered_steps")
    additive = generate_maximal_additive_faces(fn)
    from .covering import directly_covered_components

    final = generate_covered_components(fn, additive)
    phase1 = directly_covered_components(fn, additive)
    frames = []

    def frame(components, active_edge, moved):
        sq = _Square(fn, spec)
        sq.draw_grid()
        green = ROLE_COLORS["additive"]
        for face in additive.faces:
            if face.dimension == 2:
                pts = [(sq.X(x), sq.Y(y)) for x, y in _convex_hull(face.vertices)]
                sq.doc.polygon(pts, green, opacity=0.25)
        _covered_bars(sq, components, sq.M * 0.25)
        if active_edge is not None:
            (x1, y1) = active_edge.vertices[0]
            (x2, y2) = active_edge.vertices[-1]
            sq.doc.line(sq.X(x1), sq.Y(y1), sq.X(x2), sq.Y(y2),
                        ROLE_COLORS["highlight"], 3.0)
        if moved is not None:
            sq.doc.rect(sq.X(moved[0]), sq.M * 0.2,
                        sq.X(moved[1]) - sq.X(moved[0]), sq.M * 0.25,
                        ROLE_COLORS["highlight"], 0.9)
        return sq.finish()

    # replay: phase-one result, then each edge move applied in order
    state = [list(c) for c in phase1.components]
    frames.append(frame(state, None, None))
    from .covering import _add_interval, _merge_overlapping

    for mv in final.edges_used:
        target = None
        for comp in state:
            if any(a <= mv.source[0] and mv.source[1] <= b for a, b in comp):
                target = comp
                break
        if target is None:
            state.append([mv.source])
            target = state[-1]
        target[:] = _add_interval(target, mv.moved, final.closed)
        state = [list(c) for c in
                 _merge_overlapping([list(c) for c in state], final.closed)]
        frames.append(frame(state, mv.face, mv.moved))
    return frames


def plot_perturbation(fn: PiecewiseFunction, pert: PiecewiseFunction,
                      eps: Fraction, spec: Optional[DiagramSpec] = None) -> str:
    """The function (black), the two perturbed functions (blue and red) and
    the scaled perturbation itself (magenta)."""
    from .pwl import linear_combination

    spec = spec or DiagramSpec(kind="perturbation")
    S = spec.size
    pad = S * 0.08
    plus = linear_combination(1, fn, eps, pert, f=fn.f)
    minus = linear_combination(1, fn, -eps, pert, f=fn.f)
    scaled = linear_combination(eps, pert, 0, pert, f=None)
    curves = [(fn, "#000000", 2.2), (plus, ROLE_COLORS["function"], 1.4),
              (minus, ROLE_COLORS["violated"], 1.4), (scaled, "#cc00cc", 1.4)]
    vs = [float(v) for g, _, _ in curves for t in g.limits for v in t]
    vmax, vmin = max(vs + [1.0]), min(vs + [0.0])

    def X(x):
        return pad + float(x) * (S - 2 * pad)

    def Y(v):
        return S - pad - ((float(v) - vmin) / (vmax - vmin)) * (S - 2 * pad)

    doc = _Doc(S, S)
    doc.rect(0, 0, S, S, "#ffffff")
    doc.line(X(0), Y(0), X(1), Y(0), "#cccccc")
    for g, color, w in curves:
        for (x1, v1), (x2, v2), _ in _graph_segments(g):
            doc.line(X(x1), Y(v1), X(x2), Y(v2), color, w)
    return doc.finish()
