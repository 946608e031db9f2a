"""Command-line interface.

Inputs are compendium names (with --param name=p/q constructor arguments)
or paths to JSON function files.  Rationals on the command line are p/q
strings; decimals are rejected.  Verdict verbs exit 0 on the positive
verdict, 1 on the negative one and 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .compendium import REGISTRY, construct
from .complex2d import (delta_pi, generate_additive_faces,
                        generate_maximal_additive_faces, merit_index)
from .covering import generate_covered_components
from .errors import GroupCutError
from .extremality import extremality_test, extremality_test_discrete
from .jsonio import (components_to_dict, dumps_function,
                     extremality_report_to_dict, face_to_dict, load_function,
                     minimality_report_to_dict)
from .minimality import minimality_test, minimality_test_discrete
from .pwl import DiscreteFunction, random_piecewise_function
from .rational import parse_rational
from .svgplot import (DiagramSpec, covered_steps_frames, plot_2d_diagram,
                      plot_2d_diagram_with_cones, plot_function,
                      plot_perturbation)
from .transforms import (automorphism, interpolate_to_infinite_group,
                         multiplicative_homomorphism, restrict_to_finite_group)


def _out_dir() -> Path:
    return Path(os.environ.get("GROUPCUT_OUT_DIR", "."))


def _load(args):
    """Input resolution: an existing path or *.json is a function file,
    anything else a compendium name with --param arguments."""
    name = args.input
    if name.endswith(".json") or os.path.exists(name):
        return load_function(name)
    params = {}
    for item in args.param or []:
        key, _, raw = item.partition("=")
        if not raw:
            raise GroupCutError(f"--param needs name=p/q, got {item!r}")
        try:
            params[key] = parse_rational(raw)
        except ValueError:
            if raw in ("true", "false"):
                params[key] = raw == "true"
            else:
                params[key] = int(raw)
    if getattr(args, "f", None):
        params["f"] = parse_rational(args.f)
    return construct(name, **params)


def _emit(doc: str, args, default_name: str) -> Path:
    out = Path(args.out) if args.out else _out_dir() / default_name
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(doc, encoding="utf-8")
    print(f"wrote {out}")
    return out


def _minimality_lines(rep) -> list[str]:
    lines = []
    kinds = {v.kind for v in rep.violations}
    if "value-at-0" in kinds:
        lines.append("pi(0) != 0")
    else:
        lines.append("pi(0) = 0")
    if rep.is_minimal:
        lines.append("pi is subadditive.")
        lines.append("pi is symmetric.")
        lines.append("Thus pi is minimal.")
    else:
        if "range" in kinds:
            lines.append("pi is not minimal because it does not stay in the "
                         "range of [0, 1].")
        if "subadditivity" in kinds:
            lines.append("pi is not subadditive.")
        if "symmetry" in kinds:
            lines.append("pi is not symmetric.")
        lines.append("Thus pi is NOT minimal.")
    return lines


def cmd_list(args) -> int:
    for name in sorted(REGISTRY):
        e = REGISTRY[name]
        status = "sourced" if e.sourced else "UNSOURCED"
        params = ", ".join(f"{k}={v}" for k, v in e.parameters)
        print(f"{name:30s} [{status}] ({params})")
        print(f"{'':30s}   {e.summary}")
        print(f"{'':30s}   {e.citation}")
    return 0


def cmd_show(args) -> int:
    fn = _load(args)
    if args.json:
        print(dumps_function(fn), end="")
        return 0
    if isinstance(fn, DiscreteFunction):
        print(f"discrete function on (1/{fn.q})Z, f = {fn.f}")
        print("points:", ", ".join(str(p) for p in fn.points))
        print("values:", ", ".join(str(v) for v in fn.values))
        return 0
    print(f"piecewise function, f = {fn.f}, "
          f"{'continuous' if fn.is_continuous else 'discontinuous'}")
    print("breakpoints:", ", ".join(str(b) for b in fn.breakpoints))
    print("limits:     ", ", ".join(f"({v}, {r}, {l})" for v, r, l in fn.limits))
    print("slopes:     ", ", ".join(str(s) for s in fn.interval_slopes()))
    return 0


def cmd_eval(args) -> int:
    fn = _load(args)
    x = parse_rational(args.x)
    print(fn(x))
    return 0


def cmd_delta(args) -> int:
    fn = _load(args)
    print(delta_pi(fn, parse_rational(args.x), parse_rational(args.y)))
    return 0


def cmd_minimality(args) -> int:
    fn = _load(args)
    if isinstance(fn, DiscreteFunction):
        rep = minimality_test_discrete(fn, collect_all=not args.fail_fast)
    else:
        rep = minimality_test(fn, collect_all=not args.fail_fast)
    if args.json:
        print(json.dumps(minimality_report_to_dict(rep), indent=2))
    else:
        for line in _minimality_lines(rep):
            print(line)
        for v in rep.violations:
            print("  violation:", v.describe())
    return 0 if rep.is_minimal else 1


def cmd_extremality(args) -> int:
    fn = _load(args)
    if isinstance(fn, DiscreteFunction):
        rep = extremality_test_discrete(fn)
    else:
        rep = extremality_test(fn)
    if args.json:
        print(json.dumps(extremality_report_to_dict(rep), indent=2))
        return 0 if rep.is_extreme else 1
    for line in _minimality_lines(rep.minimality):
        print(line)
    if rep.is_minimal and rep.covered is not None:
        if rep.covered.is_fully_covered:
            print(f"All intervals are covered (or connected-to-covered). "
                  f"{len(rep.covered.components)} components.")
        else:
            ivs = ", ".join(f"({a}, {b})" for a, b in rep.covered.uncovered)
            print(f"Uncovered intervals: [{ivs}]")
    if rep.kernel_dimension is not None:
        print(f"Finite dimensional test: Solution space has dimension "
              f"{rep.kernel_dimension}")
    if rep.is_extreme:
        print("Thus the function is extreme.")
    else:
        print("Thus the function is NOT extreme.")
    return 0 if rep.is_extreme else 1


def cmd_covered(args) -> int:
    fn = _load(args)
    cc = generate_covered_components(fn)
    if args.json:
        print(json.dumps(components_to_dict(cc), indent=2))
    else:
        for i, comp in enumerate(cc.components):
            ivs = " u ".join(f"[{a}, {b}]" if cc.closed else f"({a}, {b})"
                             for a, b in comp)
            print(f"component {i + 1}: {ivs}")
        if cc.uncovered:
            ivs = ", ".join(f"({a}, {b})" for a, b in cc.uncovered)
            print(f"uncovered: {ivs}")
        else:
            print("all intervals are covered")
    if args.frames:
        frames = covered_steps_frames(fn)
        outdir = Path(args.frames)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, doc in enumerate(frames):
            (outdir / f"step_{i:03d}.svg").write_text(doc, encoding="utf-8")
        print(f"wrote {len(frames)} frames to {outdir}")
    return 0


def cmd_faces(args) -> int:
    fn = _load(args)
    faces = (generate_maximal_additive_faces(fn) if args.maximal
             else generate_additive_faces(fn))
    if args.json:
        print(json.dumps([face_to_dict(f) for f in faces.faces], indent=2))
    else:
        for f, m in zip(faces.faces, faces.maximal):
            tag = " (maximal)" if m and not args.maximal else ""
            print(f"{f}{tag}")
    return 0


def cmd_merit(args) -> int:
    fn = _load(args)
    print(merit_index(fn))
    return 0


def cmd_restrict(args) -> int:
    fn = _load(args)
    dfn = restrict_to_finite_group(
        fn, oversampling=args.oversampling, order=args.order)
    print(dumps_function(dfn), end="")
    return 0


def cmd_interpolate(args) -> int:
    fn = _load(args)
    if not isinstance(fn, DiscreteFunction):
        raise GroupCutError("interpolate expects a discrete function")
    print(dumps_function(interpolate_to_infinite_group(fn)), end="")
    return 0


def cmd_transform(args) -> int:
    fn = _load(args)
    if args.homomorphism is not None:
        out = multiplicative_homomorphism(fn, args.homomorphism)
    else:
        out = automorphism(fn, args.automorphism)
    print(dumps_function(out), end="")
    return 0


def cmd_random(args) -> int:
    fn = random_piecewise_function(
        xgrid=args.xgrid, ygrid=args.ygrid,
        continuous_proba=parse_rational(args.continuous_proba),
        symmetry=args.symmetry, seed=args.seed)
    print(dumps_function(fn), end="")
    return 0


def cmd_plot(args) -> int:
    fn = _load(args)
    if isinstance(fn, DiscreteFunction):
        fn = interpolate_to_infinite_group(fn)
    spec = DiagramSpec(kind=args.kind, size=args.size)
    if args.kind == "function":
        doc = plot_function(fn, spec=spec)
    elif args.kind == "cones":
        doc = plot_2d_diagram_with_cones(fn, spec=spec)
    elif args.kind == "additive":
        doc = plot_2d_diagram(fn, spec=spec)
    elif args.kind == "perturbation":
        rep = extremality_test(fn)
        if rep.perturbation is None:
            raise GroupCutError("no perturbation available for this function")
        doc = plot_perturbation(fn, rep.perturbation, rep.epsilon, spec=spec)
    else:  # covered
        frames = covered_steps_frames(fn, spec=spec)
        doc = frames[-1]
    _emit(doc, args, f"{args.input.replace('/', '_')}_{args.kind}.svg")
    return 0


def _add_input(p, with_f: bool = True):
    p.add_argument("input", help="compendium name or JSON function file")
    p.add_argument("--param", action="append",
                   help="constructor parameter name=p/q (repeatable)")
    if with_f:
        p.add_argument("--f", help="f parameter as p/q")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="groupcut",
        description="Exact minimality/extremality tools for cut-generating "
                    "functions of the 1-row group relaxation")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="verb", required=True)

    sub.add_parser("list", help="show the compendium registry")

    p = sub.add_parser("show", help="print a function's data")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eval", help="evaluate a function")
    _add_input(p)
    p.add_argument("--x", required=True)

    p = sub.add_parser("delta", help="subadditivity slack at (x, y)")
    _add_input(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("minimality", help="minimality test")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--fail-fast", action="store_true",
                   help="stop at the first violation")

    p = sub.add_parser("extremality", help="extremality test")
    _add_input(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("covered", help="connected covered components")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--frames", help="directory for per-step SVG frames")

    p = sub.add_parser("faces", help="additive faces")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--maximal", action="store_true")

    p = sub.add_parser("merit", help="merit index")
    _add_input(p)

    p = sub.add_parser("restrict", help="restrict to the finite group")
    _add_input(p)
    p.add_argument("--order", type=int)
    p.add_argument("--oversampling", type=int)

    p = sub.add_parser("interpolate", help="interpolate a discrete function")
    _add_input(p, with_f=False)

    p = sub.add_parser("transform", help="group transformations")
    _add_input(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--homomorphism", type=int, metavar="LAM")
    g.add_argument("--automorphism", type=int, nargs="?", const=-1, metavar="LAM")

    p = sub.add_parser("random", help="seeded random function")
    p.add_argument("--xgrid", type=int, default=5)
    p.add_argument("--ygrid", type=int, default=5)
    p.add_argument("--continuous-proba", default="1/3")
    p.add_argument("--symmetry", action=argparse.BooleanOptionalAction,
                   default=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("plot", help="write SVG diagrams")
    _add_input(p)
    p.add_argument("--kind", default="function",
                   choices=["function", "cones", "additive", "covered",
                            "perturbation"])
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--out")

    return ap


_COMMANDS = {
    "list": cmd_list,
    "show": cmd_show,
    "eval": cmd_eval,
    "delta": cmd_delta,
    "minimality": cmd_minimality,
    "extremality": cmd_extremality,
    "covered": cmd_covered,
    "faces": cmd_faces,
    "merit": cmd_merit,
    "restrict": cmd_restrict,
    "interpolate": cmd_interpolate,
    "transform": cmd_transform,
    "random": cmd_random,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except (GroupCutError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
