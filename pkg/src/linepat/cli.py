"""Command-line entry point: ``linepat {gen,census,verify,walk,origin,render}``.

Exit status is 0 on success, 1 when a verification claim fails and 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import __version__
from .cellwalk import DSide, WalkError, origin_region, walk_face
from .geometry import EuclidPoint
from .lattice import (
    LatticeSpec,
    PointSet,
    fibonacci_triangle,
    generate,
    grid_spec,
    lattice_in_polygon,
    pentagon_counterexample,
    random_points,
)
from .pointio import format_points, parse_point, parse_rational, read_points
from .subdivision import build, census, two_sided_unbounded_count
from .svg import RenderConfig, parse_shade, parse_viewbox, render_points
from .verify import CLAIMS, DEFAULT_SEED, VerifyConfig, format_json, format_text, run_claims

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_lattice(text: str) -> LatticeSpec:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise UsageError(f"lattice needs a,b,dx,dy,N,M; got {text!r}")
    try:
        a, b, dx, dy = (parse_rational(p) for p in parts[:4])
        n, m = int(parts[4]), int(parts[5])
        return LatticeSpec(a, b, dx, dy, n, m)
    except ValueError as exc:
        raise UsageError(f"bad lattice {text!r}: {exc}") from None


def _euclid(text: str) -> EuclidPoint:
    p = text.split(",")
    if len(p) != 2:
        raise UsageError(f"expected x,y, got {text!r}")
    return EuclidPoint(parse_rational(p[0]), parse_rational(p[1]))


def _add_input(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("input", nargs="?", help="point-set file ('-' for stdin)")
    else:
        p.set_defaults(input=None)
    p.add_argument("--input", dest="input_opt", metavar="PATH", help="point-set file")
    p.add_argument("--lattice", metavar="a,b,dx,dy,N,M", help="rectangular lattice instead of a file")
    p.add_argument("--grid", type=int, metavar="N", help="square grid -N..N instead of a file")


def _read_input(args, required: bool = True) -> Optional[PointSet]:
    sources = [s for s in (args.input, args.input_opt, args.lattice, args.grid) if s is not None]
    if len(sources) > 1:
        raise UsageError("give exactly one input source")
    if not sources:
        if required:
            raise UsageError("no input given")
        return None
    if args.lattice is not None:
        return generate(parse_lattice(args.lattice))
    if args.grid is not None:
        try:
            return generate(grid_spec(args.grid))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    path = args.input if args.input is not None else args.input_opt
    if path == "-":
        return PointSet(tuple(read_points(sys.stdin)), "stdin")
    with open(path, encoding="utf-8") as fh:
        return PointSet(tuple(read_points(fh)), path)


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    kind = args.kind
    params = args.params
    try:
        if kind == "lattice":
            if len(params) != 1:
                raise UsageError("gen lattice a,b,dx,dy,N,M")
            pts = generate(parse_lattice(params[0]))
        elif kind == "grid":
            if len(params) != 1:
                raise UsageError("gen grid N")
            pts = generate(grid_spec(int(params[0])))
        elif kind == "pentagon":
            if params:
                raise UsageError("gen pentagon takes no parameters")
            pts = pentagon_counterexample()
        elif kind == "fibtriangle":
            if len(params) != 1:
                raise UsageError("gen fibtriangle N")
            pts = fibonacci_triangle(int(params[0]))
        elif kind == "polygon":
            if not params:
                raise UsageError("gen polygon x,y [x,y ...]")
            pts = lattice_in_polygon([_euclid(p) for p in params])
        else:
            if len(params) != 1:
                raise UsageError("gen random COUNT [--seed S]")
            count = int(params[0])
            if count < 0:
                raise UsageError("count must be nonnegative")
            pts = random_points(count, args.seed, args.bound, args.max_den)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(format_points(pts), args.output)
    return EXIT_OK


def cmd_census(args) -> int:
    pts = _read_input(args)
    if len(pts):
        sub = build(pts)
        hist = census(sub)
        bounded, unbounded = len(sub.bounded_faces()), len(sub.unbounded_faces())
        two_sided = two_sided_unbounded_count(sub)
    else:
        hist, bounded, unbounded, two_sided = {}, 0, 0, 0
    if args.format == "json":
        doc = {"lines": len(pts), "bounded_faces": bounded, "unbounded_faces": unbounded,
               "two_sided_unbounded": two_sided, "census": {str(k): v for k, v in hist.items()}}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    out = [f"lines: {len(pts)}", f"bounded faces: {bounded}", f"unbounded faces: {unbounded}",
           f"two-sided unbounded faces: {two_sided}"]
    out += [f"{k}-gons: {v}" for k, v in hist.items()]
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    claims = list(CLAIMS) if "all" in args.claims else list(dict.fromkeys(args.claims))
    source = _read_input(args, required=False)
    if source is not None:
        fixed = [c for c in claims if c in ("counterexamples", "coprime")]
        if fixed:
            raise UsageError(f"claim {fixed[0]!r} takes no input")
    if args.grid_max < 1:
        raise UsageError("--grid-max must be at least 1")
    cfg = VerifyConfig(seed=args.seed, grid_max=args.grid_max)
    reports = run_claims(claims, cfg, source)
    fmt = format_json if args.format == "json" else format_text
    sys.stdout.write(fmt(reports, args.seed, args.timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_walk(args) -> int:
    pts = _read_input(args)
    try:
        p1, p2 = parse_point(args.start), parse_point(args.end)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for p in (p1, p2):
        if p not in pts:
            raise UsageError(f"{p} is not in the point set")
    try:
        face = walk_face(pts, p1, p2, DSide(args.d))
    except WalkError as exc:
        raise UsageError(f"not a pair of consecutive sides: {exc}") from None
    if face is None:
        sys.stdout.write("UNBOUNDED\n")
    else:
        sys.stdout.write(face.format() + "\n")
    return EXIT_OK


def cmd_origin(args) -> int:
    pts = _read_input(args)
    if not len(pts):
        raise UsageError("empty point set")
    region = origin_region(pts)
    out = [f"bounded: {'yes' if region.bounded else 'no'}", f"case: {region.case}"]
    out += [f"O_{k}: {p}" for k, p in enumerate(region.sides, start=1)]
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    pts = _read_input(args)
    try:
        kwargs = {"width": args.width, "labels": args.labels}
        if args.viewbox:
            kwargs["viewbox"] = parse_viewbox(args.viewbox)
        if args.shade:
            kwargs["shades"] = dict(parse_shade(s) for s in args.shade)
            kwargs["highlight"] = None
        cfg = RenderConfig(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(render_points(pts, cfg), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linepat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a point set")
    g.add_argument("kind", choices=["lattice", "grid", "pentagon", "fibtriangle", "polygon", "random"])
    g.add_argument("params", nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--bound", type=int, default=3, help="random: coordinate bound")
    g.add_argument("--max-den", type=int, default=3, help="random: largest denominator")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("census", help="side-count histogram of the bounded cells")
    _add_input(c)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="check the claims, exit 1 on any failure")
    v.add_argument("claims", nargs="+", choices=["all", *CLAIMS])
    _add_input(v, positional=False)
    v.add_argument("--grid-max", type=int, default=4)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--timing", action="store_true", help="include run times (not reproducible)")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("walk", help="walk one cell from two consecutive sides")
    _add_input(w)
    w.add_argument("--from", dest="start", required=True, metavar="A,B")
    w.add_argument("--to", dest="end", required=True, metavar="A,B")
    w.add_argument("--d", choices=["L", "R"], required=True)
    w.set_defaults(func=cmd_walk)

    o = sub.add_parser("origin", help="sides of the cell containing the origin")
    _add_input(o)
    o.set_defaults(func=cmd_origin)

    r = sub.add_parser("render", help="SVG figure")
    _add_input(r)
    r.add_argument("--shade", action="append", metavar="K[:COLOR]",
                   help="fill K-sided cells; repeatable, replaces the default palette")
    r.add_argument("--viewbox", metavar="xmin,ymin,xmax,ymax")
    r.add_argument("--width", type=int, default=600)
    r.add_argument("--labels", action="store_true")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)
    return parser


_NEG_LITERAL = re.compile(r"-\d[\d/,+-]*")


def _protect_negative_literals(argv: list[str]) -> list[str]:
    # argparse reads "-4,-4" as an option; a leading space keeps it a value
    return [f" {t}" if _NEG_LITERAL.fullmatch(t) else t for t in argv]


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_protect_negative_literals(argv))
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"linepat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
