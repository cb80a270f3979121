"""Executable checks of the 5+gon-free results, with witnesses on failure.

Each check is a pure function of its inputs returning a
:class:`VerificationReport`.  Randomised batches take an explicit seed.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

from .cellwalk import FaceWalk, enumerate_faces, max_equal_run, origin_region
from .geometry import ORIGIN, CoeffPoint, Transform2, apply_transform
from .lattice import (
    LatticeSpec,
    PointSet,
    coprime_count,
    fibonacci_triangle,
    generate,
    grid_spec,
    pentagon_counterexample,
    random_points,
)
from .subdivision import Face, build, census, face_containing, two_sided_unbounded_count

DEFAULT_SEED = 20230801

Source = Union[LatticeSpec, PointSet, Sequence[CoeffPoint]]


@dataclass
class VerificationReport:
    claim_id: str
    passed: bool
    witness: Any = None
    stats: dict = field(default_factory=dict)
    seconds: float = 0.0

    def __post_init__(self) -> None:
        if not self.passed and self.witness is None:
            raise ValueError(f"failed claim {self.claim_id} has no witness")

    def to_dict(self, timing: bool = False) -> dict:
        out = {"claim_id": self.claim_id, "passed": self.passed,
               "witness": self.witness, "stats": self.stats}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _points(source: Source) -> PointSet:
    if isinstance(source, LatticeSpec):
        return generate(source)
    if isinstance(source, PointSet):
        return source
    return PointSet(tuple(source))


def _label(source: Source) -> str:
    if isinstance(source, LatticeSpec):
        return str(source)
    if isinstance(source, PointSet) and source.label:
        return source.label
    return f"points(n={len(_points(source))})"


def _pt(p: CoeffPoint) -> str:
    return f"{p.A},{p.B}"


def _walk_witness(w: FaceWalk) -> dict:
    return {"sides": [_pt(p) for p in w.lines],
            "d": "".join(d.value for d in w.d_values),
            "vertices": [f"{v.x},{v.y}" for v in w.vertices]}


def _face_witness(f: Face) -> dict:
    return {"sides": [_pt(p) for p in f.side_cycle], "side_count": f.side_count,
            "vertices": [f"{v.x},{v.y}" for v in f.vertices]}


def _hist(h: dict) -> dict:
    return {str(k): v for k, v in h.items()}


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.seconds = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_no_5gon(source: Source) -> VerificationReport:
    """Oracle census, walked faces and the origin cell all have at most 4 sides."""
    pts = _points(source)
    claim = f"no5gon/{_label(source)}"
    if len(pts) == 0:
        return VerificationReport(claim, True, stats={"census": {}})
    sub = build(pts)
    hist = census(sub)
    stats = {"census": _hist(hist)}
    big = [f for f in sub.bounded_faces() if f.side_count > 4]
    if big:
        return VerificationReport(claim, False, {"oracle_face": _face_witness(big[0])}, stats)
    walks = enumerate_faces(pts)
    big_walk = [w for w in walks if len(w) > 4]
    if big_walk:
        return VerificationReport(claim, False, {"walked_face": _walk_witness(big_walk[0])}, stats)
    region = origin_region(pts)
    stats["origin_sides"] = len(region.sides)
    if len(region.sides) > 4:
        return VerificationReport(claim, False,
                                  {"origin_region": [_pt(p) for p in region.sides]}, stats)
    return VerificationReport(claim, True, stats=stats)


@_timed
def check_rrl(source: Source) -> VerificationReport:
    """No bounded cell away from the origin has three consecutive equal D values."""
    pts = _points(source)
    claim = f"rrl/{_label(source)}"
    walks = enumerate_faces(pts) if len(pts) >= 2 else []
    stats = {"faces": len(walks)}
    for w in walks:
        if w.contains_origin:
            continue
        run = max_equal_run(w.d_values)
        if run >= 3:
            wit = _walk_witness(w)
            wit["run"] = run
            return VerificationReport(claim, False, wit, stats)
    return VerificationReport(claim, True, stats=stats)


@_timed
def check_counterexamples(fib_ns: Iterable[int] = (2, 3, 4)) -> VerificationReport:
    """The pentagon array bounds a 5-gon; the n-th Fibonacci triangle an (n+2)-gon."""
    stats: dict = {}
    problems = []
    pent = census(build(pentagon_counterexample()))
    stats["pentagon"] = _hist(pent)
    if 5 not in pent:
        problems.append({"set": "pentagon", "census": _hist(pent)})
    for n in fib_ns:
        hist = census(build(fibonacci_triangle(n)))
        top = max(hist) if hist else 0
        stats[f"fibtriangle({n})"] = {"census": _hist(hist), "max_sides": top}
        if top != n + 2:
            problems.append({"set": f"fibtriangle({n})", "max_sides": top, "expected": n + 2})
    return VerificationReport("counterexamples", not problems,
                              problems or None, stats)


@_timed
def check_coprime(n: int) -> VerificationReport:
    """Two-sided unbounded cells of the (2n+1)^2 grid equal the coprime points in it."""
    faces = two_sided_unbounded_count(build(generate(grid_spec(n))))
    expected = coprime_count(n)
    stats = {"two_sided_unbounded": faces, "coprime": expected}
    return VerificationReport(f"coprime/n={n}", faces == expected,
                              None if faces == expected else stats, stats)


def random_transform(rng: random.Random, bound: int = 3, max_den: int = 3) -> Transform2:
    while True:
        entries = [Fraction(rng.randint(-bound * q, bound * q), q)
                   for q in (rng.randint(1, max_den) for _ in range(4))]
        if entries[0] * entries[3] - entries[1] * entries[2] != 0:
            return Transform2(*entries)


@_timed
def check_transform_invariance(source: Source, m: Transform2,
                               claim_id: Optional[str] = None) -> VerificationReport:
    """Image of a lattice under ``m``: same census, still only triangles and quadrilaterals."""
    pts = _points(source)
    claim = claim_id or f"transform/{_label(source)}"
    before = census(build(pts))
    after = census(build(apply_transform(m, pts)))
    stats = {"census": _hist(before), "transformed_census": _hist(after),
             "matrix": [str(m.m11), str(m.m12), str(m.m21), str(m.m22)]}
    ok = before == after and set(after) <= {3, 4}
    return VerificationReport(claim, ok, None if ok else stats, stats)


def _face_key(vertices) -> tuple:
    i = vertices.index(min(vertices))
    return tuple(vertices[i:]) + tuple(vertices[:i])


@_timed
def compare_engines(source: Source, claim_id: Optional[str] = None) -> VerificationReport:
    """The walked cells and the origin cell agree exactly with the brute-force subdivision."""
    pts = _points(source)
    claim = claim_id or f"engines/{_label(source)}"
    sub = build(pts)
    home = face_containing(sub, ORIGIN)
    oracle = {(_face_key(f.vertices), f.side_lines, f is home) for f in sub.bounded_faces()}
    walked = {(w.key(), frozenset(w.lines), w.contains_origin) for w in enumerate_faces(pts)} \
        if len(pts) >= 2 else set()
    stats = {"faces": len(oracle)}
    if walked != oracle:
        missing = sorted(oracle - walked)[:1]
        extra = sorted(walked - oracle)[:1]
        wit = {"points": [_pt(p) for p in pts],
               "oracle_only": [[f"{v.x},{v.y}" for v in k[0]] for k in missing],
               "walk_only": [[f"{v.x},{v.y}" for v in k[0]] for k in extra]}
        return VerificationReport(claim, False, wit, stats)
    region = origin_region(pts)
    stats["origin_case"] = region.case
    if set(region.sides) != home.side_lines or region.bounded != home.bounded:
        wit = {"points": [_pt(p) for p in pts],
               "origin_region": [_pt(p) for p in region.sides],
               "oracle_origin_face": sorted(_pt(p) for p in home.side_lines)}
        return VerificationReport(claim, False, wit, stats)
    return VerificationReport(claim, True, stats=stats)


def random_lattice_spec(rng: random.Random, max_size: int = 6) -> LatticeSpec:
    """Rational lattice; about a third are degenerate, about a third cover the origin."""
    def frac(lo: int, hi: int, den: int) -> Fraction:
        return Fraction(rng.randint(lo * den, hi * den), den)

    while True:
        kind = rng.randrange(3)
        dx = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        dy = Fraction(rng.randint(1, 8), rng.randint(1, 4))
        n, m = rng.randint(0, max_size), rng.randint(0, max_size)
        if kind == 0:
            if rng.random() < 0.5:
                n = 0
            else:
                m = 0
        if kind == 2:
            # put the origin on a grid position so it gets removed
            a = -rng.randint(0, n) * dx
            b = -rng.randint(0, m) * dy
        else:
            a, b = frac(-3, 3, rng.randint(1, 5)), frac(-3, 3, rng.randint(1, 5))
        try:
            return LatticeSpec(a, b, dx, dy, n, m)
        except ValueError:
            continue


def origin_case_sets() -> list[PointSet]:
    """Small sets exercising every way the origin cell is read off the hull."""
    return [
        PointSet.of([(1, 2)], "origin-case/single_point"),
        PointSet.of([(1, 1), (2, 2), (3, 3)], "origin-case/collinear_origin_outside"),
        PointSet.of([(-1, 0), (2, 0)], "origin-case/collinear_origin_inside"),
        PointSet.of([(1, 0), (0, 1)], "origin-case/segment"),
        PointSet.of([(1, 1), (-1, 1), (0, -1)], "origin-case/origin_inside"),
        PointSet.of([(1, 1), (1, 2), (2, 1), (2, 2)], "origin-case/origin_outside"),
        PointSet.of([(-1, 0), (1, 0), (0, 1)], "origin-case/origin_on_boundary"),
        PointSet.of([(1, 1), (2, 2), (2, 1), (3, 3), (1, 3)], "origin-case/outside_collinear_tangent"),
    ]


@_timed
def batch(claim_id: str, reports: list[VerificationReport]) -> VerificationReport:
    """Fold many reports into one; the first failure becomes the witness."""
    failed = [r for r in reports if not r.passed]
    stats = {"checked": len(reports), "failed": len(failed)}
    cases = sorted({r.stats.get("origin_case") for r in reports if r.stats.get("origin_case")})
    if cases:
        stats["origin_cases"] = cases
    if failed:
        return VerificationReport(claim_id, False,
                                  {"claim": failed[0].claim_id, "witness": failed[0].witness}, stats)
    return VerificationReport(claim_id, True, stats=stats)


CLAIMS = ("no5gon", "rrl", "counterexamples", "coprime", "transform", "engines")


@dataclass
class VerifyConfig:
    seed: int = DEFAULT_SEED
    grid_max: int = 4
    lattices: int = 50
    transform_trials: int = 20
    engine_sets: int = 200
    max_points: int = 7


def run_claim(claim: str, cfg: VerifyConfig, source: Optional[Source] = None) -> list[VerificationReport]:
    """Run one claim family; with ``source`` given, check just that input."""
    if claim not in CLAIMS:
        raise KeyError(claim)
    rng = random.Random(f"{cfg.seed}/{claim}")
    if source is not None:
        if claim == "no5gon":
            return [check_no_5gon(source)]
        if claim == "rrl":
            return [check_rrl(source)]
        if claim == "engines":
            return [compare_engines(source)]
        if claim == "transform":
            return [check_transform_invariance(source, random_transform(rng),
                                               f"transform/{_label(source)}/trial=0")]
        raise ValueError(f"claim {claim!r} takes no input")

    if claim == "counterexamples":
        return [check_counterexamples()]
    if claim == "coprime":
        return [check_coprime(n) for n in range(1, cfg.grid_max + 1)]
    if claim in ("no5gon", "rrl"):
        check = check_no_5gon if claim == "no5gon" else check_rrl
        reports = [check(grid_spec(n)) for n in range(1, cfg.grid_max + 1)]
        specs = [random_lattice_spec(rng) for _ in range(cfg.lattices)]
        reports.append(batch(f"{claim}/random-lattices(count={cfg.lattices})",
                             [check(s) for s in specs]))
        return reports
    if claim == "transform":
        spec = LatticeSpec(1, 1, 1, 1, 2, 2)
        trials = [check_transform_invariance(spec, random_transform(rng), f"trial={t}")
                  for t in range(cfg.transform_trials)]
        return [check_transform_invariance(spec, Transform2(2, 1, 0, 1)),
                batch(f"transform/{spec}/random(count={cfg.transform_trials})", trials)]
    # engines
    sets = [random_points(1 + rng.randrange(cfg.max_points), rng.randrange(1 << 30))
            for _ in range(cfg.engine_sets)]
    reports = [batch(f"engines/random(count={cfg.engine_sets})",
                     [compare_engines(s, f"engines/{s.label}") for s in sets])]
    reports.append(batch("engines/origin-cases", [compare_engines(s) for s in origin_case_sets()]))
    reports.append(compare_engines(pentagon_counterexample()))
    return reports


def run_claims(claims: Iterable[str], cfg: VerifyConfig,
               source: Optional[Source] = None) -> list[VerificationReport]:
    reports = []
    for claim in claims:
        reports.extend(run_claim(claim, cfg, source))
    return sorted(reports, key=lambda r: r.claim_id)


def format_text(reports: Sequence[VerificationReport], seed: int, timing: bool = False) -> str:
    lines = [f"seed: {seed}"]
    for r in reports:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.claim_id}")
        for key, value in r.stats.items():
            lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
        lines.append(f"  witness: {json.dumps(r.witness, sort_keys=True) if r.witness is not None else '-'}")
        if timing:
            lines.append(f"  seconds: {r.seconds:.3f}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} claims passed")
    return "\n".join(lines) + "\n"


def format_json(reports: Sequence[VerificationReport], seed: int, timing: bool = False) -> str:
    doc = {"seed": seed, "passed": all(r.passed for r in reports),
           "reports": [r.to_dict(timing) for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


__all__ = [
    "VerificationReport", "VerifyConfig", "CLAIMS", "DEFAULT_SEED", "check_no_5gon", "check_rrl",
    "check_counterexamples", "check_coprime", "check_transform_invariance", "compare_engines",
    "random_lattice_spec", "random_transform", "origin_case_sets", "run_claim", "run_claims",
    "format_text", "format_json",
]
