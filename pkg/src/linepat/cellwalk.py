"""Walking the boundary of a cell using only coefficient-plane data.

A bounded cell is walked clockwise.  Its sides lie on lines ``L_{P_k}`` and
``D_k`` records on which side of the direction of travel the origin sits.
Given two consecutive sides and ``D_k``, the next side is found by rotating
the line through ``P_k`` and ``P_{k+1}`` about ``P_{k+1}`` until it meets
another point of S, never sweeping across the line through ``O`` and
``P_{k+1}``.  The rotation sense comes from ``D_{k+1}``; among the points met
at once, the first or the last one along the rotated line is taken depending
on whether ``D`` just changed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from . import kernels
from .geometry import (
    CoeffPoint,
    EuclidPoint,
    Orientation,
    cross,
    integer_scale,
    line_value,
    orientation,
)
from .hull import Hull, Location
from .hull import convex_hull as _hull
from .kernels import WalkError


class DSide(enum.Enum):
    L = "L"
    R = "R"

    def flipped(self) -> DSide:
        return DSide.L if self is DSide.R else DSide.R


_ENC = {DSide.R: 1, DSide.L: 0}
_DEC = {1: DSide.R, 0: DSide.L}


@dataclass(frozen=True)
class FaceWalk:
    """A bounded cell walked clockwise.

    ``vertices[k]`` is where side ``k`` meets side ``k + 1``.
    """

    sides: tuple[tuple[CoeffPoint, DSide], ...]
    vertices: tuple[EuclidPoint, ...]
    contains_origin: bool

    @property
    def lines(self) -> tuple[CoeffPoint, ...]:
        return tuple(p for p, _ in self.sides)

    @property
    def d_values(self) -> tuple[DSide, ...]:
        return tuple(d for _, d in self.sides)

    def __len__(self) -> int:
        return len(self.sides)

    def key(self) -> tuple[EuclidPoint, ...]:
        """Vertex cycle rotated to start at its smallest vertex."""
        v = self.vertices
        i = v.index(min(v))
        return v[i:] + v[:i]

    def format(self) -> str:
        sides = " ".join(f"{p}{d.value}" for p, d in self.sides)
        verts = " ".join(str(x) for x in self.vertices)
        return f"sides: {sides}\nvertices: {verts}"


@dataclass(frozen=True)
class OriginRegion:
    """Lines bounding the cell that contains the Euclidean origin, clockwise.

    For an unbounded cell the first and last entries are the unbounded sides.
    ``case`` names how the sides were read off the convex hull of S.
    """

    sides: tuple[CoeffPoint, ...]
    bounded: bool
    case: str


def _as_points(points: Iterable[CoeffPoint]) -> list[CoeffPoint]:
    return list(dict.fromkeys(points))


def d_step(pk: CoeffPoint, pk1: CoeffPoint, dk: DSide) -> DSide:
    """``D_{k+1}`` from ``D_k``: it flips exactly when ``P_{k+1}`` is left of ``P_k``."""
    o = orientation(pk, pk1)
    if o is Orientation.ON:
        raise ValueError(f"{pk} and {pk1} name parallel lines")
    return dk.flipped() if o is Orientation.LEFT else dk


def initial_d(p: CoeffPoint, start: EuclidPoint, end: EuclidPoint) -> DSide:
    """Side of the directed segment ``start -> end`` (on ``L_P``) holding the origin."""
    if start == end:
        raise ValueError("degenerate direction")
    if line_value(p, start) != 0 or line_value(p, end) != 0:
        raise ValueError(f"points are not on the line {p}")
    dx, dy = end.x - start.x, end.y - start.y
    c = dx * (-start.y) - dy * (-start.x)
    return DSide.L if c > 0 else DSide.R


class _Context:
    """Index map plus the integer kernel for one point set."""

    def __init__(self, points: Iterable[CoeffPoint], backend: str | None = None):
        self.points = _as_points(points)
        self.index = {p: i for i, p in enumerate(self.points)}
        self.scale, scaled = integer_scale(self.points)
        self.xs = [x for x, _ in scaled]
        self.ys = [y for _, y in scaled]
        self.walker = kernels.make_walker(self.xs, self.ys, backend=backend)

    def idx(self, p: CoeffPoint) -> int:
        try:
            return self.index[p]
        except KeyError:
            raise ValueError(f"{p} is not in the point set") from None

    def vertex(self, i: int, j: int) -> EuclidPoint:
        """``L_i`` meets ``L_j``, computed on the scaled integer coordinates."""
        xs, ys, s = self.xs, self.ys, self.scale
        det = xs[i] * ys[j] - ys[i] * xs[j]
        return EuclidPoint(Fraction(s * (ys[j] - ys[i]), det), Fraction(s * (xs[i] - xs[j]), det))

    def walk(self, i1: int, i2: int, d1: DSide) -> Optional[FaceWalk]:
        raw = self.walker.walk(i1, i2, _ENC[d1], 2 * len(self.points))
        if raw is None:
            return None
        sides = tuple((self.points[i], _DEC[d]) for i, d in raw)
        n = len(raw)
        verts = tuple(self.vertex(raw[k][0], raw[(k + 1) % n][0]) for k in range(n))
        return FaceWalk(sides, verts, all(d is DSide.R for _, d in sides))

    def corner_seeds(self) -> list[tuple[int, int]]:
        """Ordered line pairs that can be consecutive sides at some arrangement vertex.

        The points whose lines pass through a vertex ``v`` lie on one line of
        the coefficient plane; two of them can be consecutive sides only if they
        are neighbours along it (``D`` flips, second point to the left) or its
        two extremes (``D`` kept, second point to the right).
        """
        xs, ys = self.xs, self.ys
        n = len(xs)
        through: dict[tuple[int, int, int], set[int]] = {}
        for i in range(n):
            xi, yi = xs[i], ys[i]
            for j in range(i + 1, n):
                w = xi * ys[j] - yi * xs[j]
                if w == 0:
                    continue
                # homogeneous vertex up to the common scale factor
                vx, vy = ys[j] - yi, xi - xs[j]
                if w < 0:
                    vx, vy, w = -vx, -vy, -w
                g = gcd(gcd(vx, vy), w)
                through.setdefault((vx // g, vy // g, w // g), set()).update((i, j))
        seeds = []
        for (vx, vy, _w), group in sorted(through.items()):
            members = sorted(group, key=lambda i: -vy * xs[i] + vx * ys[i])
            last = len(members) - 1
            pairs = [(t, t + 1) for t in range(last)]
            if last > 1:
                pairs.append((0, last))
            for a, b in pairs:
                for s, t in ((a, b), (b, a)):
                    i, j = members[s], members[t]
                    left = xs[i] * ys[j] - ys[i] * xs[j] > 0
                    if (left and abs(s - t) == 1) or (not left and {s, t} == {0, last}):
                        seeds.append((i, j))
        return seeds


def next_side(points: Iterable[CoeffPoint], pk: CoeffPoint, pk1: CoeffPoint, dk: DSide,
              backend: str | None = None) -> Optional[tuple[CoeffPoint, DSide]]:
    """``(P_{k+2}, D_{k+1})``, or None when the boundary runs off to infinity."""
    ctx = _Context(points, backend)
    k, k1 = ctx.idx(pk), ctx.idx(pk1)
    if cross(pk, pk1) == 0:
        raise ValueError(f"{pk} and {pk1} name parallel lines")
    res = ctx.walker.next_side(k, k1, _ENC[dk])
    if res is None:
        return None
    return ctx.points[res[0]], _DEC[res[1]]


def walk_face(points: Iterable[CoeffPoint], p1: CoeffPoint, p2: CoeffPoint, d1: DSide,
              backend: str | None = None) -> Optional[FaceWalk]:
    """Walk until the starting state recurs; None if the cell is unbounded.

    Raises :class:`WalkError` when the walk fails to close within ``2 |S|`` steps,
    which only happens if ``(p1, p2, d1)`` is not a pair of consecutive sides of
    any cell.
    """
    ctx = _Context(points, backend)
    i1, i2 = ctx.idx(p1), ctx.idx(p2)
    if cross(p1, p2) == 0:
        raise ValueError(f"{p1} and {p2} name parallel lines")
    return ctx.walk(i1, i2, d1)


def enumerate_faces(points: Iterable[CoeffPoint], backend: str | None = None) -> list[FaceWalk]:
    """Every bounded cell, found by walking from every corner of the arrangement."""
    ctx = _Context(points, backend)
    seen: set[tuple[int, int, int]] = set()
    faces: list[FaceWalk] = []
    for first, second in ctx.corner_seeds():
        for d in (DSide.R, DSide.L):
            state = (first, second, _ENC[d])
            if state in seen:
                continue
            seen.add(state)
            face = ctx.walk(first, second, d)
            if face is None:
                continue
            idx = [ctx.index[p] for p in face.lines]
            n = len(idx)
            for k in range(n):
                seen.add((idx[k], idx[(k + 1) % n], _ENC[face.sides[k][1]]))
            faces.append(face)
    return faces


def convex_hull(points: Iterable[CoeffPoint]) -> Hull:
    """Hull of S with vertices clockwise; ``Hull.locate`` answers membership queries."""
    pts = _as_points(points)
    if not pts:
        raise ValueError("hull of an empty set")
    return _hull(pts)


def origin_region(points: Iterable[CoeffPoint]) -> OriginRegion:
    """Read the sides of the origin's cell off the convex hull of S."""
    pts = _as_points(points)
    hull = convex_hull(pts)
    verts = list(hull.vertices)

    if hull.dim == 0:
        return OriginRegion((verts[0],), False, "single_point")

    if hull.dim == 1:
        a, b = verts
        if cross(a, b) == 0:
            if a.A * b.A + a.B * b.B < 0:  # origin strictly between the endpoints
                return OriginRegion((a, b), False, "collinear_origin_inside")
            far = max((a, b), key=lambda p: p.norm2())
            return OriginRegion((far,), False, "collinear_origin_outside")
        if orientation(a, b) is not Orientation.RIGHT:
            a, b = b, a
        return OriginRegion((a, b), False, "segment")

    loc = hull.locate((0, 0))
    n = len(verts)
    if loc is Location.INTERIOR:
        return OriginRegion(tuple(verts), True, "origin_inside")
    if loc is Location.BOUNDARY:
        for i in range(n):
            u, w = verts[i], verts[(i + 1) % n]
            if cross(u, w) == 0:
                start = (i + 1) % n
                return OriginRegion(tuple(verts[start:] + verts[:start]), False,
                                    "origin_on_boundary")
        raise AssertionError("origin on the hull boundary but on no edge")

    # tangent rays: r1 has everything to its right, r2 everything to its left
    def farthest(cands):
        return max(cands, key=lambda p: p.norm2())

    r1 = farthest([v for v in verts if all(cross(v, q) <= 0 for q in verts)])
    r2 = farthest([v for v in verts if all(cross(v, q) >= 0 for q in verts)])
    i, j = verts.index(r1), verts.index(r2)
    path = []
    while True:
        path.append(verts[i])
        if i == j:
            break
        i = (i + 1) % n
    return OriginRegion(tuple(path), False, "origin_outside")


def d_sign_changes(walk: FaceWalk | Sequence[DSide]) -> int:
    ds = walk.d_values if isinstance(walk, FaceWalk) else tuple(walk)
    return sum(1 for k in range(len(ds)) if ds[k] != ds[k - 1])


def max_equal_run(ds: Sequence[DSide]) -> int:
    """Longest cyclic run of equal consecutive D values."""
    n = len(ds)
    if n == 0:
        return 0
    if all(d == ds[0] for d in ds):
        return n
    start = next(k for k in range(n) if ds[k] != ds[k - 1])
    best = run = 0
    for t in range(n):
        d = ds[(start + t) % n]
        run = run + 1 if t and d == ds[(start + t - 1) % n] else 1
        best = max(best, run)
    return best


__all__ = [
    "DSide", "FaceWalk", "OriginRegion", "WalkError", "d_step", "initial_d", "next_side",
    "walk_face", "enumerate_faces", "convex_hull", "origin_region", "d_sign_changes",
    "max_equal_run",
]
