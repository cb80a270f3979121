"""Generators for point sets in the coefficient plane."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .geometry import CoeffPoint, EuclidPoint, as_fraction
from .hull import _cross3


@dataclass(frozen=True)
class PointSet:
    """A finite, duplicate-free set of coefficient points; keeps insertion order."""

    points: tuple[CoeffPoint, ...]
    label: str = ""
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        uniq = tuple(dict.fromkeys(self.points))
        object.__setattr__(self, "points", uniq)
        object.__setattr__(self, "_members", frozenset(uniq))

    @classmethod
    def of(cls, pairs: Iterable, label: str = "") -> PointSet:
        """Build from ``(A, B)`` pairs, silently dropping the origin."""
        pts = []
        for a, b in pairs:
            a, b = as_fraction(a), as_fraction(b)
            if a or b:
                pts.append(CoeffPoint(a, b))
        return cls(tuple(pts), label)

    def __iter__(self) -> Iterator[CoeffPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p) -> bool:
        return p in self._members

    def as_set(self) -> frozenset:
        return self._members


@dataclass(frozen=True)
class LatticeSpec:
    """The grid ``{(a + k*dx, b + j*dy) : 0 <= k <= N, 0 <= j <= M}`` minus the origin."""

    a: Fraction
    b: Fraction
    dx: Fraction
    dy: Fraction
    N: int
    M: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "dx", "dy"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.dx <= 0 or self.dy <= 0:
            raise ValueError("lattice spacings must be positive")
        if not (isinstance(self.N, int) and isinstance(self.M, int)) or self.N < 0 or self.M < 0:
            raise ValueError("N and M must be nonnegative integers")
        for x, y in self.corner_coords():
            if x == 0 and y == 0:
                raise ValueError("a corner of the lattice is the origin")

    def corner_coords(self) -> list[tuple[Fraction, Fraction]]:
        x0, y0 = self.a, self.b
        x1, y1 = self.a + self.N * self.dx, self.b + self.M * self.dy
        return [(x0, y0), (x0, y1), (x1, y0), (x1, y1)]

    def __str__(self) -> str:
        return f"lattice({self.a},{self.b},{self.dx},{self.dy},{self.N},{self.M})"


def grid_spec(n: int) -> LatticeSpec:
    """Integer square grid ``-n <= A, B <= n``."""
    if n < 1:
        raise ValueError("grid size must be positive")
    return LatticeSpec(-n, -n, 1, 1, 2 * n, 2 * n)


def generate(spec: LatticeSpec) -> PointSet:
    return PointSet.of(
        ((spec.a + k * spec.dx, spec.b + j * spec.dy)
         for k in range(spec.N + 1) for j in range(spec.M + 1)),
        label=str(spec),
    )


def boundary_and_corners(spec: LatticeSpec) -> tuple[PointSet, PointSet]:
    pts = [(spec.a + k * spec.dx, spec.b + j * spec.dy)
           for k in range(spec.N + 1) for j in range(spec.M + 1)
           if k in (0, spec.N) or j in (0, spec.M)]
    return (PointSet.of(pts, f"boundary of {spec}"),
            PointSet.of(spec.corner_coords(), f"corners of {spec}"))


PENTAGON_POINTS = ((-2, -2), (-2, 2), (-2, 3), (2, -2), (2, 2), (2, 3), (3, -2), (3, 2), (3, 3))


def pentagon_counterexample() -> PointSet:
    """A 3x3 array with unequal spacing whose lines bound a pentagon."""
    return PointSet.of(PENTAGON_POINTS, "pentagon")


def fibonacci(k: int) -> int:
    """``F_k`` with ``F_1 = F_2 = 1``."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci_vertices(n: int) -> list[EuclidPoint]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return [EuclidPoint(-3, -1), EuclidPoint(-2, -1),
            EuclidPoint(-3 + fibonacci(2 * n + 1), -1 + fibonacci(2 * n))]


def fibonacci_triangle(n: int) -> PointSet:
    """Lattice points in the triangle whose lines bound an (n+2)-gon."""
    ps = lattice_in_polygon(fibonacci_vertices(n))
    return PointSet(ps.points, f"fibtriangle({n})")


def _check_convex(verts: Sequence[tuple[Fraction, Fraction]]) -> None:
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if a == b:
            continue
        signs = {(_cross3(a, b, v) > 0) - (_cross3(a, b, v) < 0) for v in verts}
        if {1, -1} <= signs:
            raise ValueError("polygon is not convex (or its vertices are out of order)")


def lattice_in_polygon(vertices: Sequence[EuclidPoint]) -> PointSet:
    """Integer points in a closed convex polygon, minus the origin.

    The polygon may be degenerate (a segment or a point).  Vertices may be
    given in either orientation.
    """
    verts = [(as_fraction(v[0]), as_fraction(v[1])) for v in
             ((p.x, p.y) if isinstance(p, EuclidPoint) else p for p in vertices)]
    if not verts:
        raise ValueError("empty polygon")
    _check_convex(verts)
    n = len(verts)
    area2 = sum(verts[i][0] * verts[(i + 1) % n][1] - verts[(i + 1) % n][0] * verts[i][1]
                for i in range(n))
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    out = []
    for x in range(math.ceil(min(xs)), math.floor(max(xs)) + 1):
        for y in range(math.ceil(min(ys)), math.floor(max(ys)) + 1):
            q = (x, y)
            if area2 != 0:
                sgn = 1 if area2 > 0 else -1
                inside = all(sgn * _cross3(verts[i], verts[(i + 1) % n], q) >= 0
                             for i in range(n) if verts[i] != verts[(i + 1) % n])
            else:
                # degenerate: every vertex collinear, bounding box already clips
                inside = all(_cross3(verts[0], v, q) == 0 for v in verts)
            if inside:
                out.append(q)
    return PointSet.of(out, "polygon")


def coprime_count(n: int) -> int:
    """Points of ``[-n, n]^2`` minus the origin with ``gcd(|a|, |b|) == 1``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(1 for a in range(-n, n + 1) for b in range(-n, n + 1)
               if (a or b) and math.gcd(a, b) == 1)


def random_points(count: int, seed: int, bound: int = 3, max_den: int = 3) -> PointSet:
    """Seeded random rationals ``p/q`` in ``[-bound, bound]`` with ``q <= max_den``."""
    rng = random.Random(seed)
    pts: dict[CoeffPoint, None] = {}
    attempts = 0
    while len(pts) < count and attempts < 100 * count:
        attempts += 1
        coords = []
        for _ in range(2):
            q = rng.randint(1, max_den)
            coords.append(Fraction(rng.randint(-bound * q, bound * q), q))
        if coords[0] or coords[1]:
            pts[CoeffPoint(*coords)] = None
    return PointSet(tuple(pts), f"random(count={count},seed={seed})")
