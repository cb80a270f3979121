"""Exact convex hull of finitely many rational points (monotone chain)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def _cross3(o, a, b) -> Fraction:
    ox, oy = o
    ax, ay = a
    bx, by = b
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@dataclass(frozen=True)
class Hull:
    """Hull vertices in clockwise order, collinear boundary points excluded.

    ``dim`` is 0 for a single point, 1 for a segment (``vertices`` holds the two
    endpoints) and 2 for a proper polygon.
    """

    vertices: tuple
    dim: int

    def locate(self, q) -> Location:
        v = self.vertices
        if self.dim == 0:
            return Location.BOUNDARY if tuple(q) == tuple(v[0]) else Location.EXTERIOR
        if self.dim == 1:
            a, b = v
            if _cross3(a, b, q) != 0:
                return Location.EXTERIOR
            (ax, ay), (bx, by), (qx, qy) = a, b, q
            inside = min(ax, bx) <= qx <= max(ax, bx) and min(ay, by) <= qy <= max(ay, by)
            return Location.BOUNDARY if inside else Location.EXTERIOR
        on_edge = False
        for i in range(len(v)):
            c = _cross3(v[i], v[(i + 1) % len(v)], q)
            if c > 0:  # clockwise polygon: interior is on the right
                return Location.EXTERIOR
            if c == 0:
                on_edge = True
        return Location.BOUNDARY if on_edge else Location.INTERIOR


def convex_hull(points: Sequence) -> Hull:
    pts = sorted(set(points))
    if not pts:
        raise ValueError("hull of an empty set")
    if len(pts) == 1:
        return Hull((pts[0],), 0)

    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and _cross3(out[-2], out[-1], p) >= 0:
                out.pop()
            out.append(p)
        return out

    # chains built with clockwise turns only
    upper = chain(pts)
    lower = chain(reversed(pts))
    ring = upper[:-1] + lower[:-1]
    if len(ring) <= 2:
        return Hull((pts[0], pts[-1]), 1)
    return Hull(tuple(ring), 2)
