"""Brute-force planar subdivision of a line pattern, used as ground truth.

Vertices come from all pairwise intersections (merged exactly, so concurrent
lines share one vertex).  Every line is cut into segments and two rays; the
rays end at ideal points that are joined into a circle at infinity by arcs.
Faces are traced on the resulting planar graph with the face kept on the left
of each half-edge, so bounded faces come out counterclockwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Optional

from . import kernels
from .geometry import CoeffPoint, EuclidPoint, foot_of_perpendicular, integer_line

ARC = -1


def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


_ccw_key = cmp_to_key(_ccw_cmp)


@dataclass(frozen=True)
class Face:
    """One face of the subdivision.

    ``half_edges`` is the boundary cycle with the face on the left.
    ``vertices`` are the corners (where the supporting line changes), clockwise
    for bounded faces; ``side_cycle`` gives the supporting lines in the same
    clockwise order.  Unbounded faces list their finite corners only.
    """

    index: int
    half_edges: tuple[int, ...]
    bounded: bool
    side_count: int
    side_lines: frozenset
    vertices: tuple[EuclidPoint, ...]
    side_cycle: tuple[CoeffPoint, ...]


@dataclass
class Subdivision:
    lines: tuple[CoeffPoint, ...]
    vertices: tuple[EuclidPoint, ...]
    n_ideal: int
    he_origin: list[int]
    he_line: list[int]
    he_next: list[int]
    faces: list[Face]
    _sign_index: Optional[dict] = field(default=None, repr=False)

    @property
    def n_edges(self) -> int:
        return len(self.he_origin) // 2

    def twin(self, h: int) -> int:
        return h ^ 1

    def euler_characteristic(self) -> int:
        """V - E + F on the compactified graph (ideal points and outer face included)."""
        v = len(self.vertices) + self.n_ideal
        return v - self.n_edges + len(self.faces) + 1

    def bounded_faces(self) -> list[Face]:
        return [f for f in self.faces if f.bounded]

    def unbounded_faces(self) -> list[Face]:
        return [f for f in self.faces if not f.bounded]


def _line_direction(abc) -> tuple[int, int]:
    a, b, _ = abc
    return (-b, a)


def build(points: Iterable[CoeffPoint], backend: str | None = None) -> Subdivision:
    lines = tuple(dict.fromkeys(points))
    if not lines:
        raise ValueError("need at least one line")
    coeffs = [integer_line(p) for p in lines]
    raw_vertices, orders = kernels.line_orders(coeffs, backend=backend)
    nv = len(raw_vertices)
    n_lines = len(lines)

    he_origin: list[int] = []
    he_line: list[int] = []
    he_dir: list = []  # outgoing direction at finite origins, None elsewhere

    def add_edge(u: int, v: int, line: int, d) -> None:
        he_origin.extend((u, v))
        he_line.extend((line, line))
        if d is None:
            he_dir.extend((None, None))
        else:
            he_dir.extend((d if u < nv else None, (-d[0], -d[1]) if v < nv else None))

    # ideal end 2i points along +d_i, 2i+1 along -d_i
    inward_he: dict[int, int] = {}
    for i, row in enumerate(orders):
        d = _line_direction(coeffs[i])
        plus, minus = nv + 2 * i, nv + 2 * i + 1
        chain = [minus, *row, plus]
        for u, v in zip(chain, chain[1:]):
            if u == minus:
                inward_he[minus] = len(he_origin)  # minus -> first, already inward
            add_edge(u, v, i, d)
            if v == plus:
                inward_he[plus] = len(he_origin) - 1

    # circle at infinity: ideal ends in counterclockwise order
    ends = []
    for i in range(n_lines):
        d = _line_direction(coeffs[i])
        ends.append((nv + 2 * i, d, i))
        ends.append((nv + 2 * i + 1, (-d[0], -d[1]), i))
    ends.sort(key=lambda e: _ccw_key(e[1]))
    ring: list[int] = []
    k = 0
    while k < len(ends):
        j = k
        while j < len(ends) and _ccw_cmp(ends[k][1], ends[j][1]) == 0:
            j += 1
        ref = ends[k][1]
        rot = (-ref[1], ref[0])
        group = sorted(ends[k:j], key=lambda e: _offset(lines[e[2]], rot))
        ring.extend(e[0] for e in group)
        k = j
    m = len(ring)
    ccw_arc_from: dict[int, int] = {}
    cw_arc_from: dict[int, int] = {}
    for t in range(m):
        u, v = ring[t], ring[(t + 1) % m]
        ccw_arc_from[u] = len(he_origin)
        cw_arc_from[v] = len(he_origin) + 1
        add_edge(u, v, ARC, None)

    # counterclockwise stars at finite vertices
    star: list[list[int]] = [[] for _ in range(nv)]
    for h, u in enumerate(he_origin):
        if u < nv:
            star[u].append(h)
    pos: dict[int, int] = {}
    for u in range(nv):
        star[u].sort(key=lambda h: _ccw_key(he_dir[h]))
        for p, h in enumerate(star[u]):
            pos[h] = p

    n_he = len(he_origin)
    he_next = [0] * n_he
    for h in range(n_he):
        t = h ^ 1
        v = he_origin[t]
        if v < nv:
            s = star[v]
            he_next[h] = s[(pos[t] - 1) % len(s)]
        elif he_line[h] != ARC:
            he_next[h] = ccw_arc_from[v]
        elif h == ccw_arc_from[he_origin[h]]:
            he_next[h] = inward_he[v]
        else:
            he_next[h] = cw_arc_from[v]

    verts = tuple(EuclidPoint(Fraction(x, w), Fraction(y, w)) for x, y, w in raw_vertices)

    faces: list[Face] = []
    seen = [False] * n_he
    for h0 in range(n_he):
        if seen[h0]:
            continue
        cycle = []
        h = h0
        while not seen[h]:
            seen[h] = True
            cycle.append(h)
            h = he_next[h]
        labels = [he_line[h] for h in cycle]
        if all(lab == ARC for lab in labels):
            # the clockwise arcs close up on their own: the face beyond infinity
            continue
        faces.append(_make_face(len(faces), cycle, labels, he_origin, lines, verts, nv))
    return Subdivision(lines, verts, m, he_origin, he_line, he_next, faces)


def _offset(p: CoeffPoint, rot) -> Fraction:
    f = foot_of_perpendicular(p)
    return f.x * rot[0] + f.y * rot[1]


def _make_face(index, cycle, labels, he_origin, lines, verts, nv) -> Face:
    n = len(labels)
    bounded = ARC not in labels
    corners = []
    run_lines = []
    for t in range(n):
        lab, prev = labels[t], labels[t - 1]
        if lab != ARC and lab != prev:
            run_lines.append(lines[lab])
            u = he_origin[cycle[t]]
            if prev != ARC and u < nv:
                corners.append(verts[u])
    side_count = len(run_lines)
    if bounded:
        # traced counterclockwise; reversing both keeps corner k at the
        # clockwise end of side k
        corners.reverse()
        run_lines.reverse()
    return Face(index, tuple(cycle), bounded, side_count, frozenset(run_lines),
                tuple(corners), tuple(run_lines))


def bounded_faces(sub: Subdivision) -> list[Face]:
    return sub.bounded_faces()


def census(sub: Subdivision) -> dict[int, int]:
    """Histogram of side counts over bounded faces."""
    return dict(sorted(Counter(f.side_count for f in sub.faces if f.bounded).items()))


def two_sided_unbounded_count(sub: Subdivision) -> int:
    return sum(1 for f in sub.faces if not f.bounded and f.side_count == 2)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _face_signs(sub: Subdivision, face: Face, coeffs) -> tuple[int, ...]:
    nv = len(sub.vertices)
    # a point interior to one boundary edge lies on no other line
    for h in face.half_edges:
        lab = sub.he_line[h]
        if lab == ARC:
            continue
        u, v = sub.he_origin[h], sub.he_origin[h ^ 1]
        a, b, c = coeffs[lab]
        d = (-b, a)
        if u < nv and v < nv:
            pu, pv = sub.vertices[u], sub.vertices[v]
            sample = ((pu.x + pv.x) / 2, (pu.y + pv.y) / 2)
            step = (pv.x - pu.x, pv.y - pu.y)
        elif u < nv or v < nv:
            base = sub.vertices[u if u < nv else v]
            # ray toward the ideal end
            ideal = v if u < nv else u
            sgn = 1 if (ideal - nv) % 2 == 0 else -1
            sample = (base.x + sgn * d[0], base.y + sgn * d[1])
            step = (sgn * d[0], sgn * d[1]) if u < nv else (-sgn * d[0], -sgn * d[1])
        else:
            f = foot_of_perpendicular(sub.lines[lab])
            sample = (f.x, f.y)
            sgn = 1 if (v - nv) % 2 == 0 else -1
            step = (sgn * d[0], sgn * d[1])
        signs = []
        for j, (aj, bj, cj) in enumerate(coeffs):
            if j == lab:
                # face is left of the half-edge
                left = (-step[1], step[0])
                signs.append(_sign(aj * left[0] + bj * left[1]))
            else:
                signs.append(_sign(aj * sample[0] + bj * sample[1] - cj))
        return tuple(signs)
    raise ValueError("face has no line on its boundary")


def face_containing(sub: Subdivision, x: EuclidPoint) -> Face:
    """The face whose open region contains ``x``; points on a line are rejected."""
    coeffs = [integer_line(p) for p in sub.lines]
    key = []
    for p, (a, b, c) in zip(sub.lines, coeffs):
        s = _sign(a * x.x + b * x.y - c)
        if s == 0:
            raise ValueError(f"{x} lies on the line {p}")
        key.append(s)
    if sub._sign_index is None:
        sub._sign_index = {_face_signs(sub, f, coeffs): f for f in sub.faces}
    return sub._sign_index[tuple(key)]
