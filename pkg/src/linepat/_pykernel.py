"""Pure-Python hot loops, exact on integers of any size.

Mirrors ``_ckernel.pyx`` call for call; the compiled twin is used when its
fixed-width bounds hold.  Side values are encoded as ``R = 1``, ``L = 0``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

R, L = 1, 0


class WalkError(RuntimeError):
    """A walk failed to close within its step budget."""


class Walker:
    """Next-side rule over a fixed integer point set ``(xs[i], ys[i])``."""

    def __init__(self, xs, ys):
        self.xs = [int(x) for x in xs]
        self.ys = [int(y) for y in ys]
        if len(self.xs) != len(self.ys):
            raise ValueError("coordinate arrays differ in length")

    def next_side(self, k: int, k1: int, dk: int):
        """Return ``(k2, dk1)`` or None when the walk leaves along an unbounded edge."""
        xs, ys = self.xs, self.ys
        cx, cy = xs[k1], ys[k1]
        turn = xs[k] * cy - ys[k] * cx
        if turn == 0:
            raise ValueError("consecutive sides are parallel")
        dk1 = dk if turn < 0 else 1 - dk
        sigma = -1 if dk1 == R else 1
        ux, uy = xs[k] - cx, ys[k] - cy
        # the sweep never crosses the line through the origin and C
        fx, fy = cx, cy
        if sigma * (ux * fy - uy * fx) < 0:
            fx, fy = -fx, -fy

        bx = by = 0
        found = False
        for i in range(len(xs)):
            if i == k1:
                continue
            vx, vy = xs[i] - cx, ys[i] - cy
            c0 = ux * vy - uy * vx
            if c0 == 0:
                continue
            if sigma * c0 < 0:
                vx, vy = -vx, -vy
            if sigma * (vx * fy - vy * fx) <= 0:
                continue
            if not found or sigma * (bx * vy - by * vx) < 0:
                bx, by, found = vx, vy, True
        if not found:
            return None

        o = ux * cy - uy * cx
        cv = bx * cy - by * cx
        st = 1 if (o > 0) == (cv > 0) else -1
        wx, wy = -st * bx, -st * by  # pointing away from P*
        first_pos = last_pos = first_neg = last_neg = None
        for i in range(len(xs)):
            if i == k1:
                continue
            dx, dy = xs[i] - cx, ys[i] - cy
            if bx * dy - by * dx != 0:
                continue
            tau = dx * wx + dy * wy
            if tau > 0:
                if first_pos is None or tau < first_pos[0]:
                    first_pos = (tau, i)
                if last_pos is None or tau > last_pos[0]:
                    last_pos = (tau, i)
            else:
                if first_neg is None or tau < first_neg[0]:
                    first_neg = (tau, i)
                if last_neg is None or tau > last_neg[0]:
                    last_neg = (tau, i)
        if dk == dk1:
            pick = last_neg if last_neg is not None else last_pos
        else:
            pick = first_pos if first_pos is not None else first_neg
        return pick[1], dk1

    def walk(self, i1: int, i2: int, d1: int, max_steps: int):
        """Iterate the rule from ``(i1, i2, d1)``; list of ``(index, side)`` or None."""
        a, b, d = i1, i2, d1
        sides = []
        for _ in range(max_steps):
            nxt = self.next_side(a, b, d)
            if nxt is None:
                return None
            c, d2 = nxt
            sides.append((a, d))
            a, b, d = b, c, d2
            if a == i1 and b == i2 and d == d1:
                return sides
        raise WalkError(f"walk from ({i1}, {i2}, {d1}) did not close in {max_steps} steps")


def line_orders(coeffs):
    """Arrangement vertices of lines ``a*x + b*y = c`` and their order on each line.

    Returns ``(vertices, orders)``: vertices as reduced homogeneous triples
    ``(X, Y, W)`` with ``W > 0``, numbered by first appearance; ``orders[i]``
    lists the vertex ids on line ``i`` sorted along direction ``(-b, a)``.
    """
    n = len(coeffs)
    incident: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for i in range(n):
        a1, b1, c1 = coeffs[i]
        for j in range(i + 1, n):
            a2, b2, c2 = coeffs[j]
            w = a1 * b2 - a2 * b1
            if w == 0:
                continue
            x = c1 * b2 - c2 * b1
            y = a1 * c2 - a2 * c1
            if w < 0:
                x, y, w = -x, -y, -w
            g = gcd(gcd(x, y), w)
            p = (x // g, y // g, w // g)
            incident[i].append(p)
            incident[j].append(p)

    ids: dict[tuple[int, int, int], int] = {}
    vertices: list[tuple[int, int, int]] = []
    orders: list[list[int]] = []
    for i, (a, b, _c) in enumerate(coeffs):
        pts = sorted(set(incident[i]), key=lambda p: Fraction(-b * p[0] + a * p[1], p[2]))
        row = []
        for p in pts:
            vid = ids.get(p)
            if vid is None:
                vid = ids[p] = len(vertices)
                vertices.append(p)
            row.append(vid)
        orders.append(row)
    return vertices, orders
