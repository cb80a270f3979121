"""Exact rational primitives for lines of the form Ax + By = 1.

A point ``P = (A, B)`` of the coefficient plane names the Euclidean line
``L_P: Ax + By = 1``.  Every scalar here is a :class:`fractions.Fraction`;
nothing is ever rounded.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

Number = Union[int, Fraction]


def as_fraction(value: Number | str) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floating point input is not accepted; use a Fraction")
    return Fraction(value)


class Orientation(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    ON = "on"


class LineSide(enum.Enum):
    SAME_AS_ORIGIN = "same"
    OPPOSITE_ORIGIN = "opposite"
    ON_LINE = "on"


@dataclass(frozen=True, order=True)
class CoeffPoint:
    """A point (A, B) != (0, 0) of the coefficient plane."""

    A: Fraction
    B: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", as_fraction(self.A))
        object.__setattr__(self, "B", as_fraction(self.B))
        if self.A == 0 and self.B == 0:
            raise ValueError("(0, 0) is not a point of the coefficient plane")

    def __iter__(self):
        yield self.A
        yield self.B

    def __str__(self) -> str:
        return f"({self.A}, {self.B})"

    def norm2(self) -> Fraction:
        return self.A * self.A + self.B * self.B


@dataclass(frozen=True, order=True)
class EuclidPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "y", as_fraction(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


ORIGIN = EuclidPoint(0, 0)


@dataclass(frozen=True)
class Transform2:
    """Row-major 2x2 matrix ``[[m11, m12], [m21, m22]]`` with nonzero determinant."""

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction

    def __post_init__(self) -> None:
        for name in ("m11", "m12", "m21", "m22"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.det == 0:
            raise ValueError("singular transform")

    @classmethod
    def identity(cls) -> Transform2:
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, p: CoeffPoint) -> CoeffPoint:
        return CoeffPoint(self.m11 * p.A + self.m12 * p.B, self.m21 * p.A + self.m22 * p.B)

    def map_euclid(self, x: EuclidPoint) -> EuclidPoint:
        """The induced map on the Euclidean plane, ``x -> (M^t)^-1 x``."""
        d = self.det
        # (M^t)^-1 = 1/det * [[m22, -m21], [-m12, m11]]
        return EuclidPoint((self.m22 * x.x - self.m21 * x.y) / d,
                           (-self.m12 * x.x + self.m11 * x.y) / d)


def cross(p: CoeffPoint, q: CoeffPoint) -> Fraction:
    return p.A * q.B - p.B * q.A


def orientation(p: CoeffPoint, q: CoeffPoint) -> Orientation:
    """Which side of the ray from the origin through ``p`` the point ``q`` is on."""
    c = cross(p, q)
    if c > 0:
        return Orientation.LEFT
    if c < 0:
        return Orientation.RIGHT
    return Orientation.ON


def line_value(p: CoeffPoint, x: EuclidPoint) -> Fraction:
    """``A*x + B*y - 1``; negative on the origin's side of ``L_P``."""
    return p.A * x.x + p.B * x.y - 1


def origin_side_of_line(p: CoeffPoint, x: EuclidPoint) -> LineSide:
    v = line_value(p, x)
    if v < 0:
        return LineSide.SAME_AS_ORIGIN
    if v > 0:
        return LineSide.OPPOSITE_ORIGIN
    return LineSide.ON_LINE


def intercepts(p: CoeffPoint) -> tuple[Optional[Fraction], Optional[Fraction]]:
    return (1 / p.A if p.A else None, 1 / p.B if p.B else None)


def intersect(p1: CoeffPoint, p2: CoeffPoint) -> Optional[EuclidPoint]:
    """Common point of ``L_p1`` and ``L_p2``, or None when they are parallel.

    Parallel lines are exactly those whose coefficient points are collinear
    with the origin.
    """
    if p1 == p2:
        raise ValueError(f"identical lines {p1}")
    det = cross(p1, p2)
    if det == 0:
        return None
    return EuclidPoint((p2.B - p1.B) / det, (p1.A - p2.A) / det)


def apply_transform(m: Transform2, points: Iterable[CoeffPoint]) -> list[CoeffPoint]:
    return [m(p) for p in points]


def dist_product(p: CoeffPoint) -> Fraction:
    """``|P|^2 * dist(O, L_P)^2``, which is identically 1."""
    n2 = p.norm2()
    # distance^2 from O to Ax + By = 1 is 1 / (A^2 + B^2)
    dist2 = Fraction(1) / n2
    return n2 * dist2


def foot_of_perpendicular(p: CoeffPoint) -> EuclidPoint:
    """Closest point of ``L_P`` to the origin, ``P / |P|^2``."""
    n2 = p.norm2()
    return EuclidPoint(p.A / n2, p.B / n2)


def integer_line(p: CoeffPoint) -> tuple[int, int, int]:
    """Clear denominators: ``L_P`` as ``a*x + b*y = c`` with integers and ``c > 0``."""
    c = math.lcm(p.A.denominator, p.B.denominator)
    return (p.A.numerator * (c // p.A.denominator),
            p.B.numerator * (c // p.B.denominator), c)


def integer_scale(points: Iterable[CoeffPoint]) -> tuple[int, list[tuple[int, int]]]:
    """Scale a point set by the lcm of all denominators.

    Uniform positive scaling fixes the origin and preserves every orientation
    and collinearity test in the coefficient plane.
    """
    pts = list(points)
    scale = math.lcm(*(d for p in pts for d in (p.A.denominator, p.B.denominator))) if pts else 1
    return scale, [(int(p.A * scale), int(p.B * scale)) for p in pts]
