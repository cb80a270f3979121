from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import coeff_points, rationals
from linepat.geometry import (
    ORIGIN,
    CoeffPoint,
    EuclidPoint,
    LineSide,
    Orientation,
    Transform2,
    apply_transform,
    as_fraction,
    cross,
    dist_product,
    foot_of_perpendicular,
    integer_line,
    integer_scale,
    intercepts,
    intersect,
    line_value,
    orientation,
    origin_side_of_line,
)


def test_origin_is_not_a_coefficient_point():
    with pytest.raises(ValueError):
        CoeffPoint(0, 0)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        CoeffPoint(0.5, 1)
    assert as_fraction("3/6") == Fraction(1, 2)


@pytest.mark.parametrize("p, q, expected", [
    ((1, 0), (0, 1), Orientation.LEFT),
    ((0, 1), (1, 0), Orientation.RIGHT),
    ((1, 0), (2, 0), Orientation.ON),
    ((1, 0), (-3, 0), Orientation.ON),
])
def test_orientation_examples(p, q, expected):
    assert orientation(CoeffPoint(*p), CoeffPoint(*q)) is expected


@given(coeff_points(), coeff_points())
def test_orientation_antisymmetric(p, q):
    swap = {Orientation.LEFT: Orientation.RIGHT, Orientation.RIGHT: Orientation.LEFT,
            Orientation.ON: Orientation.ON}
    assert orientation(q, p) is swap[orientation(p, q)]


@pytest.mark.parametrize("p, x, expected", [
    ((1, 0), (2, 0), LineSide.OPPOSITE_ORIGIN),
    ((1, 0), (1, 5), LineSide.ON_LINE),
    ((Fraction(3, 5), Fraction(4, 5)), (Fraction(3, 5), Fraction(4, 5)), LineSide.ON_LINE),
    ((2, 3), (0, 0), LineSide.SAME_AS_ORIGIN),
])
def test_origin_side(p, x, expected):
    assert origin_side_of_line(CoeffPoint(*p), EuclidPoint(*x)) is expected


def test_intercepts():
    assert intercepts(CoeffPoint(2, 3)) == (Fraction(1, 2), Fraction(1, 3))
    assert intercepts(CoeffPoint(1, 0)) == (1, None)
    assert intercepts(CoeffPoint(0, -4)) == (None, Fraction(-1, 4))


def test_intersect_examples():
    assert intersect(CoeffPoint(1, 0), CoeffPoint(0, 1)) == EuclidPoint(1, 1)
    assert intersect(CoeffPoint(1, 0), CoeffPoint(2, 0)) is None
    assert intersect(CoeffPoint(1, 0), CoeffPoint(-1, 0)) is None
    with pytest.raises(ValueError):
        intersect(CoeffPoint(1, 2), CoeffPoint(1, 2))


@given(coeff_points(), coeff_points(), rationals(2, 5))
def test_concurrent_duality(p1, p2, t):
    """Every point on the line through P1 and P2 names a line through L_P1 ∩ L_P2."""
    if p1 == p2 or cross(p1, p2) == 0:
        return
    v = intersect(p1, p2)
    assert line_value(p1, v) == 0 and line_value(p2, v) == 0
    za, zb = p1.A + t * (p2.A - p1.A), p1.B + t * (p2.B - p1.B)
    if (za, zb) != (0, 0):
        assert line_value(CoeffPoint(za, zb), v) == 0


@settings(max_examples=100)
@given(coeff_points(50, 50))
def test_dist_product_is_one(p):
    assert dist_product(p) == 1


def test_dist_product_examples():
    for p in [(1, 0), (3, 4), (Fraction(1, 2), 0)]:
        assert dist_product(CoeffPoint(*p)) == 1


def test_foot_of_perpendicular_is_on_line_and_closest():
    p = CoeffPoint(3, 4)
    f = foot_of_perpendicular(p)
    assert f == EuclidPoint(Fraction(3, 25), Fraction(4, 25))
    assert line_value(p, f) == 0


def test_singular_transform_rejected():
    with pytest.raises(ValueError):
        Transform2(1, 2, 2, 4)


def test_transform_examples():
    swap = Transform2(0, 1, 1, 0)
    assert apply_transform(swap, [CoeffPoint(1, 2)]) == [CoeffPoint(2, 1)]
    assert Transform2.identity()(CoeffPoint(3, -1)) == CoeffPoint(3, -1)


@given(coeff_points(), rationals(), st.tuples(*(rationals(3, 3) for _ in range(4))))
def test_transform_carries_lines_to_lines(p, s, entries):
    if entries[0] * entries[3] - entries[1] * entries[2] == 0:
        return
    m = Transform2(*entries)
    # a point of L_P, parametrised along the line
    f = foot_of_perpendicular(p)
    x = EuclidPoint(f.x - s * p.B, f.y + s * p.A)
    assert line_value(p, x) == 0
    assert line_value(m(p), m.map_euclid(x)) == 0


def test_integer_line_and_scale():
    assert integer_line(CoeffPoint(Fraction(1, 2), Fraction(-2, 3))) == (3, -4, 6)
    scale, pts = integer_scale([CoeffPoint(Fraction(1, 2), 1), CoeffPoint(Fraction(1, 3), -1)])
    assert scale == 6
    assert pts == [(3, 6), (2, -6)]
    assert ORIGIN == EuclidPoint(0, 0)
