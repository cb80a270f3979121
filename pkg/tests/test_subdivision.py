from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import point_sets, strictly_clockwise_convex
from linepat.cellwalk import enumerate_faces
from linepat.geometry import ORIGIN, CoeffPoint, EuclidPoint, line_value
from linepat.lattice import PointSet, fibonacci_triangle, generate, grid_spec, pentagon_counterexample
from linepat.subdivision import (
    ARC,
    build,
    census,
    face_containing,
    two_sided_unbounded_count,
)

# frozen oracle values
GRID_CENSUS = {1: {3: 12, 4: 1}, 2: {3: 92, 4: 61}, 3: {3: 364, 4: 289}, 4: {3: 988, 4: 893}}


def P(a, b):
    return CoeffPoint(a, b)


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        build([])


def test_single_line():
    sub = build([P(1, 0)])
    assert census(sub) == {}
    assert len(sub.faces) == 2
    assert sub.euler_characteristic() == 2


def test_two_crossing_lines():
    sub = build([P(1, 0), P(0, 1)])
    assert census(sub) == {}
    assert len(sub.unbounded_faces()) == 4
    assert two_sided_unbounded_count(sub) == 4


def test_parallel_lines():
    sub = build([P(1, 0), P(2, 0), P(-1, 0)])
    assert census(sub) == {}
    assert len(sub.faces) == 4
    assert sub.euler_characteristic() == 2


def test_triangle():
    sub = build([P(1, 0), P(0, 1), P(1, 1)])
    assert census(sub) == {3: 1}
    assert two_sided_unbounded_count(sub) == 3
    (tri,) = sub.bounded_faces()
    assert set(tri.vertices) == {EuclidPoint(1, 0), EuclidPoint(0, 1), EuclidPoint(1, 1)}
    assert strictly_clockwise_convex(tri.vertices)
    home = face_containing(sub, ORIGIN)
    assert not home.bounded and home.side_lines == frozenset([P(1, 0), P(0, 1), P(1, 1)])


def test_concurrent_lines_count_sides_not_edges():
    # three lines through (1, 1) plus a fourth cutting them
    sub = build([P(1, 0), P(0, 1), P(Fraction(1, 2), Fraction(1, 2)), P(-1, 3)])
    assert len(sub.vertices) == 4
    for f in sub.bounded_faces():
        assert f.side_count == len(f.vertices)
    assert sub.euler_characteristic() == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_grid_census_frozen(n):
    sub = build(generate(grid_spec(n)))
    assert census(sub) == GRID_CENSUS[n]
    assert sub.euler_characteristic() == 2


def test_grid_census_same_on_both_backends(backend):
    assert census(build(generate(grid_spec(3)), backend)) == GRID_CENSUS[3]


def test_counterexample_censuses():
    assert census(build(pentagon_counterexample())) == {3: 12, 4: 5, 5: 1}
    assert census(build(fibonacci_triangle(2))) == {3: 2, 4: 1}
    assert census(build(fibonacci_triangle(3))) == {3: 8, 4: 3, 5: 1}
    assert census(build(fibonacci_triangle(4))) == {3: 31, 4: 18, 6: 1}


def test_face_containing():
    sub = build(generate(grid_spec(1)))
    home = face_containing(sub, ORIGIN)
    assert home.bounded and home.side_count == 4
    with pytest.raises(ValueError):
        face_containing(sub, EuclidPoint(1, 0))
    far = face_containing(sub, EuclidPoint(100, 3))
    assert not far.bounded


@settings(max_examples=50, deadline=None)
@given(point_sets(1, 7))
def test_subdivision_invariants(points):
    sub = build(points)
    assert sub.euler_characteristic() == 2
    for h in range(len(sub.he_next)):
        assert sub.he_origin[sub.he_next[h]] == sub.he_origin[sub.twin(h)]
    for f in sub.bounded_faces():
        assert ARC not in (sub.he_line[h] for h in f.half_edges)
        assert strictly_clockwise_convex(f.vertices)
        assert f.side_count == len(f.vertices) == len(f.side_cycle)
        # vertex k is where side k meets side k + 1
        for k, v in enumerate(f.vertices):
            assert line_value(f.side_cycle[k], v) == 0
            assert line_value(f.side_cycle[(k + 1) % f.side_count], v) == 0


@settings(max_examples=50, deadline=None)
@given(point_sets(2, 7))
def test_walk_agrees_with_oracle(points):
    sub = build(points)
    oracle = {(frozenset(f.vertices), f.side_lines) for f in sub.bounded_faces()}
    walked = {(frozenset(w.vertices), frozenset(w.lines)) for w in enumerate_faces(points)}
    assert walked == oracle


def test_enumerate_faces_grid_matches_oracle():
    pts = generate(grid_spec(4))
    walked = enumerate_faces(pts)
    assert len(walked) == 1881
    sub = build(pts)
    assert {w.key() for w in walked} == {
        tuple(f.vertices[f.vertices.index(min(f.vertices)):] + f.vertices[:f.vertices.index(min(f.vertices))])
        for f in sub.bounded_faces()}


def test_origin_flag_matches_point_location():
    pts = PointSet.of([(1, 1), (-1, 1), (0, -1), (2, 3)])
    sub = build(pts)
    home = face_containing(sub, ORIGIN)
    flagged = [w for w in enumerate_faces(pts) if w.contains_origin]
    assert len(flagged) == 1 and frozenset(flagged[0].lines) == home.side_lines
