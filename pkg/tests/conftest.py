import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from linepat import kernels
from linepat.cellwalk import FaceWalk
from linepat.geometry import CoeffPoint

BACKENDS = ["python"] + (["cython"] if kernels._ckernel is not None else [])


def rationals(bound: int = 4, max_den: int = 4):
    return st.builds(
        lambda num, den: Fraction(num, den),
        st.integers(-bound * max_den, bound * max_den),
        st.integers(1, max_den),
    )


def coeff_points(bound: int = 4, max_den: int = 4):
    return st.tuples(rationals(bound, max_den), rationals(bound, max_den)) \
        .filter(lambda t: t != (0, 0)).map(lambda t: CoeffPoint(*t))


def point_sets(min_size: int = 1, max_size: int = 7):
    return st.lists(coeff_points(3, 3), min_size=min_size, max_size=max_size, unique=True)


def on_segment(p: CoeffPoint, q: CoeffPoint, z: CoeffPoint) -> bool:
    """``z`` on the closed segment ``pq`` of the coefficient plane."""
    if (q.A - p.A) * (z.B - p.B) - (q.B - p.B) * (z.A - p.A) != 0:
        return False
    dot = (z.A - p.A) * (q.A - p.A) + (z.B - p.B) * (q.B - p.B)
    return 0 <= dot <= (q.A - p.A) ** 2 + (q.B - p.B) ** 2


def consecutive_sides_violation(points, walk: FaceWalk):
    """First consecutive pair breaking the segment condition, else None.

    Equal D values: every point of S on the line through the pair lies on
    the segment between them.  Unequal D values: the open segment holds no
    point of S.
    """
    sides = walk.sides
    n = len(sides)
    for k in range(n):
        (p, d0), (q, d1) = sides[k], sides[(k + 1) % n]
        collinear = [z for z in points
                     if (q.A - p.A) * (z.B - p.B) - (q.B - p.B) * (z.A - p.A) == 0]
        if d0 == d1:
            if any(not on_segment(p, q, z) for z in collinear):
                return k
        elif any(z not in (p, q) and on_segment(p, q, z) for z in collinear):
            return k
    return None


def strictly_clockwise_convex(vertices) -> bool:
    n = len(vertices)
    if n < 3:
        return False
    for k in range(n):
        a, b, c = vertices[k], vertices[(k + 1) % n], vertices[(k + 2) % n]
        if (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) >= 0:
            return False
    return True


def d_string(ds) -> str:
    return "".join(d.value for d in ds)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, text = results[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")
