import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BACKENDS
from linepat import _pykernel, kernels
from linepat.geometry import CoeffPoint, integer_line

needs_cython = pytest.mark.skipif(kernels._ckernel is None, reason="compiled kernel not built")

TRIANGLE_XS, TRIANGLE_YS = [1, 0, 1], [0, 1, 1]


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("backend", BACKENDS)
def test_triangle_walk(backend):
    w = kernels.make_walker(TRIANGLE_XS, TRIANGLE_YS, backend)
    assert w.next_side(0, 2, _pykernel.R) == (1, _pykernel.L)
    assert w.next_side(1, 0, _pykernel.R) == (2, _pykernel.R)
    assert w.walk(0, 2, _pykernel.R, 6) == [(0, 1), (2, 0), (1, 1)]


@pytest.mark.parametrize("backend", BACKENDS)
def test_parallel_and_unbounded(backend):
    w = kernels.make_walker([1, 2, 0], [0, 0, 1], backend)
    with pytest.raises(ValueError):
        w.next_side(0, 1, 1)
    # two parallel verticals and one horizontal: no bounded cell
    for d in (0, 1):
        assert w.walk(0, 2, d, 6) is None
        assert w.walk(2, 1, d, 6) is None


@pytest.mark.parametrize("backend", BACKENDS)
def test_unclosed_walk_raises(backend):
    w = kernels.make_walker(TRIANGLE_XS, TRIANGLE_YS, backend)
    with pytest.raises(kernels.WalkError):
        w.walk(0, 2, 1, 1)


def _random_ints(rng, n, bound):
    pts = set()
    while len(pts) < n:
        p = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if p != (0, 0):
            pts.add(p)
    pts = sorted(pts)
    return [x for x, _ in pts], [y for _, y in pts]


@needs_cython
def test_walker_parity_random():
    rng = random.Random(7)
    for _ in range(150):
        xs, ys = _random_ints(rng, rng.randint(2, 9), 6)
        py = kernels.make_walker(xs, ys, "python")
        cy = kernels.make_walker(xs, ys, "cython")
        assert type(cy).__module__.endswith("_ckernel")
        for k in range(len(xs)):
            for k1 in range(len(xs)):
                if k == k1 or xs[k] * ys[k1] - ys[k] * xs[k1] == 0:
                    continue
                for d in (0, 1):
                    assert py.next_side(k, k1, d) == cy.next_side(k, k1, d)


@needs_cython
@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 5)),
                min_size=1, max_size=10, unique=True))
def test_line_orders_parity(coeffs):
    coeffs = [c for c in coeffs if c[:2] != (0, 0)]
    assert _pykernel.line_orders(coeffs) == kernels._ckernel.line_orders(coeffs)


@pytest.mark.parametrize("backend", BACKENDS)
def test_line_orders_concurrent_lines_share_a_vertex(backend):
    # x = 1, y = 1 and x + y = 2 all pass through (1, 1)
    coeffs = [integer_line(CoeffPoint(*p)) for p in [(1, 0), (0, 1), (1, 1)]]
    coeffs[2] = (1, 1, 2)
    verts, orders = kernels.line_orders(coeffs, backend)
    assert verts == [(1, 1, 1)]
    assert orders == [[0], [0], [0]]


@needs_cython
def test_out_of_range_input_falls_back():
    big = 1 << 40
    w = kernels.make_walker([big, 0, big], [0, big, big])
    assert isinstance(w, _pykernel.Walker)
    assert w.walk(0, 2, 1, 6) == [(0, 1), (2, 0), (1, 1)]
    coeffs = [(big, 0, 1), (0, big, 1), (big, big, 2)]
    assert kernels.line_orders(coeffs) == _pykernel.line_orders(coeffs)


@needs_cython
def test_compiled_walker_rejects_large_coordinates_directly():
    with pytest.raises(OverflowError):
        kernels._ckernel.Walker([1 << 40], [0])


def test_environment_switch_forces_fallback():
    env = dict(os.environ, LINEPAT_PURE_PYTHON="1")
    code = "from linepat import kernels; print(kernels.BACKEND, type(kernels.make_walker([1], [0])).__module__)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True).stdout
    assert out.split() == ["python", "linepat._pykernel"]
