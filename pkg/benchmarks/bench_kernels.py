#!/usr/bin/env python3
"""Time the compiled kernel against the pure-Python fallback.

Usage:
  python benchmarks/bench_kernels.py
  python benchmarks/bench_kernels.py --grid 3 4 5 --repeat 5
"""

import argparse
import sys
import timeit

from linepat import kernels
from linepat.cellwalk import enumerate_faces
from linepat.geometry import integer_line
from linepat.lattice import generate, grid_spec
from linepat.subdivision import build


def best_of(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench(n: int, repeat: int) -> list[tuple[str, float, float]]:
    pts = generate(grid_spec(n))
    coeffs = [integer_line(p) for p in pts]
    rows = []
    for name, make in [
        ("line_orders", lambda b: lambda: kernels.line_orders(coeffs, b)),
        ("build (oracle)", lambda b: lambda: build(pts, b)),
        ("enumerate_faces (walk)", lambda b: lambda: enumerate_faces(pts, b)),
    ]:
        py = best_of(make("python"), repeat)
        cy = best_of(make("cython"), repeat)
        rows.append((name, py, cy))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if kernels._ckernel is None:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'grid':>4}  {'lines':>5}  {'operation':<24} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for n in args.grid:
        lines = (2 * n + 1) ** 2 - 1
        for name, py, cy in bench(n, args.repeat):
            print(f"{n:>4}  {lines:>5}  {name:<24} {py:9.4f} {cy:9.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
