#!/usr/bin/env python3
"""Benchmark the compiled coverage kernel against the pure-Python twin.

The pair-product loop is the package's only hot spot: a coverage report
multiplies every ordered pair of window members.  This script times both
kernels on the same member arrays for a growing report window, checks the
outputs byte for byte, and prints the speedup.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--windows 8,12,16,20] [--repeat 3]
"""

import argparse
import time
from array import array

from bicyclic import IndexSet, RowData, TwoSidedI, Upper, enumerate_window
from bicyclic import _cover_py
from bicyclic.coverage import default_pair_bound

try:
    from bicyclic import _cover as _cover_ext
except ImportError:
    _cover_ext = None


def member_arrays(spec, window):
    bound = default_pair_bound(spec, window)
    members = sorted(e for e in enumerate_window(spec, bound) if e.j <= window)
    xi = array("q", [e.i for e in members])
    xj = array("q", [e.j for e in members])
    return xi, xj


def best_time(kernel, xi, xj, window, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        grid = kernel.cover_grid(xi, xj, window)
        best = min(best, time.perf_counter() - start)
    return best, bytes(grid)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--windows", default="8,12,16,20")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    windows = [int(w) for w in args.windows.split(",")]

    dense = TwoSidedI(
        0, 2, 1, frozenset({0, 1}), frozenset({0}),
        frozenset(), frozenset(),
    )
    sparse = Upper(frozenset(), IndexSet(frozenset(), frozenset({0}), 0, 1), RowData(0))

    if _cover_ext is None:
        print("compiled kernel not built; showing pure timings only")
    header = f"{'spec':8s} {'window':>6s} {'members':>8s} {'pairs':>12s} {'pure (s)':>10s}"
    if _cover_ext is not None:
        header += f" {'compiled (s)':>13s} {'speedup':>8s}"
    print(header)

    for name, spec in (("dense", dense), ("upper", sparse)):
        for window in windows:
            xi, xj = member_arrays(spec, window)
            pure_t, pure_grid = best_time(_cover_py, xi, xj, window, args.repeat)
            line = f"{name:8s} {window:6d} {len(xi):8d} {len(xi) ** 2:12d} {pure_t:10.4f}"
            if _cover_ext is not None:
                ext_t, ext_grid = best_time(_cover_ext, xi, xj, window, args.repeat)
                assert ext_grid == pure_grid, "kernels disagree"
                line += f" {ext_t:13.6f} {pure_t / ext_t:7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
