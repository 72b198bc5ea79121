"""Compare the compiled and pure-Python matching kernels.

Generates seeded random graphs with planted motif copies, then times
anchored existence checks and full counting enumerations over every
target-type vertex with both kernels.

Usage: python benchmarks/bench_kernels.py [--trials N] [--n-max N] [--seed S]
"""

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import genutil  # noqa: E402

from ifcs import _kernel_py  # noqa: E402
from ifcs.matching import Matcher  # noqa: E402

try:
    from ifcs import _kernel_cy
except ImportError:
    _kernel_cy = None


def run_python(g, plan, pool):
    start = time.perf_counter()
    total = 0
    for v in pool:
        _kernel_py.exists_around(g, plan, v)
        raw, _ = _kernel_py.count_around(g, plan, v, None)
        total += raw
    return time.perf_counter() - start, total


def run_cython(g, plan, pool):
    ctx = _kernel_cy.build_context(g, plan)
    start = time.perf_counter()
    total = 0
    for v in pool:
        _kernel_cy.exists_around(ctx, v)
        raw, _ = _kernel_cy.count_around(ctx, v, None)
        total += raw
    return time.perf_counter() - start, total


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=30)
    parser.add_argument("--n-max", type=int, default=400)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _kernel_cy is None:
        print("compiled kernel not available; nothing to compare")
        return 1

    speedups = []
    py_total = cy_total = 0.0
    print("%-8s %6s %6s %10s %12s %12s %8s" % (
        "trial", "n", "|T|", "raw", "python_ms", "cython_ms", "speedup"))
    for trial in range(args.trials):
        rng = random.Random(args.seed + trial)
        g, motif, _k = genutil.planted_instance(rng, n_max=args.n_max)
        plan = Matcher(g, motif).plan
        t_code = g.label_code[motif.target_type()]
        pool = g.vertices_of_type(t_code)
        t_py, raw_py = run_python(g, plan, pool)
        t_cy, raw_cy = run_cython(g, plan, pool)
        assert raw_py == raw_cy, "kernels disagree"
        py_total += t_py
        cy_total += t_cy
        ratio = t_py / t_cy if t_cy > 0 else float("inf")
        speedups.append(ratio)
        print("%-8d %6d %6d %10d %12.3f %12.3f %7.2fx" % (
            trial, g.n_vertices, len(pool), raw_py,
            t_py * 1e3, t_cy * 1e3, ratio))

    print("\ntotals: python %.1f ms, cython %.1f ms" % (py_total * 1e3, cy_total * 1e3))
    print("speedup: median %.2fx, overall %.2fx" % (
        statistics.median(speedups), py_total / cy_total))
    return 0


if __name__ == "__main__":
    sys.exit(main())
