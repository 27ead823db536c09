"""Timing comparison of the compiled kernels against the pure Python twins.

Run as a script::

    python benchmarks/bench_backends.py [--repeats N]

Each kernel runs on a fixed workload with both backends; the table shows
the best wall time per backend and the speedup.  Exits nonzero if any
kernel pair disagrees on its result.
"""

import argparse
import random
import sys
import time

from ordalg import as_lattice, direct_product, fixture, from_sectional, synthesize_sectional
from ordalg._kernels import _core_py

try:
    from ordalg._kernels import _core_c
except ImportError:
    _core_c = None


def best_ms(fn, repeats):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = (time.perf_counter() - t0) * 1000.0
        best = dt if best is None else min(best, dt)
    return best


def workloads():
    rng = random.Random(5)
    n = 60
    dag = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.15:
                dag[i] |= 1 << j
    yield "closure n=60", "closure", (n, dag)

    cube = fixture("bool5").poset
    yield "lattice tables n=32", "lattice_tables", (cube.n, list(cube.up), list(cube.down))
    yield "star table n=32", "poset_star_table", (cube.n, list(cube.up), list(cube.down))

    prod = direct_product(fixture("bowtie").poset, fixture("pentagon").poset)
    yield "star table n=30 (non-lattice)", "poset_star_table", \
        (prod.n, list(prod.up), list(prod.down))

    chain = fixture("chain40").poset
    lat = as_lattice(chain)
    cand = from_sectional(lat, synthesize_sectional(lat))
    args = (chain.n, list(chain.up), chain.top,
            lat.flat_join(), cand.mult.flat(), cand.imp.flat())
    yield "residuation scan n=40", "rrl_scan", args
    yield "divisibility scan n=40", "divisibility_scan", \
        (chain.n, lat.flat_join(), cand.mult.flat(), cand.imp.flat())

    yield "enumerate posets n=7", "enum_orders", (7, False)
    yield "enumerate lattices n=8", "enum_orders", (8, True)

    # the operator scan walks subset pairs, so keep the carrier small
    chain10 = fixture("chain10").poset
    ltab = _core_py.subset_l_table(chain10.n, list(chain10.down))
    yield "subset lower table n=10", "subset_l_table", (chain10.n, list(chain10.down))
    yield "subset operator scan n=10", "canon_subset_scan", (chain10.n, ltab, chain10.top)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args(argv)

    if _core_c is None:
        print("compiled backend not built; nothing to compare", file=sys.stderr)
        return 1

    width = max(len(label) for label, _, _ in workloads())
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  speedup")
    mismatches = 0
    for label, kernel, call_args in workloads():
        py_fn = getattr(_core_py, kernel)
        c_fn = getattr(_core_c, kernel)
        py_out = py_fn(*call_args)
        c_out = c_fn(*call_args)
        if isinstance(py_out, (list, tuple)) and isinstance(c_out, (list, tuple)):
            agree = list(py_out) == list(c_out)
        else:
            agree = py_out == c_out
        if not agree:
            mismatches += 1
            print(f"{label:<{width}}  RESULTS DISAGREE")
            continue
        py_ms = best_ms(lambda: py_fn(*call_args), args.repeats)
        c_ms = best_ms(lambda: c_fn(*call_args), args.repeats)
        ratio = py_ms / c_ms if c_ms > 0 else float("inf")
        print(f"{label:<{width}}  {py_ms:>8.2f}ms  {c_ms:>8.3f}ms  {ratio:>6.1f}x")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
