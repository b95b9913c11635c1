#!/usr/bin/env python3
"""Compare the numba and pure-python kernel backends on the counting
workloads that dominate the verification suites.

    python benchmarks/bench_kernels.py [--repeat 3] [--heavy]

Each case is run once for warmup (billing JIT compilation to nobody), then
timed ``--repeat`` times; the best time is reported per backend along with
the numba speedup. ``--heavy`` adds the larger targets (16-vertex boolean
lattice census, squid n=5 full census).
"""

import argparse
import time

from chromsym.graphs import (
    boolean_lattice,
    cycle_graph,
    incomparability_graph,
    squid_graph,
)
from chromsym.kernels import set_backend
from chromsym.stable import count_of_type, count_types
from chromsym.verify import strongly_nice_sweep


def cases(heavy):
    sq4 = squid_graph(4)
    sq5 = squid_graph(5)
    yield "full census, squid n=4 (11 vertices)", lambda: count_types(sq4)
    yield "full census, 10-cycle", lambda: count_types(cycle_graph(10))
    yield "fixed type (5,5,4), squid n=5 (14 vertices)", lambda: count_of_type(sq5, (5, 5, 4))
    yield "fixed type (6,4,4), squid n=5", lambda: count_of_type(sq5, (6, 4, 4))
    yield "strongly-nice sweep, all labeled graphs <= 5 vertices", (
        lambda: strongly_nice_sweep(5)
    )
    if heavy:
        incb4 = incomparability_graph(boolean_lattice(4))
        yield "full census, 14-cycle", lambda: count_types(cycle_graph(14))
        yield "full census, inc(B_4) (16 vertices)", lambda: count_types(incb4)
        yield "full census, squid n=5 (14 vertices)", lambda: count_types(sq5)


def best_time(fn, repeat):
    fn()  # warmup: JIT compile and populate caches
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--heavy", action="store_true")
    args = parser.parse_args()

    rows = []
    for name, fn in cases(args.heavy):
        timings = {}
        for backend in ("numba", "python"):
            set_backend(backend)
            timings[backend] = best_time(fn, args.repeat)
        rows.append((name, timings["numba"], timings["python"]))
    set_backend("auto")

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'numba':>10}  {'python':>10}  {'speedup':>8}")
    for name, tn, tp in rows:
        print(f"{name:<{width}}  {tn * 1000:>8.2f}ms  {tp * 1000:>8.2f}ms  {tp / tn:>7.1f}x")


if __name__ == "__main__":
    main()
