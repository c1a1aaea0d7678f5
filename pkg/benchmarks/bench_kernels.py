"""Compare the compiled scan kernel against the pure-Python one.

Each case scans a window of non-edge ranks of a saturated host, so the
kernels do the same work the saturation checker does.  Reported rate is
ranks per second over the window; the last column is compiled over pure.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --window 50000
"""

import argparse
import time
from math import comb

from bergesat._kernels_py import comb_rank
from bergesat.builders import (
    build_cycle_cliques,
    build_path_tree,
    build_star_tightcycle,
    build_triangle_star,
)
from bergesat.kernels import has_compiled, scan_chunk
from bergesat.patterns import cycle, path, star, triangle


def cases():
    yield "path-tree k=3 m=10 / path:10", build_path_tree(3, 10), path(10)
    yield "path-tree k=4 m=10 / path:10", build_path_tree(4, 10), path(10)
    yield "path-tree k=6 m=10 / path:10", build_path_tree(6, 10), path(10)
    yield "triangle-star k=3 n=12 / cycle:3", build_triangle_star(3, 12), triangle()
    yield "cycle-cliques k=3 m=6 n=17 / cycle:6", build_cycle_cliques(3, 6, 17), cycle(6)
    yield "star-tightcycle k=4 n=16 / star:4", build_star_tightcycle(4, 16), star(4)


def run_case(h, f, window, backend):
    edge_ranks = sorted(comb_rank(e, h.n, h.k) for e in h.edges)
    hi = min(window, comb(h.n, h.k))
    t0 = time.perf_counter()
    result = scan_chunk(h.n, h.k, h.edges, f, 0, hi, edge_ranks, backend=backend)
    dt = time.perf_counter() - t0
    return result, hi, dt


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--window", type=int, default=20000,
                    help="number of ranks to scan per case (default 20000)")
    args = ap.parse_args()

    backends = ["py"]
    if has_compiled():
        backends.append("c")
    else:
        print("compiled kernel not built; timing the pure backend only\n")

    header = f"{'case':44s} {'ranks':>7s} {'pure':>9s} {'compiled':>9s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, h, f in cases():
        times = {}
        results = {}
        for b in backends:
            results[b], hi, times[b] = run_case(h, f, args.window, b)
        if len(backends) == 2 and results["py"] != results["c"]:
            raise SystemExit(f"backend disagreement on {name}: {results}")
        pure = f"{hi / times['py']:>7.0f}/s"
        if "c" in times:
            comp = f"{hi / times['c']:>7.0f}/s"
            speed = f"{times['py'] / times['c']:>7.1f}x"
        else:
            comp = f"{'-':>9s}"
            speed = f"{'-':>8s}"
        print(f"{name:44s} {hi:>7d} {pure:>9s} {comp:>9s} {speed:>8s}")


if __name__ == "__main__":
    main()
