#!/usr/bin/env python3
"""Benchmark the compiled subset-census kernel against the pure-Python
fallback on the edge-subset oracle's actual workloads.

Usage: python benchmarks/bench_subsets.py [--full]

--full adds the largest tree the kernel supports (25 vertices, 2^24
subsets), which takes minutes on the fallback.
"""

import argparse
import sys
import time

from espider._subsets import HAVE_COMPILED, subset_type_census
from espider.graphs import Spider, mn_tree, spider_to_tree


def path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def cases(full):
    yield "P_16 (path)", 16, path_edges(16)
    yield "P_18 (path)", 18, path_edges(18)
    yield "P_20 (path)", 20, path_edges(20)
    t = mn_tree(8)
    yield "M_8 tree (19 vertices)", t.n, sorted(t.edges)
    s = spider_to_tree(Spider([6, 5, 4, 3, 2, 1]))
    yield "S[6,5,4,3,2,1] (22 vertices)", s.n, sorted(s.edges)
    if full:
        t = mn_tree(11)
        yield "M_11 tree (25 vertices)", t.n, sorted(t.edges)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true")
    args = ap.parse_args()

    if not HAVE_COMPILED:
        print("compiled kernel not built; timing the fallback only",
              file=sys.stderr)

    print(f"{'case':<32}{'subsets':>10}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for name, n, edges in cases(args.full):
        t0 = time.perf_counter()
        a = subset_type_census(n, edges, engine="python")
        t_py = time.perf_counter() - t0
        if HAVE_COMPILED:
            t0 = time.perf_counter()
            b = subset_type_census(n, edges, engine="compiled")
            t_c = time.perf_counter() - t0
            assert a == b, f"engines disagree on {name}"
            ratio = f"{t_py / t_c:>9.1f}x"
            tc = f"{t_c:>11.3f}s"
        else:
            tc, ratio = f"{'-':>12}", f"{'-':>10}"
        print(f"{name:<32}{1 << len(edges):>10}{t_py:>11.3f}s{tc}{ratio}")


if __name__ == "__main__":
    main()
