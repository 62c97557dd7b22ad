#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot kernels of the Monte Carlo core (multi-source BFS,
per-node entry-path BFS, entry-path counting) plus the connectivity
check on one representative model graph, and prints per-kernel speedups.

Usage:
    python benchmarks/bench_kernels.py [--n1 5000] [--n2 500] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bridgegap import ModelParams, gen_model
from bridgegap import _purepy

try:
    from bridgegap import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n1", type=int, default=5000)
    parser.add_argument("--p1", type=float, default=0.002)
    parser.add_argument("--n2", type=int, default=500)
    parser.add_argument("--p2", type=float, default=0.02)
    parser.add_argument("--bridges", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    params = ModelParams(
        n1=args.n1, p1=args.p1, n2=args.n2, p2=args.p2,
        bridge_count=args.bridges, seed=args.seed,
    )
    g = gen_model(params)
    print(f"graph: n={g.n} edges={g.num_edges} (|E1|,|E2|,|B|)={g.edge_class_counts()}")

    sources = np.arange(g.n1, g.n, dtype=np.int32)
    probe_nodes = list(range(0, g.n1, max(1, g.n1 // 200)))
    count_sources = list(range(0, g.n1, max(1, g.n1 // 50)))

    tasks = {
        "multi_source_bfs": lambda mod: mod.multi_source_bfs(g.indptr, g.indices, sources, g.n),
        "entry_path_bfs (200 nodes)": lambda mod: [
            mod.entry_path_bfs(g.indptr, g.indices, g.n1, u) for u in probe_nodes
        ],
        "count_entry_paths (l<=3, 50 nodes)": lambda mod: [
            mod.count_entry_paths(g.indptr, g.indices, g.n1, u, 3, 10**9) for u in count_sources
        ],
        "connected_within (full graph)": lambda mod: mod.connected_within(
            g.indptr, g.indices, np.arange(g.n, dtype=np.int32), g.n
        ),
    }

    print(f"{'kernel':<36} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, task in tasks.items():
        t_py = best_of(lambda: task(_purepy), args.repeat)
        if _speedups is not None:
            t_c = best_of(lambda: task(_speedups), args.repeat)
            print(f"{name:<36} {t_py * 1e3:>8.2f}ms {t_c * 1e3:>8.2f}ms {t_py / t_c:>7.1f}x")
        else:
            print(f"{name:<36} {t_py * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
    if _speedups is None:
        print("compiled kernels unavailable; showing pure-Python timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
