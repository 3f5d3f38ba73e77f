#!/usr/bin/env python3
"""Time the exact-search backends against each other.

The numba kernel scans all vertex subsets as bitmasks with best-size
pruning; the pure-Python path walks subsets in ascending cardinality.
Run:

    python3 benchmarks/bench_oracle.py
"""

from __future__ import annotations

import time

from leafspan import exact_u, h_graph, random_connected, square_of_cycle
from leafspan.oracle import HAVE_NUMBA


def cycle_graph(n):
    from leafspan import Graph

    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


CASES = [
    ("C14^2", square_of_cycle(14)),
    ("C16 (worst case: large dominating set)", cycle_graph(16)),
    ("H_2 (12 vertices)", h_graph(2)),
    ("random n=15 deg 3..5", random_connected(15, 3, 5, seed=11)),
    ("random n=16 deg 2..6", random_connected(16, 2, 6, seed=12)),
]


def bench(backend: str, repeats: int = 3) -> list[float]:
    times = []
    for _, g in CASES:
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            exact_u(g, backend=backend)
            best = min(best, time.perf_counter() - t0)
        times.append(best)
    return times


def main() -> None:
    backends = ["python"] + (["numba"] if HAVE_NUMBA else [])
    if HAVE_NUMBA:
        exact_u(square_of_cycle(6), backend="numba")  # compile outside timing
    results = {b: bench(b) for b in backends}
    width = max(len(name) for name, _ in CASES)
    header = f"{'case':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for i, (name, g) in enumerate(CASES):
        row = f"{name:<{width}}  "
        for b in backends:
            row += f"{results[b][i] * 1000:>10.2f}ms"
        if len(backends) == 2 and results['numba'][i] > 0:
            row += f"{results['python'][i] / results['numba'][i]:>9.1f}x"
        print(row)
    for b in backends:
        # answers must agree between backends
        assert [exact_u(g, backend=b) for _, g in CASES] == [
            exact_u(g, backend=backends[0]) for _, g in CASES
        ]


if __name__ == "__main__":
    main()
