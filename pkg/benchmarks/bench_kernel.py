#!/usr/bin/env python3
"""Benchmark: compiled obstruction kernel vs the pure-Python twin.

Two measurements:
  1. raw kernel throughput on the exact call trace recorded from solving
     the complete graph on six vertices (the hardest corpus instance),
  2. end-to-end solver time on that instance and on the full connected
     n <= 6 corpus, with each backend injected.

Run:  python benchmarks/bench_kernel.py
"""

from __future__ import annotations

import time

from lssrings import _purekernel, kernel
from lssrings.graphs import complete
from lssrings.pmd import pmd

try:
    from lssrings import _fastkernel
except ImportError:
    _fastkernel = None


def record_trace(g):
    """Capture every kernel call made while solving g."""
    trace = []
    real = kernel.obstruction_free

    def recorder(mate, host_u, host_v):
        trace.append((list(mate), list(host_u), list(host_v)))
        return real(mate, host_u, host_v)

    kernel.obstruction_free = recorder
    try:
        pmd(g)
    finally:
        kernel.obstruction_free = real
    return trace


def time_replays(impl, trace, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for mate, hu, hv in trace:
            impl(mate, hu, hv)
        best = min(best, time.perf_counter() - t0)
    return best


def time_solver(impl, graphs):
    kernel.obstruction_free = impl
    try:
        t0 = time.perf_counter()
        for g in graphs:
            pmd(g)
        return time.perf_counter() - t0
    finally:
        kernel.obstruction_free = kernel_default


kernel_default = kernel.obstruction_free


def corpus_graphs():
    try:
        import networkx as nx
        from networkx.generators.atlas import graph_atlas_g
        from lssrings.graphs import Graph

        out = []
        for gg in graph_atlas_g()[1:]:
            n = gg.number_of_nodes()
            if 1 <= n <= 6 and nx.is_connected(gg):
                out.append(Graph.from_edges(
                    n, [(u + 1, v + 1) for u, v in gg.edges()]))
        return out
    except ImportError:
        return [complete(n) for n in range(2, 7)]


def main():
    k6 = complete(6)
    trace = record_trace(k6)
    print(f"recorded {len(trace)} kernel calls from one K6 solve")

    t_pure = time_replays(_purekernel.obstruction_free, trace)
    print(f"pure-python kernel : {t_pure * 1e3:8.1f} ms "
          f"({t_pure / len(trace) * 1e6:6.2f} us/call)")
    if _fastkernel is not None:
        t_fast = time_replays(_fastkernel.obstruction_free, trace)
        print(f"compiled kernel    : {t_fast * 1e3:8.1f} ms "
              f"({t_fast / len(trace) * 1e6:6.2f} us/call)  "
              f"speedup x{t_pure / t_fast:.1f}")
    else:
        print("compiled kernel    : not built")

    graphs = corpus_graphs()
    t_solver_pure = time_solver(_purekernel.obstruction_free, graphs)
    print(f"corpus solve, pure : {t_solver_pure:8.2f} s ({len(graphs)} graphs)")
    if _fastkernel is not None:
        t_solver_fast = time_solver(_fastkernel.obstruction_free, graphs)
        print(f"corpus solve, fast : {t_solver_fast:8.2f} s  "
              f"speedup x{t_solver_pure / t_solver_fast:.2f}")


if __name__ == "__main__":
    main()
