#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the three batch kernels on the workloads the self-check suite leans on
(full density profiles, the bit-decomposition profiles, and oracle span
accumulation) and prints a per-kernel timing table with speedups.

Usage: python benchmarks/bench_kernels.py [--n 65536] [--repeat 3]
"""

import argparse
import time

from cuberow.kernels import available_backends


def _spans_workload(n: int):
    # Same shape of work the oracle does: one span per hypercube wire.
    dims = n.bit_length() - 1
    step = dims + 1
    lows, highs = [], []
    for dim in range(1, dims + 1):
        half = 1 << (dim - 1)
        for node in range(n):
            if node & half:
                continue
            lows.append((node + 1) * step)
            highs.append((node | half) * step)
    return n * step + 1, lows, highs


def _time(func, *args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2**16, help="row size (power of two)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    n = args.n
    if n < 2 or n & (n - 1):
        parser.error(f"--n must be a power of two, got {n}")

    backends = available_backends()
    if len(backends) < 2:
        print("note: compiled backend not built; timing pure-python only")

    num_cuts, lows, highs = _spans_workload(n)
    workloads = [
        ("density_profile", lambda mod: mod.density_profile(n)),
        ("bitsum_profile", lambda mod: mod.bitsum_profile(n)),
        ("accumulate_spans", lambda mod: mod.accumulate_spans(num_cuts, lows, highs)),
    ]

    print(f"n = {n} ({n.bit_length() - 1} dimensions, {len(lows)} wires)")
    header = f"{'kernel':<18}" + "".join(f"{name:>16}" for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, run in workloads:
        results = {}
        for backend_name, module in backends.items():
            results[backend_name] = _time(run, module, repeat=args.repeat)
        line = f"{name:<18}" + "".join(
            f"{results[b] * 1000:>14.1f}ms" for b in backends
        )
        if len(backends) == 2:
            pure, compiled = results["pure-python"], results["compiled"]
            line += f"{pure / compiled:>9.1f}x"
        print(line)

    # The two backends must agree bit for bit on everything they compute.
    mods = list(backends.values())
    if len(mods) == 2:
        small = min(n, 2**12)
        cuts, lo2, hi2 = _spans_workload(small)
        assert mods[0].density_profile(small) == mods[1].density_profile(small)
        assert mods[0].bitsum_profile(small) == mods[1].bitsum_profile(small)
        assert mods[0].accumulate_spans(cuts, lo2, hi2) == mods[1].accumulate_spans(cuts, lo2, hi2)
        print("backend agreement verified")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
