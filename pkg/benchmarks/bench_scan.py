"""Timing comparison of the scan kernel backends.

Runs the windowed ratio scan and the compensated prefix sum on every
importable backend and reports best-of-N wall times per size, with the
speedup of the compiled kernel over the numpy one when both exist.

Usage: python benchmarks/bench_scan.py [--sizes 1025 4097 8193] [--repeats 5]
"""

import argparse
import time

import numpy as np

from pwcis.kernels import available_backends, get_backend
from pwcis.muckenhoupt import power_law_sequence


def best_of(repeats, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        if dt < best:
            best = dt
    return best, result


def weight_prefixes(backend, half: int):
    d = power_law_sequence(0.5, -half, half).values
    pa = backend.kahan_prefix(d)
    pb = backend.kahan_prefix(1.0 / d)
    return d, pa, pb


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1025, 4097, 8193],
                    help="sequence lengths (window cap equals the length)")
    ap.add_argument("--repeats", type=int, default=5, help="best-of-N timing")
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    if len(backends) == 1:
        print("compiled extension not importable; timing the numpy kernel only")

    header = f"{'size':>8} {'kernel':<14}" + "".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))

    for size in args.sizes:
        half = (size - 1) // 2
        rows = {"ratio_scan": {}, "kahan_prefix": {}}
        results = {}
        for name in backends:
            mod = get_backend(name)
            d, pa, pb = weight_prefixes(mod, half)
            t_scan, res = best_of(
                args.repeats, mod.window_ratio_scan, pa, pb, 1.0, size
            )
            t_prefix, _ = best_of(args.repeats, mod.kahan_prefix, d)
            rows["ratio_scan"][name] = t_scan
            rows["kahan_prefix"][name] = t_prefix
            results[name] = res

        for kernel, times in rows.items():
            cells = "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
            line = f"{size:>8} {kernel:<14}{cells}"
            if len(backends) == 2:
                speed = times["python"] / times["cython"]
                line += f"   x{speed:.1f}"
            print(line)

        if len(backends) == 2:
            a, b = (results[n] for n in backends)
            agree = a[0] == b[0] and a[1:] == b[1:]
            print(f"{'':>8} scan results identical: {agree}")

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
