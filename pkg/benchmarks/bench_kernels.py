#!/usr/bin/env python3
"""Benchmark the compiled RK4 kernel against the pure-numpy fallback.

Runs the lab-frame integrator on the default three-level system and reports
wall time, throughput, and the speedup, after checking that both kernels
produce the same trajectory.
"""
import argparse
import importlib
import time

import numpy as np

from multidecay import _kernels_py
from multidecay._backend import KERNEL_BACKEND


def run(kernel, rates, omega_bar, initial, dt, n_steps, repeats):
    best = float("inf")
    history = None
    for _ in range(repeats):
        start = time.perf_counter()
        history = kernel(rates, omega_bar, initial, dt, n_steps, 10)
        best = min(best, time.perf_counter() - start)
    return best, history


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t-end", type=float, default=50.0)
    parser.add_argument("--dt", type=float, default=1e-3)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    rates = np.array([0.5, 1.0, 0.5])
    omega_bar = 0.1
    initial = np.array([0, 1, 0], dtype=complex)
    n_steps = round(args.t_end / args.dt)
    n_steps -= n_steps % 10

    kernels = {"python": _kernels_py.rk4_lab}
    try:
        compiled = importlib.import_module("multidecay._kernels")
        kernels["compiled"] = compiled.rk4_lab
    except ImportError:
        print("compiled kernel not available; benchmarking fallback only")

    print(f"active backend at import: {KERNEL_BACKEND}")
    print(f"{n_steps} RK4 steps, dt={args.dt}, three levels\n")
    print(f"{'backend':<10} {'best wall time':>15} {'steps/s':>12}")
    results = {}
    histories = {}
    for name, kernel in kernels.items():
        elapsed, history = run(kernel, rates, omega_bar, initial,
                               args.dt, n_steps, args.repeats)
        results[name] = elapsed
        histories[name] = history
        print(f"{name:<10} {elapsed:>13.3f} s {n_steps / elapsed:>12.3g}")

    if len(histories) == 2:
        gap = np.abs(histories["compiled"] - histories["python"]).max()
        print(f"\nmax |compiled - python| = {gap:.3e}")
        print(f"speedup: {results['python'] / results['compiled']:.1f}x")
        if gap > 1e-12:
            raise SystemExit("kernels disagree beyond 1e-12")


if __name__ == "__main__":
    main()
