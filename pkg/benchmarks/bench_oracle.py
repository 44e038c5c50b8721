#!/usr/bin/env python3
"""Benchmark the oracle kernels: numba-jitted vs interpreted fallback.

Each mode runs in its own subprocess because the mode is fixed when
cycperm._kernels is imported (CYCPERM_NO_NUMBA=1 selects the fallback).
The workload is the full single-pattern sweep at one length, i.e. what a
reference-table row costs. JIT compilation happens in a warm-up call and
is reported separately from the steady-state timing.

Usage:
    python benchmarks/bench_oracle.py --n 9 --repeat 3
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = """
import json, sys, time
from cycperm import _kernels
from cycperm.enumeration import EnumerationRequest, count_cyclic_avoiders
from cycperm.patterns import parse_pattern

n = int(sys.argv[1])
repeat = int(sys.argv[2])
labels = ("123", "132", "213", "231", "312", "321")

t0 = time.perf_counter()
_kernels.warm_up()
warm = time.perf_counter() - t0

def sweep():
    return tuple(
        count_cyclic_avoiders(
            EnumerationRequest(n=n, patterns=(parse_pattern(l),)), cap=n
        ).count
        for l in labels
    )

counts = sweep()  # first sweep still pays per-signature compile in jit mode
best = None
for _ in range(repeat):
    t1 = time.perf_counter()
    assert sweep() == counts
    dt = time.perf_counter() - t1
    best = dt if best is None else min(best, dt)
print(json.dumps({
    "jit": _kernels.JIT_ENABLED,
    "warmup_s": warm,
    "best_sweep_s": best,
    "counts": counts,
}))
"""


def run_mode(no_numba: bool, n: int, repeat: int) -> dict:
    env = dict(os.environ)
    env["CYCPERM_NO_NUMBA"] = "1" if no_numba else "0"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(n), str(repeat)],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(f"worker failed:\n{proc.stderr}")
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=9, help="permutation length to sweep")
    parser.add_argument("--repeat", type=int, default=3, help="timed sweeps per mode")
    args = parser.parse_args()

    print(f"workload: all six length-3 single-pattern cyclic counts at n = {args.n}")
    jit = run_mode(no_numba=False, n=args.n, repeat=args.repeat)
    pure = run_mode(no_numba=True, n=args.n, repeat=args.repeat)

    if jit["counts"] != pure["counts"]:
        print("MODE DISAGREEMENT:", jit["counts"], "vs", pure["counts"])
        return 1
    print(f"counts: {jit['counts']}")
    print(f"numba @njit : warm-up {jit['warmup_s']:.2f}s, "
          f"best sweep {jit['best_sweep_s']:.3f}s")
    print(f"pure numpy  : warm-up {pure['warmup_s']:.2f}s, "
          f"best sweep {pure['best_sweep_s']:.3f}s")
    if jit["best_sweep_s"] > 0:
        print(f"speedup     : {pure['best_sweep_s'] / jit['best_sweep_s']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
