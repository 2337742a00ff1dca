"""Compare the compiled kernels with the pure-Python fallback.

Kernel timings import both modules side by side; the end-to-end timing runs
the same Verlinde workload in two subprocesses, one with
VERLINDE_PURE_PYTHON=1.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from verlinde.exact import _kernels_py
from verlinde.exact.cyclotomic import _power_table, cyclotomic_polynomial

try:
    from verlinde.exact import _kernels as _kernels_c
except ImportError:  # not built
    _kernels_c = None

END_TO_END = """
import time
from verlinde.core import GroupId, VerlindeQuery, verlinde_split
start = time.perf_counter()
for g in (2, 3):
    for l, m in ((5, 7), (5, 9), (7, 9)):
        verlinde_split(VerlindeQuery(GroupId.spin(m), l, g))
        verlinde_split(VerlindeQuery(GroupId.spin(l), m, g))
print(time.perf_counter() - start)
"""


def workloads(seed: int = 0):
    rng = random.Random(seed)
    k = 36
    phi = list(cyclotomic_polynomial(k))
    d = len(phi) - 1
    table = [list(row) for row in _power_table(k)]
    a = [rng.randint(-1000, 1000) for _ in range(d)]
    b = [rng.randint(-1000, 1000) for _ in range(d)]
    args = [rng.randrange(1, k) for _ in range(30)]
    m = 8
    left = {rng.randrange(1 << m): rng.randint(-99, 99) or 1 for _ in range(120)}
    right = {rng.randrange(1 << m): rng.randint(-99, 99) or 1 for _ in range(120)}
    return {
        "mulmod (k=36)": lambda mod: mod.mulmod(a, b, phi),
        "sine_product (k=36, 30 factors)": lambda mod: mod.sine_product(args, table, phi),
        "blade_product (m=8, 120x120 terms)": lambda mod: mod.blade_product(left, right, m),
    }


def best(fn, repeat: int, number: int) -> float:
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def end_to_end(pure: bool) -> float:
    env = dict(os.environ, VERLINDE_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True,
                         capture_output=True, text=True).stdout
    return float(out)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=200)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    if _kernels_c is None:
        print("compiled kernels are not built; run `pip install --no-build-isolation -e .`",
              file=sys.stderr)
        return 1

    rows = []
    for name, call in workloads().items():
        if call(_kernels_c) != call(_kernels_py):
            raise SystemExit(f"backends disagree on {name}")
        py = best(lambda: call(_kernels_py), args.repeat, args.number)
        c = best(lambda: call(_kernels_c), args.repeat, args.number)
        rows.append({"benchmark": name, "python_us": py * 1e6, "compiled_us": c * 1e6,
                     "speedup": py / c})
    py = min(end_to_end(True) for _ in range(3))
    c = min(end_to_end(False) for _ in range(3))
    rows.append({"benchmark": "reciprocity splits, g=2,3", "python_us": py * 1e6,
                 "compiled_us": c * 1e6, "speedup": py / c})

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    width = max(len(r["benchmark"]) for r in rows)
    print(f"{'benchmark':<{width}}  {'python':>12}  {'compiled':>12}  speedup")
    for r in rows:
        print(f"{r['benchmark']:<{width}}  {r['python_us']:>10.1f}us  "
              f"{r['compiled_us']:>10.1f}us  {r['speedup']:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
