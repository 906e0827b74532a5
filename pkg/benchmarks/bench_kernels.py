"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from plactic import _kernel_py

try:
    from plactic import _kernel
except ImportError:
    _kernel = None

WORKLOADS = [
    ("p_rows len 200", lambda k: k.p_rows(tuple((7 * i) % 11 + 1 for i in range(200)))),
    ("scan_slice u=1 n=7 m=6", lambda k: k.scan_slice((1,), 7, 6)),
    ("scan_slice u=1234 n=6 m=5", lambda k: k.scan_slice((1, 2, 3, 4), 6, 5)),
    ("scan_slice packed n=9 k=5", lambda k: k.scan_slice((1,), 9, 5, True)),
    ("scan_words u=21 n=7 m=3", lambda k: k.scan_words((2, 1), 7, 3)),
]


def best_of(fn, kernel, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernel)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; only the Python kernel is timed")
    print(f"{'workload':>28}  {'python s':>9}  {'cython s':>9}  {'speedup':>7}")
    for name, fn in WORKLOADS:
        py = best_of(fn, _kernel_py, args.repeat)
        if _kernel is None:
            print(f"{name:>28}  {py:9.4f}  {'-':>9}  {'-':>7}")
            continue
        assert fn(_kernel) == fn(_kernel_py), name
        cy = best_of(fn, _kernel, args.repeat)
        print(f"{name:>28}  {py:9.4f}  {cy:9.4f}  {py / cy:7.1f}")


if __name__ == "__main__":
    main()
