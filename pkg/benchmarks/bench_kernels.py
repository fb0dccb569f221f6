"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from antimatroid import _pykernels
from antimatroid.oracle import random_antimatroid
from antimatroid.sets import canonical_order

try:
    from antimatroid import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    for n in (8, 10, 12):
        fam = random_antimatroid(n, n)
        masks = list(fam.sets)
        yield f"predicates n={n} |F|={len(masks)}", lambda k, m=masks: (
            k.is_accessible(m), k.is_union_closed(m), k.satisfies_exchange(m), k.has_interval_property(m))
        yield f"union_closure n={n}", lambda k, m=masks: k.union_closure(m[: len(m) // 2])
    for n in (12, 14, 16):
        # the full operator is isotone, so the sweep visits every covering pair
        dense = [0] * (1 << n)
        full = (1 << n) - 1
        for X in range(full):
            dense[X] = full & ~X  # full operator: isotone
        order = canonical_order(n)
        yield f"isotone sweep n={n}", lambda k, d=dense, n=n, o=order: k.dense_isotone_witness(d, n, o, -1)


def same(a, b):
    # closures come back in backend-specific order
    return sorted(a) == sorted(b) if isinstance(a, list) else a == b


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the fallback is available")
    print(f"{'workload':36} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads():
        py = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:36} {py:10.4f} {'-':>11} {'-':>8}")
            continue
        c = best_of(lambda: fn(_ckernels), args.repeat)
        assert same(fn(_pykernels), fn(_ckernels)), name
        print(f"{name:36} {py:10.4f} {c:11.4f} {py / c:7.1f}x")


if __name__ == "__main__":
    main()
