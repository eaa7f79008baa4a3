"""Compare the compiled kernels with the pure-Python fallback on the same inputs.

Run with ``python benchmarks/bench_kernels.py``; every kernel is called with
identical arguments on both backends and the results are checked for equality.
"""

from __future__ import annotations

import argparse
import time

from tourpat import _pykernels
from tourpat.structures import (
    random_colored_graph,
    random_tournament,
    transitive_tournament,
)

try:
    from tourpat import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _cases():
    t7 = random_tournament(7, 1)
    host = random_tournament(40, 2)
    cg = random_colored_graph(40, 5, 3)
    big = random_tournament(64, 4)
    values = [(i * 7919) % 13 - 6 for i in range(1 << 15)]
    pattern = random_tournament(6, 5)
    yield "iso_table k=7", lambda k: k.iso_table(t7.bits, 7, True)
    yield "subset_code_hist n=40 k=4", lambda k: k.subset_code_hist(host.out_rows, 40, 4)
    yield "colorful_code_hist n=40 k=5", lambda k: k.colorful_code_hist(cg.graph.rows, cg.coloring.classes, 5)
    yield "mobius m=15", lambda k: k.mobius(list(values), 15)
    yield "max_transitive n=64", lambda k: k.max_transitive(big.out_rows, 64, 0, 0)
    yield "embeddings k=6 n=40", lambda k: k.embeddings(pattern.out_rows, host.out_rows, 40, 0)
    tt = transitive_tournament(7)
    table = _pykernels.iso_table(tt.bits, 7, True)
    yield "alternating_submask_sum 2^21", lambda k: k.alternating_submask_sum(table, tt.bits, (1 << 21) - 1)


def _time(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; only the fallback is available")
    print(f"{'kernel':32s} {'python s':>10s} {'cython s':>10s} {'speedup':>9s}")
    for name, call in _cases():
        tp, rp = _time(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:32s} {tp:10.4f} {'-':>10s} {'-':>9s}")
            continue
        tc, rc = _time(lambda: call(_ckernels), args.repeat)
        if rp != rc:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:32s} {tp:10.4f} {tc:10.4f} {tp / tc:9.1f}x")


if __name__ == "__main__":
    main()
