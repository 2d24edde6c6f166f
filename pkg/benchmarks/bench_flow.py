"""Time all-pairs local connectivity on the numba and pure-python backends.

    python3 benchmarks/bench_flow.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from avgconn import _kernels
from avgconn.extremal import construct_optimal_edge, construct_optimal_vertex
from avgconn.graph import complete, cycle_power


def cases():
    yield "K_12", complete(12)
    yield "C_16^(3)", cycle_power(16, 3)
    yield "S_32", construct_optimal_vertex(32)
    yield "G_32", construct_optimal_edge(32)


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [_kernels.python]
    if _kernels.compiled is not None:
        backends.append(_kernels.compiled)
    print(f"{'graph':<10} {'mode':<7}" + "".join(f"{b.name:>12}" for b in backends))
    for name, g in cases():
        mat = np.asarray(g.matrix)
        for mode, code in (("vertex", _kernels.VERTEX), ("edge", _kernels.EDGE)):
            ref = None
            cols = []
            for b in backends:
                b.all_pairs(mat, code)  # warm up / compile
                out = b.all_pairs(mat, code)
                assert ref is None or np.array_equal(ref, out)
                ref = out
                cols.append(best_of(lambda: b.all_pairs(mat, code), args.repeat))
            print(f"{name:<10} {mode:<7}" + "".join(f"{c:>11.4f}s" for c in cols))


if __name__ == "__main__":
    main()
