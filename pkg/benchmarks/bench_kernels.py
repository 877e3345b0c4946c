"""Compare the pure-numpy and compiled kernel backends on code construction.

Each case builds a code from generators (subgroup closure + weight
histogram) and enumerates its dual.  Both backends produce identical word
arrays; only the wall time differs.  Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import zetacodes._kernels as kernels
from zetacodes import AdditiveCode, make_group
from zetacodes._kernels import _py

try:
    from zetacodes._kernels import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("hamming [7,4], Z2", (2,), 7,
     [[1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1],
      [0, 0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1, 1]]),
    ("even weight, Z2^16", (2,), 16,
     [[1 if j in (i, i + 1) else 0 for j in range(16)] for i in range(15)]),
    ("sum zero, Z3^11", (3,), 11,
     [[1 if j == i else (2 if j == i + 1 else 0) for j in range(11)]
      for i in range(10)]),
    ("sum zero, Z4^8", (4,), 8,
     [[1 if j == i else (3 if j == i + 1 else 0) for j in range(8)]
      for i in range(7)]),
    ("sum zero, Z6^6", (6,), 6,
     [[1 if j == i else (5 if j == i + 1 else 0) for j in range(6)]
      for i in range(5)]),
]


def use_backend(impl) -> None:
    kernels.closure_words = impl.closure_words
    kernels.dual_words = impl.dual_words
    kernels.weight_hist = impl.weight_hist


def run_case(moduli, length, gens) -> tuple:
    group = make_group(moduli)
    code = AdditiveCode.from_generators(group, length, gens)
    dual = code.dual()
    return code.size, dual.size, code.weight_distribution


def time_case(moduli, length, gens, repeat: int) -> tuple:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = run_case(moduli, length, gens)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per case, best time kept (default 3)")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled backend not available; timing the python backend only")
    header = f"{'case':<22} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, moduli, length, gens in CASES:
        use_backend(_py)
        t_py, res_py = time_case(moduli, length, gens, args.repeat)
        if _ckernels is not None:
            use_backend(_ckernels)
            t_cy, res_cy = time_case(moduli, length, gens, args.repeat)
            assert res_py == res_cy, f"backends disagree on {name}"
            print(f"{name:<22} {t_py * 1e3:>8.1f}ms {t_cy * 1e3:>8.1f}ms "
                  f"{t_py / t_cy:>7.1f}x")
        else:
            print(f"{name:<22} {t_py * 1e3:>8.1f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
