"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--n 10]

Each case is run on both backends; results must agree before timings are
reported.
"""

from __future__ import annotations

import argparse
import random
import timeit

from vactab import kernels
from vactab.tableaux import rsk_permutation


def _cases(n: int):
    rng = random.Random(1)
    perms = [rng.sample(range(1, 13), 12) for _ in range(200)]
    tabs = [rsk_permutation(p)[0] for p in perms]
    values = [rng.randint(1, 12) for _ in range(200)]

    def insert(mod):
        return [mod.row_insert(t, x) for t, x in zip(tabs, values)]

    def jdt(mod):
        return [mod.jdt_delete(t, x) for t, x in zip(tabs, values)]

    def constrained(mod):
        return mod.count_constrained(n, n // 2, n // 2 + 1, 0, kernels.PIN_NONE)

    def histogram(mod):
        return mod.block_count_histogram(n)

    return {
        "row_insert x200": insert,
        "jdt_delete x200": jdt,
        f"count_constrained n={n}": constrained,
        f"block_count_histogram n={n}": histogram,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=10, help="ground-set size for the set-partition kernels")
    args = ap.parse_args()
    backends = kernels.backends()
    if "cython" not in backends:
        print("compiled extension not available; timing the fallback only")
    names = sorted(backends, reverse=True)
    print(f"{'case':32}" + "".join(f"{name:>12}" for name in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in _cases(args.n).items():
        results = {name: fn(mod) for name, mod in backends.items()}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"{label}: backends disagree")
        best = {
            name: min(timeit.repeat(lambda m=mod: fn(m), number=1, repeat=args.repeat))
            for name, mod in backends.items()
        }
        row = f"{label:32}" + "".join(f"{best[name] * 1e3:10.2f}ms" for name in names)
        if len(names) == 2:
            row += f"{best['python'] / best['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
