"""Compare the compiled and pure-Python kernels on full fusion-table builds.

    python benchmarks/bench_kernels.py --r 3 --level 10
"""

from __future__ import annotations

import argparse
import time

from vfblocks import _kernels_py
from vfblocks.weights import weights_at_level

try:
    from vfblocks import _kernels as _compiled
except ImportError:
    _compiled = None


def table_workload(mod, r: int, l: int) -> int:
    """All LR expansions and alcove folds needed for one fusion table."""
    ws = [w.parts for w in weights_at_level(r, l)]
    k = l + r
    checksum = 0
    for i, lam in enumerate(ws):
        for mu in ws[i:]:
            for nu, c in mod.lr_expand(lam, mu, r).items():
                sign, _ = mod.fold_to_alcove(nu, k)
                checksum += sign * c
    return checksum


def bench(mod, r: int, l: int, repeat: int) -> tuple[float, int]:
    best = float("inf")
    result = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = table_workload(mod, r, l)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--level", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    t_py, sum_py = bench(_kernels_py, args.r, args.level, args.repeat)
    print(f"python\t{t_py:.4f}s\tchecksum={sum_py}")
    if _compiled is None:
        print("cython\tunavailable (extension not built)")
        return
    t_cy, sum_cy = bench(_compiled, args.r, args.level, args.repeat)
    print(f"cython\t{t_cy:.4f}s\tchecksum={sum_cy}")
    if sum_cy != sum_py:
        raise SystemExit("backends disagree")
    print(f"speedup\t{t_py / t_cy:.1f}x")


if __name__ == "__main__":
    main()
