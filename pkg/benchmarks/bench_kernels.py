"""Compare the numba and pure-numpy integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel runs once untimed so numba compilation is excluded, then the
best of ``--repeat`` runs is reported.  Outputs of both backends are
checked for equality before timing.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from nliesuper import _kernels
from nliesuper.algebra import direct_sum, make_abelian, make_filiform, make_heisenberg_nlie

CASES = {
    "filiform(2,8)": lambda: make_filiform(2, 8),
    "filiform(3,8)": lambda: make_filiform(3, 8),
    "H(3,1)+A(2|2)": lambda: direct_sum(make_heisenberg_nlie(3), make_abelian(3, (2, 2))),
    "H(2,1)+A(2|3)": lambda: direct_sum(make_heisenberg_nlie(2), make_abelian(2, (2, 3))),
}


def _best(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    print(f"{'algebra':<16}{'kernel':<10}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, build in CASES.items():
        ds = build().dense()
        args_ = (ds.C, ds.Y, ds.adS, ds.adR, ds.sS, ds.sR, ds.xpar, ds.ypre)
        for kname, kern in (("jacobi", _kernels.jacobi_residual), ("cocycle", _kernels.cocycle_rows)):
            outs = {b: kern(*args_, backend=b) for b in backends}
            if len(outs) == 2 and not np.array_equal(outs["numpy"], outs["numba"]):
                raise SystemExit(f"backend mismatch on {name} {kname}")
            times = {b: _best(lambda b=b: kern(*args_, backend=b), args.repeat) for b in backends}
            speed = f"{times['numpy'] / times['numba']:9.1f}x" if "numba" in times else "       n/a"
            print(f"{name:<16}{kname:<10}" + "".join(f"{times[b] * 1e3:10.2f}ms" for b in backends) + speed)


if __name__ == "__main__":
    main()
