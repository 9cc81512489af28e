"""Time the float kernels with numba and with the numpy fallback.

sampled_real_rho0 is numpy-only, so its two columns should match.

    python3 benchmarks/bench_kernels.py [--points 100000] [--repeat 5]
"""

from __future__ import annotations

import argparse
import os
import time

import numpy as np

from paramreg import _kernels


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _with_backend(numba: bool, fn):
    old = os.environ.get(_kernels.ENV_FLAG)
    os.environ[_kernels.ENV_FLAG] = "0" if numba else "1"
    try:
        return fn()
    finally:
        if old is None:
            del os.environ[_kernels.ENV_FLAG]
        else:
            os.environ[_kernels.ENV_FLAG] = old


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=100_000)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--K", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    A0 = rng.integers(-3, 4, (args.n, args.n)).astype(float)
    A = rng.integers(-3, 4, (args.K, args.n, args.n)).astype(float)
    P = rng.uniform(-1, 1, (args.points, args.K))
    C = rng.normal(size=(args.n, args.n))
    D = rng.normal(size=(args.n, args.n))
    ts = np.linspace(-1, 1, args.points // 10)

    cases = {
        "grid_determinants": lambda: _kernels.grid_determinants(A0, A, P),
        "sampled_real_rho0": lambda: _kernels.sampled_real_rho0(C, D, ts),
    }
    print(f"numba available: {_kernels.HAVE_NUMBA}")
    print(f"{'kernel':<20}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for name, fn in cases.items():
        ref = _with_backend(False, fn)
        t_np = _with_backend(False, lambda: _time(fn, args.repeat))
        if _kernels.HAVE_NUMBA:
            got = _with_backend(True, fn)  # also compiles
            for a, b in zip(ref, got):
                np.testing.assert_allclose(a, b, rtol=1e-8, atol=1e-10)
            t_nb = _with_backend(True, lambda: _time(fn, args.repeat))
            print(f"{name:<20}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>10.2f}")
        else:
            print(f"{name:<20}{t_np:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
