"""Timing comparison of the numba and numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--points N] [--repeats R]
"""

import argparse
import time

import numpy as np

from cliffordba.differentials import pole_divisor
from cliffordba.kernels import available_backends, get_backend
from cliffordba.spectral_curve import clifford_curve
from cliffordba.weierstrass import PSI_SCALE


def best_time(fn, repeats):
    fn()                                     # warm up (JIT compile, caches)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    curve = clifford_curve()
    poles = pole_divisor(curve.u).as_array()
    pairs = np.array([p.support for p in curve.glue], dtype=complex)
    rng = np.random.default_rng(0)
    zx = rng.uniform(0, 2 * np.pi, size=args.points)
    zy = rng.uniform(0, 2 * np.pi, size=args.points)
    lam = complex(curve.u).conjugate()

    jobs = {
        "ba_coefficients": lambda be: be.ba_coefficients(zx, zy, pairs, poles, curve.u),
        "weier_derivs": lambda be: be.weier_derivs(zx, zy, pairs, poles, curve.u,
                                                   lam, PSI_SCALE),
    }

    names = available_backends()
    print(f"{args.points} points, best of {args.repeats}")
    print(f"{'kernel':<18}" + "".join(f"{n:>12}" for n in names)
          + ("     speedup" if len(names) > 1 else ""))
    for job, call in jobs.items():
        row = [best_time(lambda be=get_backend(n): call(be), args.repeats)
               for n in names]
        line = f"{job:<18}" + "".join(f"{t * 1e3:>10.1f}ms" for t in row)
        if len(row) > 1:
            line += f"{row[1] / row[0]:>11.2f}x"
        print(line)


if __name__ == "__main__":
    main()
