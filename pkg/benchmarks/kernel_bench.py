"""Times the compiled kernels against the numpy fallback on full drive cycles.

Usage:  python3 benchmarks/kernel_bench.py [--sizes 10,14,18] [--repeats 5]

Each measurement applies one full cycle (n-1 bond phases, n x rotations,
n z rotations) to a random normalized state and reports the best of
`repeats` timings per backend, plus the max amplitude deviation between the
two results as a correctness cross-check.
"""
import argparse
import cmath
import math
import time

import numpy as np

from floqising.kernels import _np as np_backend

try:
    from floqising.kernels import _cy as cy_backend
except ImportError:
    cy_backend = None

J, MU, H = math.pi / 4, math.pi / 10, math.pi / 8


def one_cycle(backend, amps, n):
    ps, pd = cmath.exp(-1j * J), cmath.exp(1j * J)
    for j in range(n - 1):
        backend.zz_phase(amps, n, j, ps, pd)
    c, s = math.cos(MU), math.sin(MU)
    for j in range(n):
        backend.x_rotation(amps, n, j, c, s)
    p0, p1 = cmath.exp(-1j * H), cmath.exp(1j * H)
    for j in range(n):
        backend.z_rotation(amps, n, j, p0, p1)


def best_time(backend, base, n, repeats):
    out = None
    t = math.inf
    for _ in range(repeats):
        amps = base.copy()
        t0 = time.perf_counter()
        one_cycle(backend, amps, n)
        t = min(t, time.perf_counter() - t0)
        out = amps
    return t, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="10,14,18")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(x) for x in args.sizes.split(",")]
    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'numpy [ms]':>12} {'cython [ms]':>12} {'speedup':>9} {'max |diff|':>12}")
    for n in sizes:
        v = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        v = np.ascontiguousarray(v / np.linalg.norm(v))
        t_np, out_np = best_time(np_backend, v, n, args.repeats)
        if cy_backend is None:
            print(f"{n:>4} {t_np * 1e3:>12.3f} {'n/a':>12} {'n/a':>9} {'n/a':>12}")
            continue
        t_cy, out_cy = best_time(cy_backend, v, n, args.repeats)
        dev = np.abs(out_np - out_cy).max()
        print(
            f"{n:>4} {t_np * 1e3:>12.3f} {t_cy * 1e3:>12.3f} "
            f"{t_np / t_cy:>8.2f}x {dev:>12.3e}"
        )
    if cy_backend is None:
        print("extension not built; run pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
