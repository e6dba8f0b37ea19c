"""Time the sampling oracle on each kernel backend.

    python benchmarks/bench_oracle.py [--boxes 300] [--seed 0]
"""

import argparse
import time

import numpy as np

from intervalpow import _kernels
from intervalpow.interval import make
from intervalpow.oracle import GridSpec, sample_image


def random_boxes(rng, n):
    mag = 10.0 ** rng.uniform(-3, 3, (n, 4))
    sign = np.where(rng.random((n, 4)) < 0.5, -1.0, 1.0)
    v = mag * sign
    return [(make(*sorted(v[i, :2])), make(*sorted(v[i, 2:] / 100))) for i in range(n)]


def time_backend(impl, boxes, grid, repeat):
    saved = _kernels.odd_fractions, _kernels.power_samples
    _kernels.odd_fractions, _kernels.power_samples = impl.odd_fractions, impl.power_samples
    try:
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            n = sum(len(sample_image(x, y, grid)) for x, y in boxes)
            best = min(best, time.perf_counter() - t0)
    finally:
        _kernels.odd_fractions, _kernels.power_samples = saved
    return best, n


def time_kernel(impl, rng, max_den, repeat):
    targets = np.sort(rng.uniform(-5, 5, 100))
    bases = np.linspace(-50, 50, 100)
    fnum, fden = impl.odd_fractions(targets, -5.0, 5.0, max_den)
    fnum, fden = np.ascontiguousarray(fnum), np.ascontiguousarray(fden)
    out = {}
    for name, call in (
        ("odd_fractions", lambda: impl.odd_fractions(targets, -5.0, 5.0, max_den)),
        ("power_samples", lambda: impl.power_samples(bases, targets, fnum, fden)),
    ):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            call()
            best = min(best, time.perf_counter() - t0)
        out[name] = best
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--boxes", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    grid = GridSpec()
    rng = np.random.default_rng(args.seed)
    boxes = random_boxes(rng, args.boxes)
    impls = _kernels.backends()

    print(f"{'backend':<8} {'sample_image/box':>17} {'odd_fractions':>14} {'power_samples':>14}")
    rows = {}
    for name, impl in sorted(impls.items()):
        total, n = time_backend(impl, boxes, grid, args.repeat)
        k = time_kernel(impl, np.random.default_rng(args.seed), grid.max_den, args.repeat)
        rows[name] = total
        print(f"{name:<8} {total / len(boxes) * 1e3:>14.3f} ms {k['odd_fractions'] * 1e3:>11.3f} ms "
              f"{k['power_samples'] * 1e3:>11.3f} ms")
    if len(rows) == 2:
        print(f"speedup of cython over python on sample_image: {rows['python'] / rows['cython']:.1f}x")
    print(f"({len(boxes)} boxes, grid {grid.bases}x{grid.exps}, odd denominators up to {grid.max_den}, "
          f"{n} samples per pass)")


if __name__ == "__main__":
    main()
