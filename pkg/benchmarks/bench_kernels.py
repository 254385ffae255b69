#!/usr/bin/env python
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --repeats 5 --output bench.json
"""

import argparse
import json
import time

import numpy as np

from spatialsep import _kernels as K
from spatialsep.rir import ENGINE_RATE, SPEED_OF_SOUND, auto_max_order, image_sources
from spatialsep.scene import sample_rooms


def _timed(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def deposit_case(seed=0):
    """Delays and amplitudes from a real room's image sources."""
    room = sample_rooms(1, seed=seed)[0]
    src = np.array(room.dims) * [0.3, 0.4, 0.5]
    mic = np.array(room.dims) * [0.6, 0.5, 0.5]
    alpha = 0.3
    imgs = image_sources(room, src, auto_max_order(alpha), alpha)
    dist = np.linalg.norm(imgs.positions - mic, axis=1)
    delays = dist / SPEED_OF_SOUND * ENGINE_RATE
    amps = imgs.gains / np.maximum(dist, 1e-3)
    length = int(delays.max()) + 2 * K.SINC_HALF_WIDTH + 1
    bins = np.arange(len(delays)) % 24
    return np.zeros((24, length)), delays, amps, bins


def run(repeats):
    out, delays, amps, bins = deposit_case()
    x = np.random.default_rng(0).standard_normal(ENGINE_RATE * 10)
    cases = {
        "deposit_fractional_delays": (
            lambda: K._deposit_numba(out.copy(), delays, amps, bins),
            lambda: K._deposit_numpy(out.copy(), delays, amps, bins),
            f"{len(delays)} image sources"),
        "one_pole_lowpass": (
            lambda: K._one_pole_numba(x, 0.7),
            lambda: K._one_pole_numpy(x, 0.7),
            f"{len(x)} samples"),
    }
    results = {}
    for name, (fast, slow, size) in cases.items():
        fast()  # jit warm-up
        a, b = fast(), slow()
        err = float(np.max(np.abs(a - b)))
        t_fast, t_slow = _timed(fast, repeats), _timed(slow, repeats)
        results[name] = {"size": size, "numba_s": t_fast, "numpy_s": t_slow,
                         "speedup": t_slow / t_fast, "max_abs_diff": err}
        print(f"{name:28s} {size:>22s}  numba {t_fast * 1e3:9.2f} ms  "
              f"numpy {t_slow * 1e3:9.2f} ms  x{t_slow / t_fast:6.1f}  diff {err:.1e}")
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--output", help="write results as JSON")
    args = parser.parse_args()
    if not K.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed")
    results = run(args.repeats)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
