#!/usr/bin/env python3
"""Benchmark the way-below kernel: numba @njit loop vs vectorized numpy.

Posets are the slices S_A of soft sets over a finite universe (ordered by the
information order) plus random inclusion posets to reach other sizes.  The
kernel visits all 2**n subsets, so n is kept small.

Usage:
    python benchmarks/bench_waybelow.py [--sizes 8 10 12 14 16] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from softalg import _kernels
from softalg.lattice import enumerate_slice
from softalg.setrep import UniverseCtx
from softalg.softset import leq


def slice_order(n_universe: int, n_params: int) -> np.ndarray:
    ctx = UniverseCtx.finite([f"u{i}" for i in range(n_universe)], [f"e{i}" for i in range(n_params)])
    elems = enumerate_slice(ctx.param_space, ctx)
    return np.array([[leq(a, b) for b in elems] for a in elems], dtype=bool)


def random_order(n: int, rng) -> np.ndarray:
    sets = rng.integers(0, 1 << 6, size=n)
    return (sets[:, None] & sets[None, :]) == sets[:, None]


def best_of(fn, arg, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 10, 12, 14, 16])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    cases = [("S_A |U|=2 |A|=1", slice_order(2, 1)), ("S_A |U|=1 |A|=3", slice_order(1, 3)),
             ("S_A |U|=2 |A|=2", slice_order(2, 2))]
    cases += [(f"random n={n}", random_order(n, rng)) for n in args.sizes]

    # compile outside the timed region
    _kernels.way_below_numba(cases[0][1])

    print(f"{'poset':<20} {'n':>3} {'numba [s]':>11} {'numpy [s]':>11} {'speedup':>8}")
    for name, order in cases:
        a = _kernels.way_below_numba(order)
        b = _kernels.way_below_numpy(order)
        assert (a == b).all(), name
        t_jit = best_of(_kernels.way_below_numba, order, args.repeat)
        t_np = best_of(_kernels.way_below_numpy, order, args.repeat)
        print(f"{name:<20} {order.shape[0]:>3} {t_jit:>11.5f} {t_np:>11.5f} {t_np / t_jit:>7.1f}x")


if __name__ == "__main__":
    main()
