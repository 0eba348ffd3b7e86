"""Timing helpers: backend comparison and scheme timing.

``compare_backends`` times the raw sweep kernels (compiled extension vs the
NumPy fallback) on random compactly supported tables -- the hot loop of
every transform -- and is exposed as ``beltrami bench-backends``.
"""

from __future__ import annotations

import time

import numpy as np

from .backend import available_backends
from .grid import build_grid
from .piecewise import RadialModel

__all__ = ["median_time", "compare_backends"]


def median_time(fn, repeats: int = 3, warmup: int = 1) -> float:
    """Median wall-clock seconds of ``fn()`` over ``repeats`` runs."""
    for _ in range(warmup):
        fn()
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def _random_profiles(grid, rng):
    n, m = grid.radial_count, grid.angular_count
    hs = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    hs[grid.support_index:] = 0.0
    hs[0] = 0.0
    return np.ascontiguousarray(hs)


def compare_backends(grids=((500, 256), (1000, 512)), model=RadialModel.LINEAR,
                     repeats: int = 3, seed: int = 0) -> list[dict]:
    """Time both sweep backends on each grid; returns one record per grid."""
    rng = np.random.default_rng(seed)
    backends = available_backends()
    rows = []
    for n, m in grids:
        grid = build_grid(n, m, 1.0, 1.0)
        hs = _random_profiles(grid, rng)
        kvals = grid.k_values()
        row = {"N": n, "M": m, "model": model.value}
        for name, fns in backends.items():
            for op in ("hilbert", "cauchy"):
                secs = median_time(
                    lambda f=fns[op]: f(hs, grid.radii, grid.midpoints, kvals, model),
                    repeats=repeats,
                )
                row[f"{name}_{op}_ms"] = 1e3 * secs
        if "compiled" in backends:
            row["speedup_hilbert"] = row["python_hilbert_ms"] / row["compiled_hilbert_ms"]
            row["speedup_cauchy"] = row["python_cauchy_ms"] / row["compiled_cauchy_ms"]
        rows.append(row)
    return rows
