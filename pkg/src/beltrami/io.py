"""On-disk formats for grid functions and polynomial dilatations.

Grid-function CSV: a header line ``N,M,R,L`` followed by exactly ``N*M``
data lines ``i,j,re,im`` in row-major order (0-based indices).  The grid is
reconstructed as uniform with spacing ``R/(L-1)``, which is the only layout
the header can describe; writers therefore refuse non-uniform grids.  The
JSON equivalent carries the same fields::

    {"N": ..., "M": ..., "R": ..., "L": ..., "values": [[i, j, re, im], ...]}

Polynomial dilatations use ``{"R": ..., "terms": [[p, q, re, im], ...]}``.

Readers validate the grid invariants and the index structure and raise
``ValueError`` with the offending line/entry named.
"""

from __future__ import annotations

import json
import os

import numpy as np

from .exact import PolyDifferential
from .grid import GridFunction, PolarGrid, build_grid

__all__ = [
    "write_grid_function",
    "read_grid_function",
    "write_poly",
    "read_poly",
    "read_mu_file",
]


def _grid_from_header(n: int, m: int, radius: float, lsup: int) -> PolarGrid:
    if n < 2 or lsup < 2 or lsup > n:
        raise ValueError(f"invalid header: N={n}, L={lsup}")
    if not radius > 0:
        raise ValueError(f"invalid header: R={radius}")
    outer = (n - 1) / (lsup - 1)
    return build_grid(n, m, radius, outer)


def _header_of(f: GridFunction):
    grid = f.grid
    if not grid.is_uniform():
        raise ValueError("file format only describes uniform grids")
    return grid.radial_count, grid.angular_count, grid.support_radius, grid.support_index


def write_grid_function(f: GridFunction, path: str, fmt: str | None = None) -> None:
    """Write a grid function as CSV or JSON (format inferred from extension)."""
    fmt = fmt or ("json" if path.endswith(".json") else "csv")
    n, m, radius, lsup = _header_of(f)
    if fmt == "csv":
        lines = [f"{n},{m},{radius!r},{lsup}"]
        for i in range(n):
            for j in range(m):
                v = f.values[i, j]
                lines.append(f"{i},{j},{v.real!r},{v.imag!r}")
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    elif fmt == "json":
        payload = {
            "N": n,
            "M": m,
            "R": radius,
            "L": lsup,
            "values": [
                [i, j, f.values[i, j].real, f.values[i, j].imag]
                for i in range(n)
                for j in range(m)
            ],
        }
        with open(path, "w") as fh:
            json.dump(payload, fh)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _assemble(n, m, radius, lsup, entries, what: str) -> GridFunction:
    grid = _grid_from_header(n, m, radius, lsup)
    values = np.empty((n, m), dtype=np.complex128)
    if len(entries) != n * m:
        raise ValueError(f"{what}: expected {n * m} data rows, got {len(entries)}")
    for row, (i, j, re, im) in enumerate(entries):
        if i != row // m or j != row % m:
            raise ValueError(f"{what}: data row {row} out of row-major order (i={i}, j={j})")
        values[i, j] = complex(re, im)
    if not np.all(np.isfinite(values)):
        raise ValueError(f"{what}: non-finite sample values")
    return GridFunction(grid, values)


def read_grid_function(path: str) -> GridFunction:
    """Read a grid function from CSV or JSON, validating invariants."""
    if path.endswith(".json"):
        with open(path) as fh:
            data = json.load(fh)
        try:
            n, m, radius, lsup = int(data["N"]), int(data["M"]), float(data["R"]), int(data["L"])
            entries = [(int(i), int(j), float(re), float(im)) for i, j, re, im in data["values"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{path}: malformed grid-function JSON: {exc}") from exc
        return _assemble(n, m, radius, lsup, entries, path)
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty file")
    try:
        n_s, m_s, r_s, l_s = lines[0].split(",")
        n, m, radius, lsup = int(n_s), int(m_s), float(r_s), int(l_s)
    except ValueError as exc:
        raise ValueError(f"{path}: malformed header line 1: {lines[0]!r}") from exc
    entries = []
    for ln_no, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != 4:
            raise ValueError(f"{path}: line {ln_no}: expected 'i,j,re,im', got {ln!r}")
        try:
            entries.append((int(parts[0]), int(parts[1]), float(parts[2]), float(parts[3])))
        except ValueError as exc:
            raise ValueError(f"{path}: line {ln_no}: {exc}") from exc
    return _assemble(n, m, radius, lsup, entries, path)


def write_poly(poly: PolyDifferential, path: str) -> None:
    payload = {
        "R": float(poly.support_radius),
        "terms": [[p, q, complex(c).real, complex(c).imag] for (p, q), c in sorted(poly.terms.items())],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh)


def read_poly(path: str) -> PolyDifferential:
    with open(path) as fh:
        data = json.load(fh)
    try:
        radius = float(data["R"])
        terms = {(int(p), int(q)): complex(re, im) for p, q, re, im in data["terms"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"{path}: malformed polynomial JSON: {exc}") from exc
    return PolyDifferential(radius, terms)


def read_mu_file(path: str):
    """Load a dilatation file: polynomial JSON or grid-function CSV/JSON."""
    if not os.path.exists(path):
        raise ValueError(f"no such file: {path}")
    if path.endswith(".json"):
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "terms" in data:
            return read_poly(path)
    return read_grid_function(path)
