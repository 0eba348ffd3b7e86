"""Fourier coefficients of the planar Cauchy transform.

For compactly supported ``h`` the (un-normalized) potential

    Pt[h](z) = -(1/pi) integral  h(xi) / (xi - z)  dA(xi)

is weakly singular, Hoelder continuous, and satisfies ``d/dzbar Pt[h] = h``
inside the support.  Its angular coefficients are driven by the input
coefficient one index up:

    p_k(r) =  2 integral_0^r (r/rho)^k h_{k+1}(rho) drho        (k < 0)
    p_k(r) = -2 integral_r^S (r/rho)^k h_{k+1}(rho) drho        (k >= 0)

with ``S`` the support edge of the radial model (the nominal upper limit
``infinity`` truncates there).  At the center only ``p_0(0)`` can be
nonzero, so the normalized transform ``P[h] = Pt[h] - Pt[h](0)`` is obtained
by subtracting ``p_0(0)`` from the ``k = 0`` row alone, making the assembled
potential vanish at the origin exactly.

The recursive sweep (backend kernels) is the production route; the direct
per-radius integration is retained as the in-module reference, mirroring
:mod:`beltrami.hilbert`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .grid import CoefficientTable, GridFunction, PolarGrid, synthesize
from .hilbert import _validated_profiles
from .piecewise import RadialModel, cauchy_piece

__all__ = [
    "CauchyCoefficients",
    "cauchy_coefficients",
    "cauchy_coefficients_direct",
    "normalize_at_origin",
    "evaluate_potential",
]


@dataclass(frozen=True)
class CauchyCoefficients:
    """Coefficient table of ``Pt[h]`` plus the recorded origin value."""

    table: CoefficientTable
    origin_value: complex

    @property
    def grid(self) -> PolarGrid:
        return self.table.grid


def _origin_column(grid: PolarGrid) -> int:
    return int(np.nonzero(grid.k_values() == 0)[0][0])


def cauchy_coefficients(
    h: CoefficientTable, model: RadialModel = RadialModel.LINEAR
) -> CauchyCoefficients:
    """Coefficients of ``Pt[h]`` by the two-direction sweep, O(N M)."""
    grid = h.grid
    hs = _validated_profiles(h, 1, require_center_zero=False)
    out = backend.cauchy_sweep(hs, grid.radii, grid.midpoints, grid.k_values(), model)
    origin = complex(out[0, _origin_column(grid)])
    return CauchyCoefficients(CoefficientTable._wrap(grid, out), origin)


def cauchy_coefficients_direct(
    h: CoefficientTable, model: RadialModel = RadialModel.LINEAR
) -> CauchyCoefficients:
    """Reference evaluation by fresh per-radius integration, O(N^2 M)."""
    grid = h.grid
    hs = _validated_profiles(h, 1, require_center_zero=False)
    radii = grid.radii
    mids = grid.midpoints
    kvals = grid.k_values()
    n = grid.radial_count
    out = np.zeros_like(hs)

    neg = kvals < 0
    pos = ~neg
    kneg = kvals[neg]
    kpos = kvals[pos]
    fneg = hs[:, neg]
    fpos = hs[:, pos]

    for i in range(1, n):
        r = radii[i]
        low = np.zeros(kneg.shape, dtype=np.complex128)
        for j in range(1, i + 1):
            low += cauchy_piece(
                model, r, radii[j - 1], radii[j], fneg[j - 1], fneg[j], mids[j], kneg
            )
        out[i, neg] = 2.0 * low

        high = np.zeros(kpos.shape, dtype=np.complex128)
        for j in range(i + 1, n):
            high += cauchy_piece(
                model, r, radii[j - 1], radii[j], fpos[j - 1], fpos[j], mids[j], kpos
            )
        out[i, pos] = -2.0 * high

    col0 = _origin_column(grid)
    f0 = hs[:, col0]
    if model is RadialModel.LINEAR:
        total = 0.5 * (f0[0] + f0[1]) * radii[1]
        for j in range(2, n):
            total += 0.5 * (f0[j - 1] + f0[j]) * (radii[j] - radii[j - 1])
    else:
        total = f0[0] * mids[1] + f0[1] * (radii[1] - mids[1])
        for j in range(2, n):
            total += f0[j - 1] * (mids[j] - radii[j - 1]) + f0[j] * (radii[j] - mids[j])
    out[0, :] = 0.0
    out[0, col0] = -2.0 * total
    return CauchyCoefficients(CoefficientTable._wrap(grid, out), complex(out[0, col0]))


def normalize_at_origin(c: CauchyCoefficients) -> CauchyCoefficients:
    """Subtract the origin value from the ``k = 0`` row: represents ``P[h]``.

    Idempotent; every other row is returned bit-for-bit unchanged.
    """
    coeffs = c.table.coeffs.copy()
    coeffs[:, _origin_column(c.grid)] -= c.origin_value
    return CauchyCoefficients(CoefficientTable._wrap(c.grid, coeffs), 0.0 + 0.0j)


def evaluate_potential(c: CauchyCoefficients, grid: PolarGrid | None = None) -> GridFunction:
    """Synthesize the potential's coefficient series at the grid nodes."""
    if grid is not None and grid != c.grid:
        raise ValueError("grid mismatch in evaluate_potential")
    return synthesize(c.table)
