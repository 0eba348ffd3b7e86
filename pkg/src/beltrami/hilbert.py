"""Fourier coefficients of the planar Hilbert (Beurling) transform.

For ``h`` supported in the closed disk of radius ``R`` the transform

    T[h](z) = -(1/pi) p.v. integral  h(xi) / (xi - z)^2  dA(xi)

maps the angular coefficient ``h_{k+2}(r)`` of the input to the coefficient
``c_k(r)`` of the output.  With the kernel constants

    A_k = 2(k+1) for k < 0 (else 0),   B_k = -2(k+1) for k >= 0 (else 0),

the coefficients at a positive radius inside the support are

    c_k(r) = A_k I(0, r) + B_k I(r, S) + h_{k+2}(r),
    I(a, b) = integral_a^b (r/rho)^k h_{k+2}(rho) drho / rho,

where ``S`` is the support edge of the radial model.  At ``r = 0`` only
``c_0(0) = -2 integral_0^S h_2(rho)/rho drho`` survives (which is why the
``k = 2`` coefficient must vanish at the center), on the circle ``r = S``
the additive term disappears together with the upper integral, and beyond
the support only the ``A_k`` integral remains, so every ``k >= 0``
coefficient is zero outside.  All four regimes emerge from one formula once
the integrals run over the (compactly supported) radial model.

Two evaluation routes are provided with identical output contracts:

* :func:`hilbert_coefficients_direct` integrates from scratch at every
  radius (``O(N^2 M)``) -- the transparent reference;
* :func:`hilbert_coefficients_recursive` updates neighbouring radii through
  one outward sweep (``k < 0``) and one inward sweep (``k >= 0``) at
  ``O(N M)`` total, via the backend kernels.

Both consume the same closed-form piece integrals, so they agree to
accumulated rounding (~1e-13); an independent check against principal-value
quadrature lives in :mod:`beltrami.exact`.
"""

from __future__ import annotations

import numpy as np

from . import backend
from .grid import CoefficientTable, GridFunction, analyze, shift_k, synthesize
from .piecewise import RadialModel, hilbert_piece

__all__ = [
    "a_constant",
    "b_constant",
    "hilbert_coefficients_direct",
    "hilbert_coefficients_recursive",
    "transform_scheme1",
]

_CENTER_TOL = 1e-12


def a_constant(k) -> np.ndarray:
    """Kernel constant A_k: ``2(k+1)`` for negative k, zero otherwise."""
    k = np.asarray(k)
    return np.where(k < 0, 2.0 * (k + 1), 0.0)


def b_constant(k) -> np.ndarray:
    """Kernel constant B_k: ``-2(k+1)`` for k >= 0, zero otherwise."""
    k = np.asarray(k)
    return np.where(k >= 0, -2.0 * (k + 1), 0.0)


def _validated_profiles(h: CoefficientTable, shift: int, require_center_zero: bool):
    """Shifted profiles with support and center constraints enforced.

    Rejects tables whose coefficients do not vanish beyond the support index
    and (for the Hilbert case) whose shifted ``k = 0`` profile has a nonzero
    value at the center; FFT-level noise below ``1e-12`` of the table norm
    is snapped to zero instead.
    """
    grid = h.grid
    coeffs = h.coeffs
    scale = max(1.0, h.sup_norm())
    tail = coeffs[grid.support_index:]
    if tail.size and np.max(np.abs(tail)) > _CENTER_TOL * scale:
        raise ValueError(
            "coefficient table is not compactly supported: nonzero rows "
            f"beyond support index L={grid.support_index}"
        )
    hs = shift_k(coeffs, shift)
    hs[grid.support_index:, :] = 0.0
    if require_center_zero:
        col0 = int(np.nonzero(grid.k_values() == 0)[0][0])
        if abs(hs[0, col0]) > _CENTER_TOL * scale:
            raise ValueError(
                "h_2 coefficient must vanish at r = 0 (central transform "
                "value would be a divergent integral otherwise)"
            )
        hs[0, col0] = 0.0
    return hs


def hilbert_coefficients_recursive(
    h: CoefficientTable, model: RadialModel = RadialModel.LINEAR
) -> CoefficientTable:
    """Transform coefficients by the two-direction radial sweep, O(N M)."""
    grid = h.grid
    hs = _validated_profiles(h, 2, require_center_zero=True)
    out = backend.hilbert_sweep(hs, grid.radii, grid.midpoints, grid.k_values(), model)
    return CoefficientTable._wrap(grid, out)


def hilbert_coefficients_direct(
    h: CoefficientTable, model: RadialModel = RadialModel.LINEAR
) -> CoefficientTable:
    """Transform coefficients by fresh per-radius integration, O(N^2 M)."""
    grid = h.grid
    hs = _validated_profiles(h, 2, require_center_zero=True)
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
    amul = 2.0 * (kneg + 1)
    bmul = -2.0 * (kpos + 1)

    for i in range(1, n):
        r = radii[i]
        low = np.zeros(kneg.shape, dtype=np.complex128)
        for j in range(1, i + 1):
            low += hilbert_piece(
                model, r, radii[j - 1], radii[j], fneg[j - 1], fneg[j], mids[j], kneg
            )
        out[i, neg] = amul * low + fneg[i]

        high = np.zeros(kpos.shape, dtype=np.complex128)
        for j in range(i + 1, n):
            high += hilbert_piece(
                model, r, radii[j - 1], radii[j], fpos[j - 1], fpos[j], mids[j], kpos
            )
        out[i, pos] = bmul * high + fpos[i]

    # center value: only k = 0 survives
    col0 = int(np.nonzero(kvals == 0)[0][0])
    f0 = hs[:, col0]
    if model is RadialModel.LINEAR:
        total = f0[1] + 0.0j  # first interval: slope * r_2, intercept 0
        for j in range(2, n):
            a, b = radii[j - 1], radii[j]
            alpha = (f0[j] - f0[j - 1]) / (b - a)
            beta = f0[j - 1] - alpha * a
            total += alpha * (b - a) + beta * np.log(b / a)
    else:
        total = f0[1] * np.log(radii[1] / mids[1])
        for j in range(2, n):
            a, b = radii[j - 1], radii[j]
            total += f0[j - 1] * np.log(mids[j] / a) + f0[j] * np.log(b / mids[j])
    out[0, :] = 0.0
    out[0, col0] = -2.0 * total
    return CoefficientTable._wrap(grid, out)


def transform_scheme1(
    h: GridFunction, model: RadialModel = RadialModel.LINEAR
) -> GridFunction:
    """T[h] sampled on the full grid: analyze, sweep, synthesize."""
    if not h.is_compactly_supported():
        raise ValueError("input must vanish beyond the support radius")
    return synthesize(hilbert_coefficients_recursive(analyze(h), model))
