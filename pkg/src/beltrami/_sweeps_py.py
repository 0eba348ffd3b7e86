"""Pure-NumPy radial sweep kernels (fallback backend).

Same contract as the compiled extension ``beltrami._sweeps``: given the
index-shifted coefficient profiles, run the two-direction recursion that
produces Hilbert / Cauchy transform coefficients in ``O(N M)``.  Columns are
processed in bulk (vectorized over the angular index); the radius loop is
sequential, matching the compiled kernel order exactly so both backends are
deterministic and agree to rounding.

Inputs (all backends):
    hs     -- (N, M) complex, column ``col`` holding the profile
              ``h_{k+2}(r_i)`` (Hilbert) or ``h_{k+1}(r_i)`` (Cauchy)
    radii  -- (N,) float, ``radii[0] == 0``
    mids   -- (N+1,) float midpoint cells (see ``beltrami.grid``)
    kvals  -- (M,) int angular index per column
    model  -- ``RadialModel`` member

Callers guarantee: profiles vanish beyond the support index, and for the
Hilbert sweep the ``k = 0`` column has ``hs[0] == 0`` (integrability of the
central value).
"""

from __future__ import annotations

import numpy as np

from .piecewise import RadialModel, cauchy_piece, hilbert_piece

BACKEND_NAME = "python"


def hilbert_sweep(hs, radii, mids, kvals, model: RadialModel):
    n, m = hs.shape
    out = np.zeros((n, m), dtype=np.complex128)

    neg = kvals < 0
    pos = ~neg

    # k < 0: outward, seeded by the direct integral over [0, r_2]
    kv = kvals[neg]
    f = hs[:, neg]
    amul = 2.0 * (kv + 1)
    cur = amul * hilbert_piece(model, radii[1], 0.0, radii[1], f[0], f[1], mids[1], kv) + f[1]
    out[1, neg] = cur
    for i in range(2, n):
        ratio = np.power(radii[i - 1] / radii[i], -kv)
        g = hilbert_piece(model, radii[i], radii[i - 1], radii[i], f[i - 1], f[i], mids[i], kv)
        cur = ratio * (cur - f[i - 1]) + amul * g + f[i]
        out[i, neg] = cur

    # k >= 0: inward; the seed integral beyond r_N is empty (support inside)
    kv = kvals[pos]
    f = hs[:, pos]
    bmul = -2.0 * (kv + 1)
    cur = f[n - 1].copy()
    out[n - 1, pos] = cur
    for i in range(n - 2, 0, -1):
        ratio = np.power(radii[i] / radii[i + 1], kv)
        g = hilbert_piece(model, radii[i], radii[i], radii[i + 1], f[i], f[i + 1], mids[i + 1], kv)
        cur = ratio * (cur - f[i + 1]) + bmul * g + f[i]
        out[i, pos] = cur

    # center: c_k(0) = 0 for k != 0; the k = 0 value continues the inward
    # recursion with the (log-free, since hs[0] = 0) first-interval integral
    col0 = int(np.nonzero(kvals == 0)[0][0])
    f0 = hs[:, col0]
    if model is RadialModel.LINEAR:
        first = f0[1]  # alpha * r_2 with alpha = f0[1]/r_2
    else:
        first = f0[1] * np.log(radii[1] / mids[1])
    out[0, :] = 0.0
    out[0, col0] = out[1, col0] - f0[1] - 2.0 * first
    return out


def cauchy_sweep(hs, radii, mids, kvals, model: RadialModel):
    n, m = hs.shape
    out = np.zeros((n, m), dtype=np.complex128)

    neg = kvals < 0
    pos = ~neg

    kv = kvals[neg]
    f = hs[:, neg]
    cur = 2.0 * cauchy_piece(model, radii[1], 0.0, radii[1], f[0], f[1], mids[1], kv)
    out[1, neg] = cur
    for i in range(2, n):
        ratio = np.power(radii[i - 1] / radii[i], -kv)
        g = cauchy_piece(model, radii[i], radii[i - 1], radii[i], f[i - 1], f[i], mids[i], kv)
        cur = ratio * cur + 2.0 * g
        out[i, neg] = cur

    kv = kvals[pos]
    f = hs[:, pos]
    cur = np.zeros(kv.shape, dtype=np.complex128)
    for i in range(n - 2, 0, -1):
        ratio = np.power(radii[i] / radii[i + 1], kv)
        g = cauchy_piece(model, radii[i], radii[i], radii[i + 1], f[i], f[i + 1], mids[i + 1], kv)
        cur = ratio * cur - 2.0 * g
        out[i, pos] = cur

    # center: p_k(0) = 0 for k != 0; p_0(0) closes the inward recursion with
    # the plain (weight-free) integral over [0, r_2]
    col0 = int(np.nonzero(kvals == 0)[0][0])
    f0 = hs[:, col0]
    if model is RadialModel.LINEAR:
        first = 0.5 * (f0[0] + f0[1]) * radii[1]
    else:
        first = f0[0] * mids[1] + f0[1] * (radii[1] - mids[1])
    out[0, :] = 0.0
    out[0, col0] = out[1, col0] - 2.0 * first
    return out
