"""Wirtinger derivatives of grid functions through their Fourier coefficients.

Writing ``g(r, t) = sum_k g_k(r) e^{ikt}`` for a function ``f`` of
``z = r e^{it}``, the polar chain rule gives exact coefficient expressions
for the complex derivatives:

    (df/dz)      has coefficient  (g_k'(r) + k g_k(r)/r) / 2  at index k - 1,
    (df/dzbar)   has coefficient  (g_k'(r) - k g_k(r)/r) / 2  at index k + 1.

The radial derivative ``g_k'`` comes from a finite-difference stencil; the
default right two-point stencil keeps the whole pipeline first-order (the
documented trade-off of the potential-derivative route), while the central
stencil upgrades smooth inputs to second order.

At the center the quotient ``k g_k(r)/r`` is replaced by its one-sided
first-order limit ``k g_k(r_2)/r_2`` for ``k != 0`` (and by zero for
``k = 0``); valid center data has ``g_k(0) = 0`` for every ``k != 0``, so
this tends to the true limit as the grid refines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .grid import CoefficientTable, shift_k

__all__ = ["DifferenceStencil", "RIGHT2", "CENTRAL", "dz_coefficients", "dzbar_coefficients"]


@dataclass(frozen=True)
class DifferenceStencil:
    """Radial finite-difference rule.

    ``kind`` is one of ``"right2"``, ``"central"`` or ``"custom"``.  Custom
    stencils give integer node ``offsets`` and ``weights`` in units of the
    (uniform) radial spacing; weights must sum to zero and have unit first
    moment, which makes linear radial profiles exact.  Rows too close to an
    edge for the stencil fall back to the one-sided two-point rule.
    """

    kind: str = "right2"
    order: int = 1
    offsets: tuple = field(default=())
    weights: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in ("right2", "central", "custom"):
            raise ValueError(f"unknown stencil kind {self.kind!r}")
        if self.kind == "custom":
            off = np.asarray(self.offsets, dtype=np.int64)
            w = np.asarray(self.weights, dtype=np.float64)
            if off.size == 0 or off.shape != w.shape:
                raise ValueError("custom stencil needs matching offsets and weights")
            if abs(w.sum()) > 1e-12 or abs((w * off).sum() - 1.0) > 1e-12:
                raise ValueError("stencil weights must sum to 0 with unit first moment")

    @classmethod
    def parse(cls, name: str) -> "DifferenceStencil":
        key = name.strip().lower()
        if key in ("right2", "right-two-point", "right"):
            return RIGHT2
        if key in ("central", "center"):
            return CENTRAL
        raise ValueError(f"unknown stencil {name!r}")


RIGHT2 = DifferenceStencil("right2", 1)
CENTRAL = DifferenceStencil("central", 2)


def _radial_derivative(coeffs: np.ndarray, radii: np.ndarray, stencil: DifferenceStencil):
    n = radii.size
    d = np.empty_like(coeffs)
    if stencil.kind == "right2":
        dr = (radii[1:] - radii[:-1])[:, None]
        d[:-1] = (coeffs[1:] - coeffs[:-1]) / dr
        d[-1] = (coeffs[-1] - coeffs[-2]) / (radii[-1] - radii[-2])
        return d
    if stencil.kind == "central":
        span = (radii[2:] - radii[:-2])[:, None]
        d[1:-1] = (coeffs[2:] - coeffs[:-2]) / span
        d[0] = (coeffs[1] - coeffs[0]) / (radii[1] - radii[0])
        d[-1] = (coeffs[-1] - coeffs[-2]) / (radii[-1] - radii[-2])
        return d
    # custom: uniform spacing required so offsets scale by one step
    steps = np.diff(radii)
    if not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
        raise ValueError("custom stencils require a uniform radial grid")
    h = steps[0]
    off = np.asarray(stencil.offsets, dtype=np.int64)
    w = np.asarray(stencil.weights, dtype=np.float64)
    lo, hi = -int(off.min(initial=0)), int(off.max(initial=0))
    for i in range(n):
        if i - lo < 0 or i + hi >= n:
            j = i + 1 if i + 1 < n else i - 1
            d[i] = (coeffs[max(i, j)] - coeffs[min(i, j)]) / (h * abs(j - i))
        else:
            d[i] = sum(wt * coeffs[i + t] for wt, t in zip(w, off)) / h
    return d


def _angular_quotient(coeffs: np.ndarray, radii: np.ndarray, kvals: np.ndarray):
    """``k g_k(r) / r`` with the one-sided replacement on the center row."""
    q = np.empty_like(coeffs)
    q[1:] = kvals[None, :] * coeffs[1:] / radii[1:, None]
    q[0] = kvals * coeffs[1] / radii[1]
    q[0, kvals == 0] = 0.0
    return q


def dz_coefficients(g: CoefficientTable, stencil: DifferenceStencil = RIGHT2) -> CoefficientTable:
    """Coefficients of df/dz; index shifts down by one (k -> k-1)."""
    grid = g.grid
    kvals = grid.k_values()
    deriv = _radial_derivative(g.coeffs, grid.radii, stencil)
    deriv += _angular_quotient(g.coeffs, grid.radii, kvals)
    deriv *= 0.5
    return CoefficientTable._wrap(grid, shift_k(deriv, 1))


def dzbar_coefficients(g: CoefficientTable, stencil: DifferenceStencil = RIGHT2) -> CoefficientTable:
    """Coefficients of df/dzbar; index shifts up by one (k -> k+1)."""
    grid = g.grid
    kvals = grid.k_values()
    deriv = _radial_derivative(g.coeffs, grid.radii, stencil)
    deriv -= _angular_quotient(g.coeffs, grid.radii, kvals)
    deriv *= 0.5
    return CoefficientTable._wrap(grid, shift_k(deriv, -1))
