"""Radial interpolation models and their closed-form kernel integrals.

Coefficient profiles ``h_k(r)`` known at the grid radii are extended to all
``r`` by one of two models:

* ``RadialModel.CONSTANT`` -- value ``h_k(r_i)`` on the midpoint cell
  ``[m_i, m_{i+1})`` around each radius;
* ``RadialModel.LINEAR`` -- nodal values joined linearly between radii.

Every transform in this package reduces to integrals of the model against
power kernels over one radial interval ``[a, b]``:

    W = integral (r/rho)^k / rho  d rho      (Hilbert-type weight)
    V = integral (r/rho)^k        d rho      (Cauchy-type weight)
    X = integral (r/rho)^k * rho  d rho      (Cauchy, linear term)

evaluated here in closed form.  Powers are only ever taken of ratios on the
contracting side (``(r/rho)^k <= 1`` for the sign of ``k`` in use), so no
intermediate can overflow even for ``|k|`` in the thousands.  Logarithmic
antiderivatives appear at the exceptional exponents (``k = 0`` for W,
``k = 1`` for V, ``k = 2`` for X).

The interval functions below are vectorized over the angular index array
``kv`` with scalar geometry, which is the shape both the direct transforms
and the pure-NumPy sweep backend consume.
"""

from __future__ import annotations

import enum

import numpy as np

__all__ = ["RadialModel", "hilbert_piece", "cauchy_piece"]


class RadialModel(enum.Enum):
    """Radial extension rule applied to per-radius Fourier coefficients."""

    CONSTANT = "constant"
    LINEAR = "linear"

    @classmethod
    def parse(cls, name: str) -> "RadialModel":
        key = name.strip().lower()
        if key in ("const", "constant", "pc"):
            return cls.CONSTANT
        if key in ("linear", "lin", "pl"):
            return cls.LINEAR
        raise ValueError(f"unknown radial model {name!r}")


def _rpow(r: float, x: float, kv: np.ndarray) -> np.ndarray:
    # (r/x)^k, with the convention x == 0 -> 0 (used only where the k < 0
    # decay or a vanishing prefactor makes that the correct limit).
    if x == 0.0:
        return np.zeros(kv.shape)
    return np.power(r / x, kv)


def _w_weight(r: float, a: float, b: float, kv: np.ndarray) -> np.ndarray:
    """``integral_a^b (r/rho)^k drho/rho``; at a == 0 only k < 0 is integrable."""
    pa = _rpow(r, a, kv)
    pb = _rpow(r, b, kv)
    kd = np.where(kv == 0, 1, kv)
    if a == 0.0:
        # the k == 0 entry must be paired with a zero coefficient upstream
        return np.where(kv == 0, 0.0, (pa - pb) / kd)
    return np.where(kv == 0, np.log(b / a), (pa - pb) / kd)


def _v_weight(r: float, a: float, b: float, kv: np.ndarray) -> np.ndarray:
    """``integral_a^b (r/rho)^k drho``."""
    pa = _rpow(r, a, kv)
    pb = _rpow(r, b, kv)
    kd = np.where(kv == 1, 2, kv)
    gen = (b * pb - a * pa) / (1 - kd)
    if a == 0.0:
        return np.where(kv == 1, 0.0, gen)  # k = 1 never reaches a = 0
    return np.where(kv == 1, r * np.log(b / a), gen)


def _x_weight(r: float, a: float, b: float, kv: np.ndarray) -> np.ndarray:
    """``integral_a^b (r/rho)^k rho drho``."""
    pa = _rpow(r, a, kv)
    pb = _rpow(r, b, kv)
    kd = np.where(kv == 2, 3, kv)
    gen = (b * b * pb - a * a * pa) / (2 - kd)
    if a == 0.0:
        return np.where(kv == 2, 0.0, gen)  # k = 2 never reaches a = 0
    return np.where(kv == 2, r * r * np.log(b / a), gen)


def hilbert_piece(model, r, a, b, va, vb, mid, kv):
    """``integral_a^b (r/rho)^k h(rho) drho / rho`` for one inter-node interval.

    ``[a, b]`` is an interval between consecutive radii, ``va``/``vb`` the
    coefficient values at its endpoints (complex vectors over ``kv``) and
    ``mid`` the cell midpoint at which the CONSTANT model switches value.
    """
    if model is RadialModel.LINEAR:
        alpha = (vb - va) / (b - a)
        beta = va - alpha * a
        return alpha * _v_weight(r, a, b, kv) + beta * _w_weight(r, a, b, kv)
    return va * _w_weight(r, a, mid, kv) + vb * _w_weight(r, mid, b, kv)


def cauchy_piece(model, r, a, b, va, vb, mid, kv):
    """``integral_a^b (r/rho)^k h(rho) drho`` for one inter-node interval."""
    if model is RadialModel.LINEAR:
        alpha = (vb - va) / (b - a)
        beta = va - alpha * a
        return alpha * _x_weight(r, a, b, kv) + beta * _v_weight(r, a, b, kv)
    return va * _v_weight(r, a, mid, kv) + vb * _v_weight(r, mid, b, kv)
