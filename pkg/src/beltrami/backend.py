"""Sweep-kernel backend selection.

The recursive radial sweeps are the hot loop of every transform, so they
exist twice: a compiled extension (``beltrami._sweeps``, built from Cython
when available) and a pure-NumPy fallback (``beltrami._sweeps_py``).  The
compiled one is picked at import time when present; set the environment
variable ``BELTRAMI_BACKEND=python`` to force the fallback, e.g. for the
backend benchmark (``beltrami bench-backends`` times both).
"""

from __future__ import annotations

import os

import numpy as np

from . import _sweeps_py
from .piecewise import RadialModel

__all__ = ["BACKEND", "hilbert_sweep", "cauchy_sweep", "available_backends"]

_compiled = None
if os.environ.get("BELTRAMI_BACKEND", "").lower() != "python":
    try:
        from . import _sweeps as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def _prep(hs, radii, mids, kvals):
    return (
        np.ascontiguousarray(hs, dtype=np.complex128),
        np.ascontiguousarray(radii, dtype=np.float64),
        np.ascontiguousarray(mids, dtype=np.float64),
        np.ascontiguousarray(kvals, dtype=np.int64),
    )


def hilbert_sweep(hs, radii, mids, kvals, model: RadialModel):
    hs, radii, mids, kvals = _prep(hs, radii, mids, kvals)
    if _compiled is not None:
        return _compiled.hilbert_sweep(hs, radii, mids, kvals, int(model is RadialModel.LINEAR))
    return _sweeps_py.hilbert_sweep(hs, radii, mids, kvals, model)


def cauchy_sweep(hs, radii, mids, kvals, model: RadialModel):
    hs, radii, mids, kvals = _prep(hs, radii, mids, kvals)
    if _compiled is not None:
        return _compiled.cauchy_sweep(hs, radii, mids, kvals, int(model is RadialModel.LINEAR))
    return _sweeps_py.cauchy_sweep(hs, radii, mids, kvals, model)


def available_backends() -> dict:
    """Uniform-signature sweep callables keyed by backend name."""

    def _wrap_py(fn):
        return lambda hs, radii, mids, kvals, model: fn(*_prep(hs, radii, mids, kvals), model)

    def _wrap_c(fn):
        return lambda hs, radii, mids, kvals, model: fn(
            *_prep(hs, radii, mids, kvals), int(model is RadialModel.LINEAR)
        )

    out = {
        "python": {
            "hilbert": _wrap_py(_sweeps_py.hilbert_sweep),
            "cauchy": _wrap_py(_sweeps_py.cauchy_sweep),
        }
    }
    if _compiled is not None:
        out["compiled"] = {
            "hilbert": _wrap_c(_compiled.hilbert_sweep),
            "cauchy": _wrap_c(_compiled.cauchy_sweep),
        }
    return out
