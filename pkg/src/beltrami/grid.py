"""Circular grids, grid-sampled functions, and the angular Fourier bridge.

A :class:`PolarGrid` discretizes the plane by radii ``0 = r_1 < ... < r_N``
and ``M`` equispaced angles ``theta_j = 2*pi*j/M``.  Functions are stored
either as point values on the ``N x M`` grid (:class:`GridFunction`) or as
angular Fourier coefficients per radius (:class:`CoefficientTable`), the
representation all transforms in this package act on.  ``analyze`` and
``synthesize`` convert between the two with a batch FFT in
``O(N M log M)``.

Conventions:

* The forward transform carries the ``1/M`` factor, so ``coeffs[i, k]``
  approximates ``(1/2pi) * integral h(r_i e^{i t}) e^{-i k t} dt``.
* Coefficient columns use the FFT wraparound layout; column ``j`` holds the
  angular index ``k = j`` for ``j < M/2`` and ``k = j - M`` otherwise, i.e.
  ``k`` ranges over ``[-M/2, M/2)``.  Index shifts performed by the
  transforms truncate symmetrically: content pushed past ``|k| = M/2`` is
  dropped rather than aliased, so the top two coefficient rows of a shifted
  table are lost (negligible for smooth data, where those rows are tiny).
* The support radius ``R`` is always a grid node, ``r_L = R``; compactly
  supported functions vanish on every radius beyond ``r_L``.

All operations here are pure: inputs are never mutated (value arrays are
frozen on construction) and results are deterministic, so concurrent use is
safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "PolarGrid",
    "GridFunction",
    "CoefficientTable",
    "build_grid",
    "analyze",
    "synthesize",
    "pointwise_product",
    "sup_distance",
    "sample_function",
    "shift_k",
]

#: Relative slack for "exactly zero" checks on data that went through an FFT.
ZERO_TOL = 1e-12


def _frozen(arr: np.ndarray, dtype) -> np.ndarray:
    out = np.array(arr, dtype=dtype, order="C", copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class PolarGrid:
    """Radial/angular discretization of a disk (plus optional outer annulus).

    Attributes
    ----------
    radii : ndarray, shape (N,)
        Strictly increasing radii with ``radii[0] == 0``.
    midpoints : ndarray, shape (N+1,)
        ``midpoints[0] == 0``, ``midpoints[i] == (radii[i-1]+radii[i])/2``
        for interior ``i``, and ``midpoints[N]`` capped to ``radii[-1]``
        (used only when the support reaches the outermost radius).
    support_index : int
        One-based index ``L`` with ``radii[L-1] == support_radius``.
    angular_count : int
        Number of angles ``M``; a power of two, at least 4.
    """

    radii: np.ndarray
    midpoints: np.ndarray
    support_index: int
    angular_count: int

    def __post_init__(self):
        r = _frozen(self.radii, np.float64)
        m = _frozen(self.midpoints, np.float64)
        object.__setattr__(self, "radii", r)
        object.__setattr__(self, "midpoints", m)
        n = r.size
        if n < 2:
            raise ValueError("need at least 2 radii")
        if r[0] != 0.0 or np.any(np.diff(r) <= 0):
            raise ValueError("radii must start at 0 and increase strictly")
        if m.shape != (n + 1,) or m[0] != 0.0:
            raise ValueError("midpoints must have N+1 entries starting at 0")
        if not (1 < self.support_index <= n):
            raise ValueError("support index L must satisfy 1 < L <= N")
        mm = self.angular_count
        if mm < 4 or mm & (mm - 1):
            raise ValueError("angular count M must be a power of two >= 4")

    @property
    def radial_count(self) -> int:
        return self.radii.size

    @property
    def support_radius(self) -> float:
        return float(self.radii[self.support_index - 1])

    @property
    def angles(self) -> np.ndarray:
        m = self.angular_count
        return 2.0 * np.pi * np.arange(m) / m

    def k_values(self) -> np.ndarray:
        """Angular indices per coefficient column, FFT wraparound layout."""
        m = self.angular_count
        return (np.fft.fftfreq(m) * m).astype(np.int64)

    def nodes(self) -> np.ndarray:
        """Complex node positions ``r_i * exp(i*theta_j)`` as an N x M array."""
        return self.radii[:, None] * np.exp(1j * self.angles)[None, :]

    def is_uniform(self) -> bool:
        d = np.diff(self.radii)
        return bool(np.allclose(d, d[0], rtol=1e-12, atol=0.0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolarGrid)
            and self.angular_count == other.angular_count
            and self.support_index == other.support_index
            and np.array_equal(self.radii, other.radii)
        )

    def __hash__(self):
        return hash((self.radial_count, self.angular_count, self.support_index))


def build_grid(
    n_radii: int, m_angles: int, support_radius: float, outer_factor: float = 1.0
) -> PolarGrid:
    """Build a grid on ``[0, outer_factor*R]`` with ``R`` forced onto a node.

    Radii are uniform whenever ``(n_radii-1)/outer_factor`` is an integer,
    which places ``R`` exactly on a node.  Otherwise ``R`` is inserted as an
    extra node (the grid then has ``n_radii + 1`` radii and is non-uniform);
    the transforms branch exactly at ``r = R``, so ``R`` must be a node.
    """
    if n_radii < 2:
        raise ValueError("n_radii must be >= 2")
    if m_angles < 4 or m_angles & (m_angles - 1):
        raise ValueError("m_angles must be a power of two >= 4")
    if not support_radius > 0.0:
        raise ValueError("support_radius must be positive")
    if not outer_factor >= 1.0:
        raise ValueError("outer_factor must be >= 1")

    span = outer_factor * support_radius
    radii = np.linspace(0.0, span, n_radii)
    pos = (n_radii - 1) / outer_factor
    if abs(pos - round(pos)) <= 1e-9:
        support_index = int(round(pos)) + 1
        radii[support_index - 1] = support_radius  # snap to R exactly
    else:
        radii = np.unique(np.concatenate([radii, [support_radius]]))
        support_index = int(np.searchsorted(radii, support_radius)) + 1
        radii[support_index - 1] = support_radius

    n = radii.size
    mids = np.empty(n + 1)
    mids[0] = 0.0
    mids[1:n] = 0.5 * (radii[:-1] + radii[1:])
    mids[n] = radii[-1]
    return PolarGrid(radii, mids, support_index, m_angles)


def _as_values(arr, grid: PolarGrid) -> np.ndarray:
    out = _frozen(arr, np.complex128)
    if out.shape != (grid.radial_count, grid.angular_count):
        raise ValueError(
            f"array shape {out.shape} does not match grid "
            f"({grid.radial_count} x {grid.angular_count})"
        )
    return out


@dataclass(frozen=True)
class GridFunction:
    """Complex samples ``values[i, j] = h(r_i e^{i theta_j})`` on a grid."""

    grid: PolarGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", _as_values(self.values, self.grid))

    @classmethod
    def _wrap(cls, grid: PolarGrid, values: np.ndarray) -> "GridFunction":
        # adopt a freshly allocated array without the defensive copy
        obj = object.__new__(cls)
        values.setflags(write=False)
        object.__setattr__(obj, "grid", grid)
        object.__setattr__(obj, "values", values)
        return obj

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def is_compactly_supported(self, tol: float = ZERO_TOL) -> bool:
        """True if the samples vanish on every radius beyond ``r_L``."""
        tail = self.values[self.grid.support_index:]
        if tail.size == 0:
            return True
        scale = max(1.0, self.sup_norm())
        return float(np.max(np.abs(tail), initial=0.0)) <= tol * scale


@dataclass(frozen=True)
class CoefficientTable:
    """Angular Fourier coefficients per radius, FFT column layout."""

    grid: PolarGrid
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_values(self.coeffs, self.grid))

    @classmethod
    def _wrap(cls, grid: PolarGrid, coeffs: np.ndarray) -> "CoefficientTable":
        obj = object.__new__(cls)
        coeffs.setflags(write=False)
        object.__setattr__(obj, "grid", grid)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs)))


def analyze(f: GridFunction) -> CoefficientTable:
    """Angular Fourier coefficients of ``f``: per-radius FFT with a 1/M factor."""
    coeffs = np.fft.fft(f.values, axis=1)
    coeffs /= f.grid.angular_count
    return CoefficientTable._wrap(f.grid, coeffs)


def synthesize(c: CoefficientTable) -> GridFunction:
    """Point values from a coefficient table; exact inverse of ``analyze``."""
    values = np.fft.ifft(c.coeffs * c.grid.angular_count, axis=1)
    return GridFunction._wrap(c.grid, values)


def pointwise_product(a: GridFunction, b: GridFunction) -> GridFunction:
    """Entrywise product of two grid functions on the same grid."""
    if a.grid != b.grid:
        raise ValueError("grid mismatch in pointwise_product")
    return GridFunction._wrap(a.grid, a.values * b.values)


def sup_distance(a: GridFunction, b: GridFunction) -> float:
    """Maximum entrywise modulus of the difference."""
    if a.grid != b.grid:
        raise ValueError("grid mismatch in sup_distance")
    return float(np.max(np.abs(a.values - b.values)))


def sample_function(grid: PolarGrid, fn, support_radius: float | None = None) -> GridFunction:
    """Sample a callable ``fn(z)`` at the grid nodes.

    With ``support_radius`` given, samples at radii strictly beyond it are
    zeroed (closed-disk convention: the circle ``r == support_radius`` is
    kept), which produces data satisfying the compact-support invariant.
    """
    z = grid.nodes()
    vals = np.asarray(fn(z), dtype=np.complex128)
    if vals.shape != z.shape:
        vals = np.broadcast_to(vals, z.shape).copy()
    else:
        vals = vals.copy()
    if support_radius is not None:
        vals[grid.radii > support_radius, :] = 0.0
    return GridFunction(grid, np.ascontiguousarray(vals, dtype=np.complex128))


def shift_k(coeffs: np.ndarray, shift: int) -> np.ndarray:
    """Angular-index shift ``out_k = in_{k+shift}`` with symmetric truncation.

    Entries that would come from outside ``[-M/2, M/2)`` are zero-filled;
    nothing wraps around.  In the FFT wraparound layout this is one roll
    plus zeroing the columns whose source crossed ``|k| = M/2``.
    """
    m = coeffs.shape[1]
    out = np.roll(coeffs, -shift, axis=1)
    if shift >= 0:
        out[:, m // 2 - shift: m // 2] = 0.0
    else:
        out[:, m // 2: m // 2 - shift] = 0.0
    return out
