"""Exact machinery: monomial transforms, polynomial iteration, quadrature oracle.

The Hilbert transform of a monomial restricted to the closed disk
``B(0, R)`` has a closed form.  With the Heaviside step ``eta``
(``eta(0) = 1``, matching the closed-disk support convention):

    T[z^p zbar^q](z) = (p/(q+1)) * eta(R-|z|) * z^(p-1) zbar^(q+1)
                     + [eta(q+1-p) - eta(R-|z|)] * ((p-q-1)/(q+1))
                       * R^(2(q+1)) * z^(p-q-2).

Inside the disk the result is again a bivariate polynomial; outside it is a
finite Laurent tail in 1/z.  By linearity this transforms any polynomial
dilatation exactly, which powers the reference iteration ("scheme 3") whose
only error is floating-point rounding -- run it with extended-precision
coefficients (``numpy.clongdouble``) when the platform provides them to
push the rounding floor below double precision.

The module also carries the independent measuring stick for everything
else: adaptive polar quadrature of the defining principal-value integral

    T[f](z) = -(1/pi) p.v. integral_{B(0,R)} f(xi) / (xi - z)^2 dA(xi)

(and its weakly singular Cauchy counterpart), with Richardson extrapolation
in the excluded-disk radius and an honest error estimate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "PolyDifferential",
    "LaurentTail",
    "PolynomialGrowthError",
    "OracleConvergenceError",
    "monomial_hilbert",
    "poly_hilbert",
    "quartic_mu",
    "scheme3_step",
    "scheme3_iterate",
    "sample_poly",
    "singular_quadrature_oracle",
    "cauchy_transform_quadrature",
]


class PolynomialGrowthError(RuntimeError):
    """Raised when an exact polynomial iterate exceeds the term ceiling."""


class OracleConvergenceError(RuntimeError):
    """Raised when the quadrature oracle cannot certify its own accuracy."""


def _clean(terms: dict) -> dict:
    return {pq: c for pq, c in terms.items() if c != 0}


@dataclass(frozen=True)
class PolyDifferential:
    """Bivariate polynomial ``sum a_pq z^p zbar^q`` on ``|z| <= R``, zero outside.

    Coefficient and radius dtypes are preserved by all operations, so a
    table built from ``numpy.clongdouble`` entries iterates in extended
    precision throughout.
    """

    support_radius: float
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.support_radius > 0:
            raise ValueError("support radius must be positive")
        for (p, q) in self.terms:
            if p < 0 or q < 0:
                raise ValueError("monomial exponents must be nonnegative")
        object.__setattr__(self, "terms", _clean(dict(self.terms)))

    @property
    def degree(self) -> int:
        return max((p + q for p, q in self.terms), default=0)

    def __add__(self, other):
        terms = dict(self.terms)
        if isinstance(other, PolyDifferential):
            if other.support_radius != self.support_radius:
                raise ValueError("support radius mismatch")
            for pq, c in other.terms.items():
                terms[pq] = terms.get(pq, 0) + c
        else:
            terms[(0, 0)] = terms.get((0, 0), 0) + other
        return PolyDifferential(self.support_radius, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (other * -1 if isinstance(other, PolyDifferential) else -other)

    def __mul__(self, other):
        if isinstance(other, PolyDifferential):
            if other.support_radius != self.support_radius:
                raise ValueError("support radius mismatch")
            terms: dict = {}
            for (p1, q1), c1 in self.terms.items():
                for (p2, q2), c2 in other.terms.items():
                    pq = (p1 + p2, q1 + q2)
                    terms[pq] = terms.get(pq, 0) + c1 * c2
            return PolyDifferential(self.support_radius, terms)
        return PolyDifferential(
            self.support_radius, {pq: c * other for pq, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def evaluate(self, z):
        """Pointwise values at complex ``z`` (scalar or array); 0 outside."""
        zarr = np.asarray(z)
        dtype = np.result_type(
            np.complex128, zarr.dtype, *(np.asarray(c).dtype for c in self.terms.values())
        )
        out = np.zeros(zarr.shape, dtype=dtype)
        zb = np.conj(zarr)
        for (p, q), c in self.terms.items():
            out += c * zarr**p * zb**q
        outside = np.abs(zarr) > self.support_radius
        if out.ndim:
            out[outside] = 0
            return out
        return out[()] * 0 if outside else out[()]


@dataclass(frozen=True)
class LaurentTail:
    """Finite expansion ``sum_n c_n z^(-n)``, ``n >= 1``, valid on ``|z| > R``."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if any(n < 1 for n in self.terms):
            raise ValueError("tail exponents must be >= 1")
        object.__setattr__(self, "terms", _clean(dict(self.terms)))

    def evaluate(self, z):
        z = np.asarray(z)
        out = np.zeros(z.shape, dtype=np.complex128)
        for n, c in self.terms.items():
            out = out + c * z ** (-n)
        return out


def monomial_hilbert(p: int, q: int, support_radius: float, z):
    """Closed-form ``T[z^p zbar^q * chi_{B(0,R)}]`` at ``z`` (scalar or array)."""
    if p < 0 or q < 0:
        raise ValueError("exponents must be nonnegative")
    if not support_radius > 0:
        raise ValueError("support radius must be positive")
    zarr = np.asarray(z, dtype=np.complex128)
    scalar = zarr.ndim == 0
    zarr = np.atleast_1d(zarr)
    inside = np.abs(zarr) <= support_radius
    out = np.zeros(zarr.shape, dtype=np.complex128)
    if p >= 1:
        out[inside] = (p / (q + 1)) * zarr[inside] ** (p - 1) * np.conj(zarr[inside]) ** (q + 1)
    coef = (p - q - 1) / (q + 1) * support_radius ** (2 * (q + 1))
    if p >= q + 2:
        out[inside] -= coef * zarr[inside] ** (p - q - 2)
    elif p != q + 1:
        outside = ~inside
        out[outside] = coef * zarr[outside] ** (p - q - 2)
    return complex(out[0]) if scalar else out


def poly_hilbert(h: PolyDifferential):
    """Termwise transform: polynomial inside the disk, Laurent tail outside."""
    inside: dict = {}
    tail: dict = {}
    r2 = h.support_radius * h.support_radius
    for (p, q), a in h.terms.items():
        if p >= 1:
            pq = (p - 1, q + 1)
            inside[pq] = inside.get(pq, 0) + a * p / (q + 1)
        if p == q + 1:
            continue
        coef = a * (p - q - 1) / (q + 1) * r2 ** (q + 1)
        if p >= q + 2:
            pq = (p - q - 2, 0)
            inside[pq] = inside.get(pq, 0) - coef
        else:
            n = q + 2 - p
            tail[n] = tail.get(n, 0) + coef
    return PolyDifferential(h.support_radius, inside), LaurentTail(tail)


def quartic_mu(a: float, s: float, dtype=np.complex128) -> PolyDifferential:
    """Radial quartic test dilatation ``a - (a/s^2)|z|^2 + (a/4s^4)|z|^4``.

    Nonnegative, peaks at ``a`` in the center and vanishes to second order
    on its support circle ``|z| = sqrt(2) s``.  Requires ``a < 1`` so the
    fixed-point iteration stays a contraction.
    """
    if not 0 < a < 1:
        raise ValueError("need 0 < a < 1 (contraction bound)")
    if not s > 0:
        raise ValueError("need s > 0")
    one = np.dtype(dtype).type(1)
    av = one * a
    sv = (one * s).real
    radius = np.sqrt(2 * sv * sv)
    return PolyDifferential(
        radius, {(0, 0): av, (1, 1): -av / (sv * sv), (2, 2): av / (4 * sv**4)}
    )


def scheme3_step(mu: PolyDifferential, h: PolyDifferential) -> PolyDifferential:
    """One exact fixed-point step: inside part of ``T[mu * (h + 1)]``."""
    return poly_hilbert(mu * (h + 1))[0]


def scheme3_iterate(
    mu: PolyDifferential,
    n_steps: int,
    initial: str = "mu",
    term_limit: int = 50_000,
) -> PolyDifferential:
    """Iterate the exact polynomial step ``n_steps`` times.

    ``initial`` selects the starting iterate (``"mu"`` or ``"zero"``).  The
    degree grows by ``deg(mu)`` per step; if the sparse term count passes
    ``term_limit`` a :class:`PolynomialGrowthError` signals that truncation
    would be needed to continue.
    """
    if initial == "mu":
        h = mu
    elif initial == "zero":
        h = PolyDifferential(mu.support_radius, {})
    else:
        raise ValueError("initial must be 'mu' or 'zero'")
    for _ in range(n_steps):
        h = scheme3_step(mu, h)
        if len(h.terms) > term_limit:
            raise PolynomialGrowthError(
                f"iterate exceeded {term_limit} terms; raise the limit or truncate"
            )
    return h


def sample_poly(poly: PolyDifferential, grid) -> "GridFunction":
    """Sample a polynomial dilatation on a grid (closed-disk support rule).

    Terms are grouped into per-radius angular profiles first, so the cost is
    ``O(terms * N + N * K * M)`` with ``K`` distinct angular indices --
    much cheaper than pointwise evaluation for the high-degree iterates.
    """
    from .grid import GridFunction  # local import: grid.py stays dependency-free

    radii = grid.radii
    profiles: dict[int, np.ndarray] = {}
    rdtype = np.result_type(
        np.float64, *(np.asarray(c).real.dtype for c in poly.terms.values())
    )
    r = radii.astype(rdtype)
    for (p, q), c in poly.terms.items():
        k = p - q
        if abs(k) >= grid.angular_count // 2:
            raise ValueError("polynomial angular index exceeds the grid's Nyquist range")
        prof = profiles.setdefault(k, np.zeros(r.size, dtype=np.result_type(np.complex128, rdtype)))
        prof += c * r ** (p + q)
    mask = radii > poly.support_radius
    kidx = np.array(sorted(profiles), dtype=np.int64)
    pmat = np.stack([profiles[k] for k in kidx]) if len(kidx) else np.zeros((0, r.size))
    pmat[:, mask] = 0
    theta = grid.angles.astype(rdtype)
    basis = np.exp(1j * np.outer(kidx.astype(rdtype), theta))
    values = pmat.T @ basis
    return GridFunction._wrap(grid, np.ascontiguousarray(values, dtype=np.complex128))


# ---------------------------------------------------------------------------
# quadrature oracles
# ---------------------------------------------------------------------------


def _gl_panels(a: float, b: float, n_panels: int, n_nodes: int, geometric: bool = False):
    """Gauss-Legendre nodes/weights on [a, b] split into panels."""
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    if geometric:
        edges = a * (b / a) ** (np.arange(n_panels + 1) / n_panels)
    else:
        edges = np.linspace(a, b, n_panels + 1)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    nodes = (lo[:, None] + half[:, None] * (x[None, :] + 1.0)).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _boundary_distance(z: complex, radius: float, alpha: np.ndarray) -> np.ndarray:
    # distance from z to the circle |xi| = radius along direction alpha
    c = np.real(np.conj(z) * np.exp(1j * alpha))
    return -c + np.sqrt(c * c + radius * radius - abs(z) ** 2)


def _adaptive_angles(z, radius, n_ang):
    # near the support circle the integrand sharpens on the angular scale
    # (|R - |z||)/R, so spend nodes proportionally (power of two for the
    # trapezoid rule's benefit)
    gap = abs(abs(z) - radius)
    need = 40.0 * radius / max(gap, 1e-3 * radius)
    return int(max(n_ang, 2 ** int(np.ceil(np.log2(min(need, 4096))))))


def _disk_quadrature(f, z, radius, kernel_power, eps, n_ang, n_rad):
    """One full quadrature pass at a fixed excluded radius ``eps``."""
    if abs(z) < radius:
        alpha = 2.0 * np.pi * np.arange(n_ang) / n_ang
        phase = np.exp(1j * alpha)
        kern = phase ** (-kernel_power)
        d = 0.5 * (radius - abs(z))
        total = 0.0 + 0.0j
        # core annulus eps..d around z (full circles; angular trapezoid)
        if kernel_power == 2:
            panels = max(4, int(np.ceil(np.log2(d / eps))))
            rho, wr = _gl_panels(eps, d, panels, n_rad, geometric=True)
            vals = f(z + rho[:, None] * phase[None, :])
            total += (2.0 * np.pi / n_ang) * np.sum(wr / rho * (vals @ kern))
        else:
            rho, wr = _gl_panels(0.0 if eps == 0 else eps, d, 4, n_rad)
            vals = f(z + rho[:, None] * phase[None, :])
            total += (2.0 * np.pi / n_ang) * np.sum(wr * (vals @ kern))
        # remainder: d out to the boundary, sliced per direction; geometric
        # panels keep the 1/rho kernel resolved across its whole range
        tmax = _boundary_distance(z, radius, alpha)
        x, w = np.polynomial.legendre.leggauss(2 * n_rad)
        n_panels = max(2, int(np.ceil(np.log2(np.max(tmax) / d) / 2.0)))
        edges = d * (tmax[:, None] / d) ** (np.arange(n_panels + 1)[None, :] / n_panels)
        integ = np.zeros(n_ang, dtype=np.complex128)
        for pnl in range(n_panels):
            half = 0.5 * (edges[:, pnl + 1] - edges[:, pnl])
            rho = edges[:, pnl, None] + half[:, None] * (x[None, :] + 1.0)
            vals = f(z + rho * phase[:, None])
            if kernel_power == 2:
                integ += np.sum(w[None, :] * vals / rho, axis=1) * half
            else:
                integ += np.sum(w[None, :] * vals, axis=1) * half
        total += (2.0 * np.pi / n_ang) * np.sum(integ * kern)
        return -total / np.pi
    # exterior evaluation point: integrand smooth on the whole disk
    alpha = 2.0 * np.pi * np.arange(n_ang) / n_ang
    phase = np.exp(1j * alpha)
    rho, wr = _gl_panels(0.0, radius, 6, n_rad)
    xi = rho[:, None] * phase[None, :]
    vals = f(xi) * rho[:, None] / (xi - z) ** kernel_power
    return -(2.0 / n_ang) * np.sum(vals * wr[:, None])


def singular_quadrature_oracle(f, z, support_radius, eps_list=None, n_ang=64, n_rad=16):
    """Principal-value quadrature of the Hilbert transform at one point.

    ``f`` is a callable on complex arrays, Hoelder continuous at ``z``.
    Returns ``(value, error_estimate)``: each excluded radius in
    ``eps_list`` gets a full polar quadrature, the limit is Richardson-
    extrapolated in ``eps^2``, and the estimate combines the extrapolation
    residue with a doubled-resolution pass.  Raises
    :class:`OracleConvergenceError` when the two passes refuse to settle.
    """
    z = complex(z)
    radius = float(support_radius)
    if abs(abs(z) - radius) < 1e-9 * radius:
        raise ValueError("oracle point must be strictly inside or outside the support circle")
    if eps_list is None:
        eps_list = [4e-3 * radius, 2e-3 * radius, 1e-3 * radius]
    eps_list = sorted(eps_list, reverse=True)
    n_ang = _adaptive_angles(z, radius, n_ang)
    if abs(z) > radius:
        coarse = _disk_quadrature(f, z, radius, 2, 0.0, n_ang, n_rad)
        fine = _disk_quadrature(f, z, radius, 2, 0.0, 2 * n_ang, 2 * n_rad)
        err = abs(fine - coarse)
    else:
        def extrapolated(na, nr):
            vals = [_disk_quadrature(f, z, radius, 2, e, na, nr) for e in eps_list]
            if len(vals) == 1:
                return vals[0], 0.0
            # one Richardson level in eps^2 (excluded-disk bias is O(eps^2))
            ext = [
                ((hi / lo) ** 2 * vb - va) / ((hi / lo) ** 2 - 1.0)
                for va, vb, hi, lo in zip(vals, vals[1:], eps_list, eps_list[1:])
            ]
            if len(ext) > 1:
                resid = max(abs(a - b) for a, b in zip(ext, ext[1:]))
            else:
                resid = 0.25 * abs(ext[0] - vals[-1])
            return ext[-1], resid
        coarse, _ = extrapolated(n_ang, n_rad)
        fine, resid = extrapolated(2 * n_ang, 2 * n_rad)
        err = abs(fine - coarse) + resid
    scale = max(1.0, abs(fine))
    estimate = 10.0 * err + 1e-12 * scale
    if estimate > 1e-3 * scale:
        raise OracleConvergenceError(
            f"quadrature did not converge at z={z}: passes differ by {err:.3e}"
        )
    return fine, estimate


def cauchy_transform_quadrature(f, z, support_radius, n_ang=64, n_rad=16):
    """Quadrature of the (weakly singular) Cauchy transform at one point."""
    z = complex(z)
    radius = float(support_radius)
    if abs(abs(z) - radius) < 1e-9 * radius:
        raise ValueError("oracle point must be strictly inside or outside the support circle")
    n_ang = _adaptive_angles(z, radius, n_ang)
    coarse = _disk_quadrature(f, z, radius, 1, 0.0, n_ang, n_rad)
    fine = _disk_quadrature(f, z, radius, 1, 0.0, 2 * n_ang, 2 * n_rad)
    err = abs(fine - coarse)
    return fine, 10.0 * err + 1e-12 * max(1.0, abs(fine))
