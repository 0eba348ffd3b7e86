"""Fixed-point solution of the Beltrami equation ``df/dzbar = mu df/dz``.

For compactly supported ``mu`` with ``sup|mu| < 1`` the auxiliary equation
``h = T[mu (h + 1)]`` is solved by straight iteration (the operator is a
contraction), after which

    f = P[mu (h + 1)] + z

is the normalized solution: ``f(0) = 0`` exactly by the origin-normalized
Cauchy transform, and ``f(z) -> z + O(1/z)`` far outside the support.

Three interchangeable realizations of the iteration step are provided:

* scheme 1 -- Hilbert transform through its own coefficient sweep;
* scheme 2 -- ``T = d/dz Pt``: Cauchy sweep followed by a stencil
  derivative (simpler to realize, one extra first-order error source);
* scheme 3 -- exact polynomial arithmetic (monomial transforms); only
  rounding error, so it serves as the accuracy reference for the others.

Iterations stop on the sup-norm tolerance, on stagnation at the
floating-point floor (``delta < 50 eps ||h||``), or at the step cap; five
consecutively growing deltas abort with :class:`DivergenceError` (grid
effects can destabilize the contraction as ``sup|mu| -> 1``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .cauchy import cauchy_coefficients, evaluate_potential, normalize_at_origin
from .derivative import RIGHT2, DifferenceStencil, dz_coefficients, dzbar_coefficients
from .exact import PolyDifferential, sample_poly, scheme3_step
from .grid import GridFunction, PolarGrid, analyze, pointwise_product, synthesize
from .hilbert import transform_scheme1
from .piecewise import RadialModel

__all__ = ["SolveConfig", "IterationReport", "DivergenceError", "iterate", "assemble_map", "residual"]

_STAGNATION_FACTOR = 50.0


class DivergenceError(RuntimeError):
    """Iteration deltas grew five steps in a row; carries the partial report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class SolveConfig:
    scheme: int = 1
    model: RadialModel = RadialModel.LINEAR
    max_iterations: int = 50
    tolerance: float = 1e-12
    initial: str = "mu"
    stencil: DifferenceStencil = RIGHT2
    grid: PolarGrid | None = None  # sampling grid, scheme 3 only
    term_limit: int = 50_000

    def __post_init__(self):
        if self.scheme not in (1, 2, 3):
            raise ValueError("scheme must be 1, 2 or 3")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.initial not in ("mu", "zero"):
            raise ValueError("initial condition must be 'mu' or 'zero'")

    def describe(self) -> dict:
        return {
            "scheme": self.scheme,
            "model": self.model.value,
            "max_iterations": self.max_iterations,
            "tolerance": self.tolerance,
            "initial": self.initial,
            "stencil": self.stencil.kind,
        }


@dataclass
class IterationReport:
    """Convergence record: one delta/timing entry per executed step."""

    deltas: list = field(default_factory=list)
    timings: list = field(default_factory=list)
    termination: str = "max_iterations"

    @property
    def iterations(self) -> int:
        return len(self.deltas)

    def to_dict(self) -> dict:
        return {
            "deltas": [float(d) for d in self.deltas],
            "timings_ms": [1e3 * float(t) for t in self.timings],
            "termination": self.termination,
            "iterations": self.iterations,
        }


def _plus_one(h: GridFunction) -> GridFunction:
    return GridFunction._wrap(h.grid, h.values + 1.0)


def _scheme2_transform(h: GridFunction, model: RadialModel, stencil: DifferenceStencil) -> GridFunction:
    """T[h] evaluated as the z-derivative of the un-normalized potential."""
    cc = cauchy_coefficients(analyze(h), model)
    return synthesize(dz_coefficients(cc.table, stencil))


def _check_mu(mu: GridFunction):
    if not mu.is_compactly_supported():
        raise ValueError("mu must vanish beyond the support radius")
    if mu.sup_norm() >= 1.0:
        raise ValueError(f"need sup|mu| < 1 for contraction, got {mu.sup_norm():.6g}")


def iterate(mu, cfg: SolveConfig = SolveConfig()):
    """Run ``h -> T[mu (h + 1)]`` under the configured scheme.

    ``mu`` is a :class:`GridFunction` for schemes 1/2 and a
    :class:`PolyDifferential` for scheme 3 (which also needs ``cfg.grid``
    to sample iterates for the report).  Returns the final iterate as a
    grid function together with the :class:`IterationReport`.
    """
    if cfg.scheme == 3:
        if not isinstance(mu, PolyDifferential):
            raise ValueError("scheme 3 iterates polynomials; pass a PolyDifferential")
        if cfg.grid is None:
            raise ValueError("scheme 3 needs cfg.grid to sample iterates")
        return _iterate_poly(mu, cfg)
    if not isinstance(mu, GridFunction):
        raise ValueError(f"scheme {cfg.scheme} iterates grid functions; pass a GridFunction")
    _check_mu(mu)

    if cfg.scheme == 1:
        def step(h):
            return transform_scheme1(pointwise_product(mu, _plus_one(h)), cfg.model)
    else:
        def step(h):
            return _scheme2_transform(pointwise_product(mu, _plus_one(h)), cfg.model, cfg.stencil)

    h = mu if cfg.initial == "mu" else GridFunction(mu.grid, np.zeros_like(mu.values))
    report = IterationReport()
    growth = 0
    for _ in range(cfg.max_iterations):
        t0 = time.perf_counter()
        h_new = step(h)
        delta = float(np.max(np.abs(h_new.values - h.values)))
        report.timings.append(time.perf_counter() - t0)
        report.deltas.append(delta)
        if len(report.deltas) > 1 and delta > report.deltas[-2]:
            growth += 1
        else:
            growth = 0
        h = h_new
        if delta <= cfg.tolerance:
            report.termination = "tolerance"
            break
        if delta < _STAGNATION_FACTOR * np.finfo(float).eps * h.sup_norm():
            report.termination = "stagnation"
            break
        if growth >= 5:
            report.termination = "divergence"
            raise DivergenceError("iteration deltas grew 5 consecutive steps", report)
    return h, report


def _iterate_poly(mu: PolyDifferential, cfg: SolveConfig):
    grid = cfg.grid
    mu_grid = sample_poly(mu, grid)
    _check_mu(mu_grid)
    h = mu if cfg.initial == "mu" else PolyDifferential(mu.support_radius, {})
    vals = sample_poly(h, grid).values
    report = IterationReport()
    growth = 0
    for _ in range(cfg.max_iterations):
        t0 = time.perf_counter()
        h = scheme3_step(mu, h)
        if len(h.terms) > cfg.term_limit:
            raise ValueError(f"polynomial iterate exceeded {cfg.term_limit} terms")
        new_vals = sample_poly(h, grid).values
        delta = float(np.max(np.abs(new_vals - vals)))
        report.timings.append(time.perf_counter() - t0)
        report.deltas.append(delta)
        if len(report.deltas) > 1 and delta > report.deltas[-2]:
            growth += 1
        else:
            growth = 0
        vals = new_vals
        if delta <= cfg.tolerance:
            report.termination = "tolerance"
            break
        if delta < _STAGNATION_FACTOR * np.finfo(float).eps * np.max(np.abs(vals)):
            report.termination = "stagnation"
            break
        if growth >= 5:
            report.termination = "divergence"
            raise DivergenceError("iteration deltas grew 5 consecutive steps", report)
    return GridFunction(grid, np.asarray(vals, dtype=np.complex128)), report


def assemble_map(
    mu: GridFunction, h_star: GridFunction, model: RadialModel = RadialModel.LINEAR
) -> GridFunction:
    """Quasiconformal map ``f = P[mu (h* + 1)] + z``; ``f(0) = 0`` exactly."""
    if mu.grid != h_star.grid:
        raise ValueError("grid mismatch in assemble_map")
    g = pointwise_product(mu, _plus_one(h_star))
    cc = normalize_at_origin(cauchy_coefficients(analyze(g), model))
    potential = evaluate_potential(cc)
    return GridFunction(mu.grid, potential.values + mu.grid.nodes())


def residual(f: GridFunction, mu: GridFunction, stencil: DifferenceStencil = RIGHT2) -> float:
    """Sup of ``|df/dzbar - mu df/dz|`` on interior radii.

    The two radii at/next to the center and the two at/just inside the
    support circle are excluded: the stencil is one-sided at the center and
    the dilatation's support kink pollutes the derivative next to ``R``.
    """
    if f.grid != mu.grid:
        raise ValueError("grid mismatch in residual")
    ct = analyze(f)
    fz = synthesize(dz_coefficients(ct, stencil))
    fzb = synthesize(dzbar_coefficients(ct, stencil))
    lsup = f.grid.support_index
    rows = slice(2, lsup - 2)
    res = np.abs(fzb.values[rows] - mu.values[rows] * fz.values[rows])
    if res.size == 0:
        raise ValueError("grid too coarse for an interior residual (need L >= 5)")
    return float(np.max(res))
