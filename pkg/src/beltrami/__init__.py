"""Solver for the Beltrami equation on circular grids.

Fast planar Hilbert and Cauchy transforms through per-radius angular
Fourier coefficients, three interchangeable fixed-point schemes for
``df/dzbar = mu df/dz`` with compactly supported ``mu``, exact polynomial
reference transforms, and a quadrature oracle for verification.
"""

from .backend import BACKEND
from .cauchy import (
    CauchyCoefficients,
    cauchy_coefficients,
    cauchy_coefficients_direct,
    evaluate_potential,
    normalize_at_origin,
)
from .derivative import CENTRAL, RIGHT2, DifferenceStencil, dz_coefficients, dzbar_coefficients
from .exact import (
    LaurentTail,
    OracleConvergenceError,
    PolyDifferential,
    PolynomialGrowthError,
    cauchy_transform_quadrature,
    monomial_hilbert,
    poly_hilbert,
    quartic_mu,
    sample_poly,
    scheme3_iterate,
    scheme3_step,
    singular_quadrature_oracle,
)
from .grid import (
    CoefficientTable,
    GridFunction,
    PolarGrid,
    analyze,
    build_grid,
    pointwise_product,
    sample_function,
    sup_distance,
    synthesize,
)
from .hilbert import (
    a_constant,
    b_constant,
    hilbert_coefficients_direct,
    hilbert_coefficients_recursive,
    transform_scheme1,
)
from .piecewise import RadialModel
from .solver import DivergenceError, IterationReport, SolveConfig, assemble_map, iterate, residual

__version__ = "0.1.0"
