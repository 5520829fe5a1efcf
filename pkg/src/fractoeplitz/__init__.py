"""Fractional differentiation and integration via finite Toeplitz sections.

The library realizes the Marchaud-type derivative of order ``alpha`` as the
limit of scaled rows of Toeplitz matrices built from the generating symbol
``(1 - R e^{i t})^alpha (1 + R e^{-i t})^alpha``, and the matching fractional
integral as the limit of rows of the inverse matrices.  Every matrix route is
backed by an independent quadrature or linear-algebra oracle.
"""

from .specialfn import BinomSeq, binom_coeffs, gamma
from .symbol import (
    SymbolSpec,
    asymptotic_coeff,
    eval_symbol,
    fourier_coeff_fft,
    fourier_coeff_series,
    fourier_coeff_table,
)
from .fourierpoly import FourierPoly
from .toeplitz import ToeplitzOperator, build, matvec, solve, t1_entry
from .wienerhopf import (
    Factorization,
    factor,
    gamma_coeffs,
    hankel_apply,
    hankel_norm,
    invert_apply,
)
from .functions import (
    FunctionSpec,
    bridge,
    bump,
    const,
    parse_function,
    poly,
    power,
    sinpi,
)
from .fracderiv import (
    GridFunction,
    dalpha_composite,
    dalpha_endpoint,
    dalpha_grid,
    gl_derivative,
    marchaud_lower,
    marchaud_upper,
    sample_grid,
)
from .fracint import (
    dirichlet_residual,
    green_kernel,
    j_n,
    j_tilde,
    j_tilde_integral,
    jalpha_grid,
    rl_integral,
    solve_dirichlet,
)
from .interval import d_alpha_ab, d_alpha_inf, j_alpha_ab, j_alpha_inf

__all__ = [
    "BinomSeq",
    "binom_coeffs",
    "gamma",
    "SymbolSpec",
    "eval_symbol",
    "fourier_coeff_series",
    "fourier_coeff_table",
    "fourier_coeff_fft",
    "asymptotic_coeff",
    "FourierPoly",
    "ToeplitzOperator",
    "build",
    "matvec",
    "solve",
    "t1_entry",
    "Factorization",
    "factor",
    "hankel_apply",
    "hankel_norm",
    "invert_apply",
    "gamma_coeffs",
    "FunctionSpec",
    "const",
    "poly",
    "power",
    "bridge",
    "bump",
    "sinpi",
    "parse_function",
    "GridFunction",
    "sample_grid",
    "dalpha_grid",
    "marchaud_lower",
    "marchaud_upper",
    "gl_derivative",
    "dalpha_endpoint",
    "dalpha_composite",
    "rl_integral",
    "jalpha_grid",
    "green_kernel",
    "j_n",
    "j_tilde",
    "j_tilde_integral",
    "solve_dirichlet",
    "dirichlet_residual",
    "d_alpha_ab",
    "j_alpha_ab",
    "d_alpha_inf",
    "j_alpha_inf",
]

__version__ = "0.1.0"
