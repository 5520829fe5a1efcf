"""Fractional derivatives: Toeplitz grid rows, Marchaud quadrature, GL.

The grid route applies one row of the built Toeplitz operator to the
sample vector and scales by ``N**alpha``; its ``N`` limit is the scaled
Marchaud derivative evaluated here independently by singular quadrature.
The Grünwald-Letnikov route is a third, classical limit carrying a
``2**alpha`` scale difference against the other two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature as quadr
from .functions import FunctionSpec
from .specialfn import gamma
from .symbol import DEFAULT_TOL, SymbolSpec, fourier_coeff_table


@dataclass(frozen=True)
class GridFunction:
    """Samples at the ``N + 1`` nodes ``a + j (b - a) / N``."""

    a: float
    b: float
    N: int
    samples: np.ndarray

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError("need a < b")
        if len(self.samples) != self.N + 1:
            raise ValueError("samples must have length N + 1")

    @property
    def nodes(self) -> np.ndarray:
        return self.a + (self.b - self.a) * np.arange(self.N + 1) / self.N

    def interpolant(self):
        nodes = self.nodes
        vals = np.real_if_close(self.samples)
        return lambda t: np.interp(t, nodes, vals.real)


def sample_grid(f: FunctionSpec, N: int, a: float = 0.0, b: float = 1.0) -> GridFunction:
    """Sample ``f`` on the grid, zeroing an endpoint only when it is undefined
    or non-finite there (values at interior nodes are never altered)."""
    nodes = a + (b - a) * np.arange(N + 1) / N
    samples = np.asarray(f(nodes), dtype=complex)
    if not f.defined_at_0 or not np.isfinite(samples[0]):
        samples[0] = 0.0
    if not f.defined_at_1 or not np.isfinite(samples[-1]):
        samples[-1] = 0.0
    return GridFunction(a, b, N, samples)


def _grid_row_value(f: FunctionSpec, alpha: float, k: int, N: int, R: float,
                    variant: str, tol: float) -> complex:
    table = fourier_coeff_table(SymbolSpec(alpha, R, variant), N, tol)
    # row k of the section: coefficient (k - l) against sample l
    row = table.coeffs[k + N::-1][: N + 1]
    samples = sample_grid(f, N).samples
    return complex(N**alpha * np.dot(row, samples))


def dalpha_grid(f: FunctionSpec, alpha: float, x: float, N: int,
                R: float = 1.0, variant: str = "lower",
                tol: float = DEFAULT_TOL) -> complex:
    """One interior Toeplitz row against the sample vector, scaled ``N**alpha``.

    No limit is taken here; callers sweep ``N`` and watch the values settle
    toward the Marchaud quadrature oracle.
    """
    if N < 16:
        raise ValueError("N must be >= 16")
    k = math.floor(N * x)
    if not 1 <= k <= N - 1:
        raise ValueError(f"floor(N x) = {k} not interior")
    return _grid_row_value(f, alpha, k, N, R, variant, tol)


def marchaud_lower(f: FunctionSpec, alpha: float, x: float,
                   tol: float = 1e-10) -> float:
    """Scaled lower Marchaud derivative by singularity-subtracted quadrature.

    ``(2**a / gamma(-a)) (int_0^x (x-t)^{-a-1} (f(t) - f(x)) dt
                          - f(x) x^{-a} / a)``.
    """
    if not (0.0 < alpha < 1.0):
        raise ValueError("alpha must lie in (0, 1)")
    if not (0.0 < x < 1.0):
        raise ValueError("x must lie in (0, 1)")
    integral = quadr.marchaud_difference_lower(f, alpha, x, a=0.0, tol=tol)
    boundary = float(f(x)) * x**-alpha / alpha
    return 2.0**alpha / gamma(-alpha) * (integral - boundary)


def marchaud_upper(f: FunctionSpec, alpha: float, x: float,
                   tol: float = 1e-10) -> float:
    """Mirror of :func:`marchaud_lower` over ``(x, 1)``."""
    if not (0.0 < alpha < 1.0):
        raise ValueError("alpha must lie in (0, 1)")
    if not (0.0 < x < 1.0):
        raise ValueError("x must lie in (0, 1)")
    integral = quadr.marchaud_difference_upper(f, alpha, x, b=1.0, tol=tol)
    boundary = float(f(x)) * (1.0 - x) ** -alpha / alpha
    return 2.0**alpha / gamma(-alpha) * (integral - boundary)


def gl_weights(alpha: float, count: int) -> np.ndarray:
    """GL weights ``w_0 = 1, w_m = w_{m-1} (m - 1 - alpha) / m``."""
    w = np.empty(count)
    w[0] = 1.0
    for m in range(1, count):
        w[m] = w[m - 1] * (m - 1 - alpha) / m
    return w


def gl_derivative(f: FunctionSpec, alpha: float, x: float, N: int) -> float:
    """Grünwald-Letnikov value ``N**a sum_m w_m f((k-m)/N)`` with ``k = floor(Nx)``."""
    k = math.floor(N * x)
    if k < 1:
        raise ValueError("floor(N x) must be >= 1")
    w = gl_weights(alpha, k + 1)
    samples = sample_grid(f, N).samples.real
    vals = samples[k::-1][: k + 1]
    return float(N**alpha * np.dot(w, vals))


@dataclass(frozen=True)
class EndpointResult:
    """Grid endpoint value and the two candidate limit integrals.

    The stated limit uses weight ``t**(-a-1)``; the structure of the row
    suggests the reflected weight ``(1-t)**(-a-1)``.  Both are reported,
    no silent choice is made.
    """

    value: complex
    candidate_stated: float
    candidate_reflected: float


def dalpha_endpoint(f: FunctionSpec, alpha: float, which: str, N: int,
                    R: float = 1.0, tol: float = DEFAULT_TOL) -> EndpointResult:
    """Grid value at row ``k = 0`` (``which='zero'``) or ``k = N`` (``'one'``)."""
    if which == "zero":
        if abs(float(f(0.0))) > 1e-12:
            raise ValueError("which='zero' requires f(0) = 0")
        k = 0
    elif which == "one":
        if abs(float(f(1.0))) > 1e-12:
            raise ValueError("which='one' requires f(1) = 0")
        k = N
    else:
        raise ValueError(f"which must be 'zero' or 'one', got {which!r}")
    value = _grid_row_value(f, alpha, k, N, R, "lower", tol)
    pref = 2.0**alpha / gamma(-alpha)

    def near_zero(t):
        tt = max(t, 1e-13)
        return float(f(tt)) / tt

    def near_one(t):
        tt = min(t, 1.0 - 1e-13)
        return float(f(tt)) / (1.0 - tt)

    stated = pref * quadr.lower_weighted(near_zero, 0.0, 1.0, -alpha)
    reflected = pref * quadr.upper_weighted(near_one, 0.0, 1.0, -alpha)
    return EndpointResult(value, stated, reflected)


@dataclass(frozen=True)
class CompositeResult:
    """Quadrature-route composite derivative and the optional grid cross-check."""

    value: float
    grid_value: complex | None = None


def dalpha_composite(f: FunctionSpec, alpha_total: float, x: float,
                     N: int | None = None, tol: float = 1e-10) -> CompositeResult:
    """Order ``n + a'`` derivative as ``2**n`` times the Marchaud derivative
    of the classical ``n``-th derivative; grid cross-check optional."""
    n = int(math.floor(alpha_total))
    aprime = alpha_total - n
    if n < 1 or not (0.0 < aprime < 1.0):
        raise ValueError("alpha_total must exceed 1 with fractional part in (0,1)")
    fn = f.nth_derivative(n)
    value = 2.0**n * marchaud_lower(fn, aprime, x, tol)
    grid_value = None
    if N is not None:
        grid_value = dalpha_grid(f, alpha_total, x, N, tol=tol)
    return CompositeResult(value, grid_value)
