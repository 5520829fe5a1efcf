"""Generating symbols and their Fourier coefficients.

Three routes to the coefficients are provided and cross-checked against
each other:

* ``fourier_coeff_series`` / ``fourier_coeff_table`` -- the binomial product
  series, truncated under a rigorous tail bound (geometric for ``R < 1``,
  alternating-series for ``R = 1``),
* ``fourier_coeff_fft`` -- an independent oracle: the discrete Fourier
  transform of the sampled symbol (aliasing error is of the order of the
  coefficient decay at ``grid_size - n``),
* ``asymptotic_coeff`` -- the large-``n`` law with prefactor
  ``2**alpha / gamma(-alpha)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .fourierpoly import FourierPoly
from .specialfn import binom_coeffs, gamma

VARIANTS = ("lower", "upper", "gl")

DEFAULT_TOL = 1e-10
DEFAULT_GRID = 2**14


class SeriesConvergenceError(ArithmeticError):
    """Coefficient series tail is not summable or the term budget ran out."""


@dataclass(frozen=True)
class SymbolSpec:
    """One generating function: ``(alpha, R, variant)``.

    variant ``lower``  : ``(1 - R chi)**alpha (1 + R conj(chi))**alpha``
    variant ``upper``  : ``(1 + R chi)**alpha (1 - R conj(chi))**alpha``
    variant ``gl``     : ``(1 - R chi)**alpha`` (one-sided)

    ``R = 1`` denotes the limit symbol.
    """

    alpha: float
    R: float = 1.0
    variant: str = "lower"

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if not (0.0 < self.R <= 1.0):
            raise ValueError("R must lie in (0, 1]")
        if self.alpha <= -0.5:
            raise ValueError("alpha must be > -1/2")


def eval_symbol(spec: SymbolSpec, theta) -> np.ndarray:
    """Evaluate the symbol at angle(s) ``theta`` (principal branch).

    For the lower variant the base is ``(1 - R**2) - 2i R sin(theta)``;
    the upper variant conjugates it; ``gl`` uses ``1 - R e^{i theta}``.
    The bases never touch the negative real axis, so the principal power
    is well defined everywhere (the base may vanish at ``R = 1``, where
    the power is 0 for ``alpha > 0``).
    """
    theta = np.asarray(theta, dtype=float)
    a, R = spec.alpha, spec.R
    if spec.variant == "gl":
        base = 1.0 - R * np.exp(1j * theta)
    else:
        sign = -1.0 if spec.variant == "lower" else 1.0
        base = (1.0 - R * R) + sign * 2j * R * np.sin(theta)
    if a <= 0:
        bad = base == 0
        if np.any(bad):
            raise ZeroDivisionError("symbol base vanishes and alpha <= 0")
    out = np.where(base == 0, 0.0 + 0.0j, np.power(base + 0j, a))
    return out if out.ndim else complex(out)


def _series_positive(alpha: float, R: float, m: int, tol: float,
                     max_terms: int = 2_000_000) -> float:
    """Sum ``sum_u (-1)**u b_u b_{m+u} R^{m+2u}`` for ``m >= 0``.

    ``b`` are the coefficients of ``(1 - x)**alpha``; the tail is controlled
    geometrically for ``R < 1`` and by the alternating-series bound at
    ``R = 1``.
    """
    if R >= 1.0 and alpha <= -0.5:
        raise SeriesConvergenceError("series tail not summable at R=1")
    block = 256
    total = 0.0
    u0 = 0
    prev_abs = math.inf
    while u0 < max_terms:
        count = u0 + block + m
        b = binom_coeffs(-alpha, count + 1).coeffs
        u = np.arange(u0, u0 + block)
        terms = ((-1.0) ** u) * b[u] * b[m + u] * R ** (m + 2 * u)
        total += float(terms.sum())
        last = float(abs(terms[-1]))
        if R < 1.0:
            # geometric envelope: remaining tail < last * R^2 / (1 - R^2)
            if last * R * R / (1.0 - R * R) < tol:
                return total
        else:
            if last < tol and last <= prev_abs:
                return total
        prev_abs = last
        u0 += block
        block = min(2 * block, 65536)
    raise SeriesConvergenceError(f"no convergence after {max_terms} terms")


def fourier_coeff_series(spec: SymbolSpec, n: int, tol: float = DEFAULT_TOL) -> complex:
    """Fourier coefficient of order ``n`` summed by the binomial series.

    The lower-variant coefficients satisfy ``delta_{-m} = (-1)**m delta_m``
    and the upper variant is the lower one with ``n`` negated.
    """
    a, R = spec.alpha, spec.R
    if spec.variant == "gl":
        if n < 0:
            return 0.0 + 0.0j
        return complex(binom_coeffs(-a, n + 1).coeffs[n] * R**n)
    m = n if spec.variant == "lower" else -n
    s = _series_positive(a, R, abs(m), tol)
    if m < 0:
        s *= (-1.0) ** (-m)
    return complex(s)


def fourier_coeff_table(spec: SymbolSpec, n_max: int,
                        tol: float = DEFAULT_TOL) -> FourierPoly:
    """All coefficients ``|n| <= n_max`` by the same series, vectorized.

    The sum over ``u`` is a correlation of two binomial sequences and is
    evaluated with one FFT; the truncation depth is chosen so that the
    neglected tail is below ``tol`` for every ``n`` simultaneously.
    """
    a, R = spec.alpha, spec.R
    if spec.variant == "gl":
        vals = binom_coeffs(-a, n_max + 1).coeffs * R ** np.arange(n_max + 1)
        return FourierPoly.from_onesided(vals, n_max, start=0)
    if R >= 1.0 and a <= -0.5:
        raise SeriesConvergenceError("series tail not summable at R=1")
    if a >= 0 and abs(a - round(a)) < 1e-12:
        # polynomial symbol: the binomial sequence terminates
        U = int(round(a)) + 2
    else:
        # alternating bound: |b_U|^2 < tol with |b_U| ~ U^(-a-1)/|gamma(-a)|
        U = int((gamma(-a) ** 2 * tol) ** (-1.0 / (2 * a + 2)))
        U = min(2 * max(U, 1024), 400_000)
        if R < 1.0:
            U_geom = int(math.log(tol) / (2.0 * math.log(R))) + 64
            U = min(U, max(U_geom, 256))
    b = binom_coeffs(-a, U + n_max + 1).coeffs
    u = np.arange(U + 1)
    d = ((-1.0) ** u) * b[: U + 1] * R ** (2 * u)
    conv = fftconvolve(b, d[::-1])
    pos = conv[U : U + n_max + 1] * R ** np.arange(n_max + 1)
    m = np.arange(1, n_max + 1)
    neg = ((-1.0) ** m) * pos[1:]
    coeffs = np.concatenate([neg[::-1], pos]).astype(complex)
    p = FourierPoly(coeffs, n_max)
    if spec.variant == "upper":
        p = FourierPoly(p.coeffs[::-1].copy(), n_max)
    return p


def fourier_coeff_fft(spec: SymbolSpec, grid_size: int,
                      n_max: int | None = None) -> FourierPoly:
    """DFT oracle for the coefficients, independent of the series route.

    Entry ``n`` approximates ``(1/2 pi) \\int phi(t) e^{-i n t} dt``; the
    aliasing error at order ``n`` is of the size of the true coefficients
    at ``grid_size - |n|``, so ``grid_size >= 4 * n_max`` is required.
    """
    if grid_size & (grid_size - 1):
        raise ValueError("grid_size must be a power of two")
    if n_max is None:
        n_max = grid_size // 4
    if grid_size < 4 * n_max:
        raise ValueError("grid_size must be >= 4 * n_max")
    theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
    samples = eval_symbol(spec, theta)
    c = np.fft.fft(samples) / grid_size
    idx = np.arange(-n_max, n_max + 1) % grid_size
    return FourierPoly(c[idx].copy(), n_max)


def asymptotic_coeff(alpha: float, n: int) -> float:
    """Leading large-``n`` term of the lower-variant limit coefficients.

    ``n > 0``: ``n**(-alpha-1) * 2**alpha / gamma(-alpha)``;
    ``n < 0`` carries the extra ``(-1)**n`` factor.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    pref = 2.0**alpha / gamma(-alpha)
    if n > 0:
        return n ** (-alpha - 1.0) * pref
    return (-1.0) ** n * (-n) ** (-alpha - 1.0) * pref
