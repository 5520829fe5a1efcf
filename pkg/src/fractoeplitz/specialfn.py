"""Gamma values and generalized binomial coefficient sequences.

The binomial sequences here are the coefficients of ``(1 - x)**(-alpha)``;
every alternating-sign variant used by the symbol expansions is obtained at
the call site by explicit ``(-1)**u`` factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class GammaPoleError(ValueError):
    """Gamma evaluated at zero or a negative integer."""


def gamma(x: float) -> float:
    """Gamma function on the reals, excluding the poles.

    Negative non-integer arguments are supported (the reflection formula
    is applied internally), so quantities like ``gamma(-alpha)`` for
    ``alpha`` in (0, 1) are directly available.

    Raises
    ------
    GammaPoleError
        If ``x`` is zero or a negative integer.
    """
    if x <= 0 and float(x) == int(x):
        raise GammaPoleError(f"gamma pole at x={x}")
    if x > 0:
        return math.gamma(x)
    # Reflection: gamma(x) = pi / (sin(pi x) * gamma(1 - x)).
    return math.pi / (math.sin(math.pi * x) * math.gamma(1.0 - x))


@dataclass(frozen=True)
class BinomSeq:
    """Coefficients ``b_u`` of the series ``(1 - x)**(-alpha)``.

    The sequence is defined by ``b_0 = 1`` and the recurrence
    ``b_{u+1} = b_u * (alpha + u) / (u + 1)``, which is stable for every
    real ``alpha`` and avoids gamma ratios of large arguments.
    """

    alpha: float
    coeffs: np.ndarray

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, u):
        return self.coeffs[u]


def binom_coeffs(alpha: float, count: int) -> BinomSeq:
    """Coefficients of ``(1 - x)**(-alpha)`` up to index ``count - 1``.

    For ``alpha > 0`` all coefficients are positive and behave like
    ``u**(alpha - 1) / gamma(alpha)`` for large ``u``.  Negative ``alpha``
    yields a terminating or eventually sign-fixed sequence; the same
    recurrence covers every case.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    u = np.arange(count - 1, dtype=float)
    ratios = (alpha + u) / (u + 1.0)
    coeffs = np.empty(count, dtype=float)
    coeffs[0] = 1.0
    if count > 1:
        np.cumprod(ratios, out=coeffs[1:])
    return BinomSeq(alpha=float(alpha), coeffs=coeffs)
