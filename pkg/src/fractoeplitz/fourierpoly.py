"""Two-sided truncated Fourier coefficient sequences.

``FourierPoly`` is the carrier for the analytic projections, Hankel
operator actions and factorization algebra.  Coefficients are stored for
indices ``-M .. M``; products are exact on indices up to the sum of the
factors' degrees and truncated to the stored degree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import convolve


@dataclass(frozen=True)
class FourierPoly:
    """Truncated two-sided Fourier series with coefficients ``-M .. M``."""

    coeffs: np.ndarray  # complex, length 2*M + 1, entry i holds index i - M
    M: int

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.M + 1:
            raise ValueError("coefficient array must have length 2*M + 1")

    @classmethod
    def zero(cls, M: int) -> "FourierPoly":
        return cls(np.zeros(2 * M + 1, dtype=complex), M)

    @classmethod
    def from_coeffs(cls, index_value_pairs, M: int) -> "FourierPoly":
        p = np.zeros(2 * M + 1, dtype=complex)
        for n, v in index_value_pairs:
            if abs(n) > M:
                raise ValueError(f"index {n} outside truncation {M}")
            p[n + M] = v
        return cls(p, M)

    @classmethod
    def from_onesided(cls, values, M: int, start: int = 0) -> "FourierPoly":
        """Poly with ``values[j]`` at index ``start + j``."""
        values = np.asarray(values, dtype=complex)
        p = np.zeros(2 * M + 1, dtype=complex)
        lo = start + M
        if lo < 0 or lo + len(values) > 2 * M + 1:
            raise ValueError("values do not fit inside the truncation")
        p[lo : lo + len(values)] = values
        return cls(p, M)

    def coeff(self, n: int) -> complex:
        if abs(n) > self.M:
            return 0.0 + 0.0j
        return self.coeffs[n + self.M]

    def slice(self, lo: int, hi: int) -> np.ndarray:
        """Coefficients for indices ``lo .. hi`` inclusive, zero-padded."""
        out = np.zeros(hi - lo + 1, dtype=complex)
        a = max(lo, -self.M)
        b = min(hi, self.M)
        if a <= b:
            out[a - lo : b - lo + 1] = self.coeffs[a + self.M : b + self.M + 1]
        return out

    def with_truncation(self, M: int) -> "FourierPoly":
        return FourierPoly(self.slice(-M, M), M)

    def __add__(self, other: "FourierPoly") -> "FourierPoly":
        M = max(self.M, other.M)
        return FourierPoly(self.slice(-M, M) + other.slice(-M, M), M)

    def __sub__(self, other: "FourierPoly") -> "FourierPoly":
        M = max(self.M, other.M)
        return FourierPoly(self.slice(-M, M) - other.slice(-M, M), M)

    def scale(self, c: complex) -> "FourierPoly":
        return FourierPoly(self.coeffs * c, self.M)

    def mul(self, other: "FourierPoly", M_store: int | None = None) -> "FourierPoly":
        """Product, exact on indices ``|n| <= M_self + M_other``.

        The result is stored to ``min(M_store, M_self + M_other)``;
        ``M_store`` defaults to the larger input truncation.
        """
        if M_store is None:
            M_store = max(self.M, other.M)
        full = convolve(self.coeffs, other.coeffs)
        M_full = self.M + other.M
        M_out = min(M_store, M_full)
        mid = M_full
        return FourierPoly(full[mid - M_out : mid + M_out + 1].copy(), M_out)

    def shift(self, k: int, M_store: int | None = None) -> "FourierPoly":
        """Multiply by ``chi**k`` (shift every index by ``k``)."""
        if M_store is None:
            M_store = self.M + abs(k)
        out = np.zeros(2 * M_store + 1, dtype=complex)
        idx = np.arange(-self.M, self.M + 1) + k
        keep = np.abs(idx) <= M_store
        out[idx[keep] + M_store] = self.coeffs[keep]
        return FourierPoly(out, M_store)

    def proj_plus(self) -> "FourierPoly":
        """Keep indices >= 0 (the analytic part)."""
        out = self.coeffs.copy()
        out[: self.M] = 0.0
        return FourierPoly(out, self.M)

    def proj_minus(self) -> "FourierPoly":
        """Keep indices < 0; ``proj_plus + proj_minus`` is the identity."""
        out = self.coeffs.copy()
        out[self.M :] = 0.0
        return FourierPoly(out, self.M)

    def conj_flip(self) -> "FourierPoly":
        """Coefficients of the complex conjugate series."""
        return FourierPoly(np.conj(self.coeffs[::-1]).copy(), self.M)

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def norm2(self) -> float:
        return float(np.linalg.norm(self.coeffs))
