"""Finite Toeplitz operators built from the generating symbols.

The operator of order ``N + 1`` is stored as its diagonal coefficient
sequence ``c_{-N} .. c_N`` with matrix entry ``(k, l) = c_{k-l}``.  Matrix
action is available directly or through circulant embedding; the dense
solve serves as the ground-truth inverse for the factorization route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .specialfn import gamma
from .symbol import DEFAULT_TOL, SymbolSpec, fourier_coeff_table

SOLVE_RESIDUAL = 1e-9
COND_LIMIT = 1e13


class IllConditionedError(np.linalg.LinAlgError):
    """Dense solve rejected: operator singular or too ill-conditioned."""

    def __init__(self, cond: float):
        super().__init__(f"estimated condition number {cond:.3e}")
        self.cond = cond


@dataclass(frozen=True)
class ToeplitzOperator:
    """Order ``N + 1`` Toeplitz matrix with entry ``(k, l) = coeffs[k - l]``."""

    order: int                 # N + 1
    coeffs: np.ndarray         # complex, indices -N .. N at positions 0 .. 2N
    spec: SymbolSpec

    @property
    def N(self) -> int:
        return self.order - 1

    def coeff(self, n: int) -> complex:
        if abs(n) > self.N:
            raise IndexError(f"coefficient index {n} outside -N..N")
        return self.coeffs[n + self.N]

    def entry(self, k: int, l: int) -> complex:
        return self.coeff(k - l)

    def dense(self) -> np.ndarray:
        N = self.N
        col = self.coeffs[N:]            # c_0 .. c_N
        row = self.coeffs[N::-1]         # c_0 .. c_{-N}
        return scipy.linalg.toeplitz(col, row)

    def row(self, k: int) -> np.ndarray:
        """Row ``k`` of the matrix: ``coeffs[k - l]`` for ``l = 0 .. N``."""
        N = self.N
        return self.coeffs[k + N::-1][: N + 1]


def build(spec: SymbolSpec, N: int, tol: float = DEFAULT_TOL) -> ToeplitzOperator:
    """Operator of order ``N + 1`` with series coefficients at tolerance ``tol``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    table = fourier_coeff_table(spec, N, tol)
    return ToeplitzOperator(order=N + 1, coeffs=table.coeffs.copy(), spec=spec)


def matvec(op: ToeplitzOperator, v, mode: str = "fast") -> np.ndarray:
    """Apply ``T`` to ``v``; ``fast`` embeds into a circulant of size >= 2*order."""
    v = np.asarray(v, dtype=complex)
    n = op.order
    if v.shape != (n,):
        raise ValueError(f"vector length {v.shape} does not match order {n}")
    if mode == "direct":
        return op.dense() @ v
    if mode != "fast":
        raise ValueError(f"unknown mode {mode!r}")
    N = op.N
    size = 1
    while size < 2 * n:
        size *= 2
    # circulant first column: c_0..c_N, zeros, c_{-N}..c_{-1}
    circ = np.zeros(size, dtype=complex)
    circ[: N + 1] = op.coeffs[N:]
    circ[size - N:] = op.coeffs[:N]
    out = np.fft.ifft(np.fft.fft(circ) * np.fft.fft(v, size))
    return out[:n]


def solve(op: ToeplitzOperator, rhs) -> np.ndarray:
    """Dense LU solve ``T x = rhs`` with a conditioning guard.

    Raises :class:`IllConditionedError` when the 1-norm condition estimate
    exceeds ``1e13`` (the residual target ``1e-9 * ||rhs||`` would be lost).
    """
    rhs = np.asarray(rhs, dtype=complex)
    if rhs.shape != (op.order,):
        raise ValueError("rhs length does not match operator order")
    T = op.dense()
    lu, piv = scipy.linalg.lu_factor(T)
    anorm = np.linalg.norm(T, 1)
    ugrowth = np.abs(np.diag(lu))
    if ugrowth.min() == 0.0:
        raise IllConditionedError(np.inf)
    x = scipy.linalg.lu_solve((lu, piv), rhs)
    rcond = scipy.linalg.lapack.zgecon(lu, anorm)[0] if anorm > 0 else 1.0
    cond = 1.0 / rcond if rcond > 0 else np.inf
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise IllConditionedError(cond)
    resid = np.max(np.abs(matvec(op, x) - rhs))
    scale = max(np.max(np.abs(rhs)), 1e-300)
    if resid > 1e3 * SOLVE_RESIDUAL * scale:
        raise IllConditionedError(cond)
    return x


def t1_entry(alpha: float, R: float, k: int, l: int) -> float:
    """Leading closed-form term of the inverse entry ``(k, l)``, ``k != l``.

    ``sign * R**|l-k| |l-k|**(alpha-1) / gamma(alpha) / (1+R^2)**alpha``
    with ``sign = (-1)**(l-k)`` above the diagonal (``l > k``) and ``+1``
    below it.  The published statement prints the alternating sign for
    both triangles, but its derivation covers only ``k < l``; redoing the
    sum for ``l < k`` drops the factor, and the positive-kernel row-sum
    limit (the fractional integral) requires the one-sided form.  The
    exponent on ``(1 + R**2)`` is ``-alpha``, forced by that same limit.
    The diagonal is excluded (the formula is singular there).
    """
    if k == l:
        raise ValueError("diagonal excluded: use the solve route")
    if not (0.0 < alpha < 1.0):
        raise ValueError("alpha must lie in (0, 1)")
    if not (0.0 < R <= 1.0):
        raise ValueError("R must lie in (0, 1]")
    d = abs(l - k)
    sign = (-1.0) ** (l - k) if l > k else 1.0
    return sign * R**d * d ** (alpha - 1.0) / gamma(alpha) \
        * (1.0 + R * R) ** (-alpha)
