"""Inverse Toeplitz actions through analytic factorization and Hankel operators.

The symbol splits as ``g1 * g2`` with ``g1 = (1 + R chi)**alpha`` analytic
and ``g2 = (1 - R conj(chi))**alpha`` co-analytic.  The inverse of the
order-``N+1`` section acts on a polynomial ``Q`` of degree at most ``N`` as

    ``pi+(Q g2^-1) g1^-1
      - pi+(((I - H~ H)^-1 pi+(pi+(Q g2^-1) Phi~)) Phi) g1^-1``

where ``Phi = chi^{N+1} g1/g2``, ``Phi~ = chi^{-N-1} g2/g1`` and ``H``,
``H~`` are the Hankel operators of those two functions.  The resolvent is
realized as a Neumann series; the correction it contributes is of size
``R**(2N)``.  Everything here requires ``R < 1`` strictly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fourierpoly import FourierPoly
from .specialfn import binom_coeffs

TAIL_TARGET = 1e-14
NEUMANN_TOL = 1e-12


class TruncationError(ArithmeticError):
    """Requested truncation cannot push the series tail below target."""


class NonContractionError(ArithmeticError):
    """Hankel product is not a contraction (Neumann series diverges)."""


@dataclass(frozen=True)
class Factorization:
    """Analytic/co-analytic factor data for one ``(alpha, R, N)``."""

    alpha: float
    R: float
    N: int
    M: int
    variant: str
    g1: FourierPoly
    g2: FourierPoly
    g1_inv: FourierPoly
    g2_inv: FourierPoly
    ratio: FourierPoly        # g1 / g2, two-sided
    ratio_inv: FourierPoly    # g2 / g1
    phi_N: FourierPoly        # chi^{N+1} g1/g2
    phi_tilde_N: FourierPoly  # chi^{-N-1} g2/g1


def _onesided(alpha: float, R: float, M: int, sign: int, side: int) -> FourierPoly:
    """Series of ``(1 + sign * R chi^side)**alpha`` truncated at degree M."""
    b = binom_coeffs(-alpha, M + 1).coeffs
    u = np.arange(M + 1)
    vals = b * ((-float(sign)) ** u) * R**u
    if side > 0:
        return FourierPoly.from_onesided(vals, M, start=0)
    return FourierPoly(np.concatenate([vals[::-1], np.zeros(M)]).astype(complex), M)


def factor(alpha: float, R: float, M: int | None = None, N: int = 0,
           variant: str = "upper") -> Factorization:
    """Compute all six series and the ``Phi`` pair for section size ``N``.

    ``variant='upper'`` factors ``(1 + R chi)**a (1 - R conj(chi))**a``;
    ``'lower'`` swaps both signs (its section is the transpose).  ``M``
    defaults to ``max(4 N, 256)`` and is raised automatically until
    ``R**M`` undercuts the enforced tail target of 1e-14; if the caller
    pins an ``M`` that cannot reach it, :class:`TruncationError` is raised.
    """
    if not (0.0 < R < 1.0):
        raise ValueError("factorization route requires 0 < R < 1")
    if variant not in ("upper", "lower"):
        raise ValueError(f"unknown variant {variant!r}")
    M_need = int(math.log(TAIL_TARGET) / math.log(R)) + 16
    if M is None:
        M = max(4 * N, 256, M_need)
    elif R**M > TAIL_TARGET:
        raise TruncationError(f"R**M = {R**M:.2e} above tail target {TAIL_TARGET}")
    s = 1 if variant == "upper" else -1
    g1 = _onesided(alpha, R, M, sign=+s, side=+1)
    g1_inv = _onesided(-alpha, R, M, sign=+s, side=+1)
    g2 = _onesided(alpha, R, M, sign=-s, side=-1)
    g2_inv = _onesided(-alpha, R, M, sign=-s, side=-1)
    ratio = g1.mul(g2_inv, M_store=M)
    ratio_inv = g2.mul(g1_inv, M_store=M)
    shift_M = M + N + 1
    return Factorization(
        alpha=alpha, R=R, N=N, M=M, variant=variant,
        g1=g1, g2=g2, g1_inv=g1_inv, g2_inv=g2_inv,
        ratio=ratio, ratio_inv=ratio_inv,
        phi_N=ratio.shift(N + 1, M_store=shift_M),
        phi_tilde_N=ratio_inv.shift(-(N + 1), M_store=shift_M),
    )


def hankel_apply(f: Factorization, which: str, p: FourierPoly) -> FourierPoly:
    """Hankel action: ``pi-(Phi p)`` for ``phi``, ``pi+(Phi~ p)`` for ``phi_tilde``.

    The domain is the analytic side for ``phi`` (indices >= 0) and the
    co-analytic side for ``phi_tilde`` (indices < 0).
    """
    if which == "phi":
        if np.any(p.proj_minus().coeffs != 0):
            raise ValueError("phi Hankel domain is the analytic side")
        return f.phi_N.mul(p, M_store=f.M + f.N + 1).proj_minus()
    if which == "phi_tilde":
        if np.any(p.proj_plus().coeffs != 0):
            raise ValueError("phi_tilde Hankel domain is the co-analytic side")
        return f.phi_tilde_N.mul(p, M_store=f.M + f.N + 1).proj_plus()
    raise ValueError(f"unknown Hankel kind {which!r}")


def _hankel_product(f: Factorization, w: FourierPoly) -> FourierPoly:
    return hankel_apply(f, "phi_tilde", hankel_apply(f, "phi", w))


def invert_apply(f: Factorization, Q: FourierPoly, N: int,
                 max_terms: int = 64) -> FourierPoly:
    """Inverse-section action ``T_N^{-1} Q`` for a polynomial of degree <= N.

    Restricted to coefficient indices ``0 .. N`` this is the inverse matrix
    applied to Q's coefficient vector.  The resolvent is summed as a Neumann
    series, truncated when the iterate norm falls below 1e-12 relative.
    """
    if N != f.N:
        raise ValueError(f"factorization was built for N={f.N}, got {N}")
    if np.any(Q.slice(-Q.M, -1) != 0) or np.any(Q.slice(N + 1, Q.M) != 0):
        raise ValueError("Q must be a polynomial of degree <= N")
    a = Q.mul(f.g2_inv, M_store=f.M + N).proj_plus()
    first = a.mul(f.g1_inv, M_store=f.M + N)
    v = f.phi_tilde_N.mul(a, M_store=f.M + f.N + 1).proj_plus()
    s = v
    w = v
    scale = max(v.norm_inf(), 1e-300)
    prev = math.inf
    grew = 0
    for _ in range(max_terms):
        if w.norm_inf() < NEUMANN_TOL * scale:
            break
        w = _hankel_product(f, w)
        nrm = w.norm_inf()
        grew = grew + 1 if nrm > prev else 0
        if grew >= 3:
            raise NonContractionError("Neumann iterates are growing")
        prev = nrm
        s = s + w
    else:
        raise NonContractionError(f"no convergence within {max_terms} terms")
    corr = f.phi_N.mul(s, M_store=f.M + f.N + 1).proj_plus() \
        .mul(f.g1_inv, M_store=f.M + N)
    result = first - corr
    return FourierPoly.from_onesided(result.slice(0, N), N, start=0)


def inverse_column(f: Factorization, j: int, N: int) -> np.ndarray:
    """Column ``j`` of the inverse section, as a length ``N+1`` vector."""
    Q = FourierPoly.from_coeffs([(j, 1.0)], N)
    return invert_apply(f, Q, N).slice(0, N)


def hankel_norm(f: Factorization, dim: int | None = None,
                max_iter: int = 300, tol: float = 1e-10) -> float:
    """Power-iteration estimate of ``||H_phi~ H_phi||_2``.

    The composed operator maps the analytic side to itself; it is
    materialized on the basis ``chi^0 .. chi^dim`` (default: the stored
    truncation degree) and its largest singular value is estimated by
    power iteration on ``K* K`` from a deterministic start vector.
    """
    if dim is None:
        dim = f.M
    Np1 = f.N + 1
    j = np.arange(dim + 1)
    m = np.arange(1, dim + 2)
    # A[m-1, j] = phi_hat(-m - j) = ratio.coeff(-m - j - (N+1))
    A = _coeff_matrix(f.ratio, -(m[:, None] + j[None, :]) - Np1)
    # B[w, m-1] = phi_tilde_hat(w + m) = ratio_inv.coeff(w + m + (N+1))
    B = _coeff_matrix(f.ratio_inv, j[:, None] + m[None, :] + Np1)
    K = B @ A
    y = np.full(dim + 1, 1.0 + 0.0j)
    y /= np.linalg.norm(y)
    est = 0.0
    for _ in range(max_iter):
        z = K.conj().T @ (K @ y)
        nrm = np.linalg.norm(z)
        if nrm == 0.0:
            return 0.0
        y = z / nrm
        new = math.sqrt(nrm)
        if abs(new - est) <= tol * max(new, 1.0):
            return new
        est = new
    return est


def _coeff_matrix(p: FourierPoly, idx: np.ndarray) -> np.ndarray:
    out = np.zeros(idx.shape, dtype=complex)
    inside = np.abs(idx) <= p.M
    out[inside] = p.coeffs[idx[inside] + p.M]
    return out


def gamma_coeffs(alpha: float, R: float, k: int,
                 grid_size: int = 4096) -> tuple[complex, complex]:
    """Ratio-function coefficients via FFT, for decay-rate studies.

    Returns ``(gamma_1_{-k}, gamma_2_k)``: the order ``-k`` coefficient of
    ``((1 + R chi)/(1 - R conj(chi)))**alpha`` and the order ``k``
    coefficient of its reciprocal.  Robust for ``R < 1``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not (0.0 < R < 1.0):
        raise ValueError("requires 0 < R < 1")
    theta = 2.0 * np.pi * np.arange(grid_size) / grid_size
    num = (1.0 + R * np.exp(1j * theta)) ** alpha
    den = (1.0 - R * np.exp(-1j * theta)) ** alpha
    r1 = num / den
    c1 = np.fft.fft(r1) / grid_size
    c2 = np.fft.fft(1.0 / r1) / grid_size
    return complex(c1[-k % grid_size]), complex(c2[k % grid_size])
