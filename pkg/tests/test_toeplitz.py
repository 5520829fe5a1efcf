import numpy as np
import pytest

from fractoeplitz.specialfn import gamma
from fractoeplitz.symbol import SymbolSpec
from fractoeplitz.toeplitz import (
    IllConditionedError,
    ToeplitzOperator,
    build,
    matvec,
    solve,
    t1_entry,
)


def _op(alpha, R, N, variant="lower"):
    return build(SymbolSpec(alpha, R, variant), N)


class TestBuild:
    def test_unit_symbol_is_identity(self):
        op = _op(0.0, 0.9, 4)
        np.testing.assert_allclose(op.dense(), np.eye(5), atol=1e-12)

    def test_alpha1_r1_tridiagonal(self):
        # delta_0 = 0, delta_1 = -1, delta_{-1} = 1: (Tv)_k = -v_{k-1} + v_{k+1}
        op = _op(1.0, 1.0, 4)
        v = np.array([1.0, 2.0, 3.0, 4.0, 5.0], dtype=complex)
        out = matvec(op, v, mode="direct")
        np.testing.assert_allclose(out[1:-1], [-1 + 3, -2 + 4, -3 + 5],
                                   atol=1e-10)

    def test_sign_antisymmetry_alpha_half(self):
        # entry(0,1) = delta_{-1} = -delta_1 = -entry(1,0)
        op = _op(0.5, 1.0, 8)
        assert op.entry(0, 1) == pytest.approx(-op.entry(1, 0), rel=1e-12)

    def test_entry_indexing(self):
        op = _op(0.5, 0.9, 6)
        dense = op.dense()
        for k in range(7):
            for l in range(7):
                assert dense[k, l] == op.coeff(k - l)
        np.testing.assert_allclose(op.row(3), dense[3], atol=0)

    def test_validation(self):
        with pytest.raises(ValueError):
            build(SymbolSpec(0.5, 1.0), 0)
        op = _op(0.5, 1.0, 3)
        with pytest.raises(IndexError):
            op.coeff(4)


class TestMatvec:
    def test_direct_vs_fast(self):
        rng = np.random.default_rng(3)
        op = _op(0.5, 0.95, 512)
        v = rng.standard_normal(513) + 1j * rng.standard_normal(513)
        d = matvec(op, v, mode="direct")
        f = matvec(op, v, mode="fast")
        assert np.max(np.abs(d - f)) < 1e-10

    def test_first_derivative_action(self):
        # alpha=1, R=1 on f(t)=t^2: (N/2)(Tv)_k -> 2t
        N = 100
        op = _op(1.0, 1.0, N)
        t = np.arange(N + 1) / N
        v = (t**2).astype(complex)
        out = matvec(op, v)
        k = N // 2
        assert (N / 2 * out[k]).real == pytest.approx(2 * t[k], abs=1e-3)

    def test_dimension_mismatch(self):
        op = _op(0.5, 1.0, 4)
        with pytest.raises(ValueError):
            matvec(op, np.zeros(3))

    def test_unknown_mode(self):
        op = _op(0.5, 1.0, 4)
        with pytest.raises(ValueError):
            matvec(op, np.zeros(5), mode="magic")


class TestSolve:
    def test_identity(self):
        op = _op(0.0, 0.9, 5)
        rhs = np.arange(6, dtype=complex)
        np.testing.assert_allclose(solve(op, rhs), rhs, atol=1e-12)

    def test_2x2_closed_form(self):
        # alpha=1, R=0.7: with entry(k,l) = c_{k-l} the section is
        # [[0.51, 0.7], [-0.7, 0.51]]; solving against e_0 gives
        # (0.51, 0.7)/0.7501.  (The transposed orientation appears in some
        # write-ups; this one is fixed by entry(k,l) = c_{k-l} and
        # c_{-1} = +0.7.)
        op = _op(1.0, 0.7, 1)
        np.testing.assert_allclose(op.dense().real,
                                   [[0.51, 0.7], [-0.7, 0.51]], atol=1e-10)
        x = solve(op, np.array([1.0, 0.0], dtype=complex))
        np.testing.assert_allclose(x.real, np.array([0.51, 0.7]) / 0.7501,
                                   atol=1e-9)

    def test_residual_quality(self):
        rng = np.random.default_rng(5)
        op = _op(0.5, 0.95, 128)
        rhs = rng.standard_normal(129).astype(complex)
        x = solve(op, rhs)
        assert np.max(np.abs(matvec(op, x) - rhs)) < 1e-9 * np.max(np.abs(rhs))

    def test_singular_raises(self):
        coeffs = np.zeros(2 * 3 + 1, dtype=complex)
        op = ToeplitzOperator(order=4, coeffs=coeffs, spec=SymbolSpec(0.5, 1.0))
        with pytest.raises(IllConditionedError):
            solve(op, np.ones(4, dtype=complex))


class TestT1Entry:
    def test_closed_form_magnitude(self):
        # alpha=0.5, R=1, |l-k|=100: magnitude 100^{-0.5}/gamma(0.5) 2^{-0.5}
        mag = 100.0 ** (-0.5) / gamma(0.5) * 2.0 ** (-0.5)
        assert mag == pytest.approx(0.0398942, rel=1e-5)
        assert t1_entry(0.5, 1.0, 100, 0) == pytest.approx(mag, rel=1e-12)
        assert t1_entry(0.5, 1.0, 0, 100) == pytest.approx(mag, rel=1e-12)
        assert t1_entry(0.5, 1.0, 0, 101) == pytest.approx(
            -101.0 ** (-0.5) / gamma(0.5) * 2.0 ** (-0.5), rel=1e-12)

    def test_r_factor_decay(self):
        assert abs(t1_entry(0.5, 0.5, 0, 10)) < abs(t1_entry(0.5, 0.9, 0, 10))

    def test_validation(self):
        with pytest.raises(ValueError):
            t1_entry(0.5, 1.0, 3, 3)
        with pytest.raises(ValueError):
            t1_entry(1.5, 1.0, 0, 1)
        with pytest.raises(ValueError):
            t1_entry(0.5, 0.0, 0, 1)

    def test_against_dense_inverse(self):
        # interior entries with |k-l| ~ N/4 within 10% of the true inverse
        a, R, N = 0.5, 0.95, 256
        op = _op(a, R, N)
        inv = np.linalg.inv(op.dense())
        k = N // 2
        for l in (k - N // 4, k + N // 4, k - N // 4 + 1, k + N // 4 + 1):
            t1 = t1_entry(a, R, k, l)
            assert abs(inv[k, l] - t1) <= 0.1 * abs(t1)

    def test_row_sum_integral_limit(self):
        # sum_l t1_entry(k, l) f(l/N) / N^a approaches the weighted integral
        # (1/(2^a gamma(a))) int_0^x f(t)(x-t)^{a-1} dt as N grows, at R = 1
        from fractoeplitz.fracint import rl_integral
        from fractoeplitz.functions import poly
        f = poly([0.0, 1.0])
        a, x = 0.5, 0.5
        target = rl_integral(f, a, x)
        errs = []
        for N in (256, 1024, 4096):
            k = N // 2
            s = sum(t1_entry(a, 1.0, k, l) * (l / N)
                    for l in range(N + 1) if l != k)
            errs.append(abs(s / N**a - target))
        assert errs == sorted(errs, reverse=True)
        assert errs[-1] < 0.01
