import math

import numpy as np
import pytest

from fractoeplitz.fracderiv import marchaud_lower, sample_grid
from fractoeplitz.fracint import (
    dirichlet_residual,
    green_kernel,
    j_n,
    j_tilde,
    j_tilde_integral,
    jalpha_grid,
    rl_integral,
    solve_dirichlet,
)
from fractoeplitz.functions import bridge, const, from_callable, poly, sinpi


ZERO = const(0.0)
LINEAR = poly([0.0, 1.0])


class TestRlIntegral:
    def test_zero(self):
        assert rl_integral(ZERO, 0.5, 0.7) == 0.0
        assert rl_integral(LINEAR, 0.5, 0.0) == 0.0

    def test_linear_at_one(self):
        assert rl_integral(LINEAR, 0.5, 1.0) == pytest.approx(0.531923, rel=1e-5)

    def test_const_closed_form(self):
        assert rl_integral(const(1.0), 0.5, 0.25) == pytest.approx(
            0.398942, rel=1e-5)

    def test_validation(self):
        with pytest.raises(ValueError):
            rl_integral(LINEAR, 1.2, 0.5)
        with pytest.raises(ValueError):
            rl_integral(LINEAR, 0.5, 1.5)

    def test_lipschitz_transfer(self):
        # divided differences of J(psi) on [0.1, 0.9] bounded by
        # 2/(2^a Gamma(a)) int_0^1 u^{a-1} du times Lip(psi)
        a = 0.5
        psi = LINEAR  # Lip = 1
        xs = np.linspace(0.1, 0.9, 33)
        vals = [rl_integral(psi, a, float(x)) for x in xs]
        dd = max(abs(vals[i + 1] - vals[i]) / (xs[i + 1] - xs[i])
                 for i in range(len(xs) - 1))
        bound = 2.0 / (2.0**a * math.gamma(a)) * (1.0 / a)
        assert dd <= bound


class TestJalphaGrid:
    def test_zero(self):
        assert jalpha_grid(ZERO, 0.5, 0.5, 64) == 0.0

    def test_linear_vs_oracle_r_sweep(self):
        oracle = LINEAR.jalpha(0.5, 0.5)
        vals = [jalpha_grid(LINEAR, 0.5, 0.5, 1024, R).real
                for R in (0.9, 0.99, 0.999)]
        gaps = [abs(v - oracle) for v in vals]
        assert gaps == sorted(gaps, reverse=True)

    def test_linear_at_r1(self):
        oracle = LINEAR.jalpha(0.5, 0.5)
        v = jalpha_grid(LINEAR, 0.5, 0.5, 2048, 1.0)
        assert abs(v.real - oracle) / oracle < 0.05

    def test_factorization_route_agrees_with_dense(self):
        import fractoeplitz.fracint as fi
        a, R, N, x = 0.5, 0.9, 256, 0.5
        dense = jalpha_grid(LINEAR, a, x, N, R)
        old = fi.DENSE_SOLVE_MAX_N
        fi.DENSE_SOLVE_MAX_N = 0
        try:
            fact = jalpha_grid(LINEAR, a, x, N, R)
        finally:
            fi.DENSE_SOLVE_MAX_N = old
        assert fact == pytest.approx(dense, abs=1e-10)

    def test_precondition(self):
        with pytest.raises(ValueError):
            jalpha_grid(LINEAR, 0.5, 0.0001, 64)
        with pytest.raises(ValueError):
            jalpha_grid(LINEAR, 0.5, 0.5, 4096, 1.0)  # too big for dense at R=1


class TestGreenKernel:
    def test_p1_closed_form(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            x, y = rng.random(2)
            assert green_kernel(1, x, y) == pytest.approx(
                min(x, y) * (1 - max(x, y)), abs=1e-10)

    def test_example_value(self):
        assert green_kernel(1, 0.25, 0.5) == pytest.approx(0.125, abs=1e-10)

    def test_corner_zero(self):
        assert green_kernel(1, 0.0, 0.0) == 0.0
        assert green_kernel(2, 0.0, 0.7) == 0.0
        assert green_kernel(2, 0.7, 1.0) == 0.0

    def test_symmetry_p2(self):
        assert green_kernel(2, 0.3, 0.7) == pytest.approx(
            green_kernel(2, 0.7, 0.3), rel=1e-10)

    def test_nonnegative(self):
        rng = np.random.default_rng(12)
        for p in (1, 2):
            for _ in range(10):
                x, y = rng.random(2)
                assert green_kernel(p, x, y) >= 0.0

    def test_validation(self):
        with pytest.raises(ValueError):
            green_kernel(0, 0.5, 0.5)
        with pytest.raises(ValueError):
            green_kernel(1, -0.1, 0.5)


class TestJn:
    def test_zero(self):
        y = j_n(ZERO, 2, 8)
        np.testing.assert_allclose(y.samples, 0.0)

    def test_const_closed_form(self):
        # J_2(1)(x) = -(1/4) x(1-x)/2; at 0.5 -> -0.03125
        y = j_n(const(1.0), 2, 16)
        assert y.samples[8].real == pytest.approx(-0.03125, abs=1e-9)

    def test_grid_function_input(self):
        g = sample_grid(const(1.0), 32)
        y = j_n(g, 2, 8)
        assert y.samples[4].real == pytest.approx(-0.03125, abs=1e-6)

    def test_roundtrip_refinement_sin(self):
        f = sinpi()
        errs = []
        for N in (16, 32, 64):
            s = j_n(f, 2, N).samples.real
            worst = 0.0
            for l in range(2, N - 1):
                d2 = N**2 * (s[l + 2] - 2 * s[l] + s[l - 2])
                worst = max(worst, abs(d2 - float(f(l / N))))
            errs.append(worst)
        assert errs == sorted(errs, reverse=True)
        assert errs[-1] < 1e-3

    def test_green_identity_p2(self):
        # (-1)^2 d^4/dx^4 of int G_2 f = f, via the calibrated operator:
        # two passes of the step-2 difference recover 16 f'''' = 2^4 f''''
        f = const(1.0)
        N = 48
        s = j_n(f, 4, N, tol=1e-11).samples.real
        z = s.copy()
        for _ in range(2):
            zz = np.zeros_like(z)
            zz[2:-2] = N**2 * (z[4:] - 2 * z[2:-2] + z[:-4])
            z = zz
        mid = slice(N // 3, 2 * N // 3)
        np.testing.assert_allclose(z[mid], 1.0, atol=0.05)

    def test_odd_order_rejected(self):
        with pytest.raises(ValueError):
            j_n(ZERO, 3, 8)


class TestJTilde:
    def test_zero(self):
        y = j_tilde(ZERO, 2.5, 8)
        np.testing.assert_allclose(y.samples, 0.0)

    def test_endpoints_vanish(self):
        y = j_tilde(const(1.0), 2.5, 8)
        assert y.samples[0] == 0.0 and y.samples[-1] == 0.0

    def test_two_route_agreement(self):
        for psi in (const(1.0), LINEAR):
            y = j_tilde(psi, 2.5, 8, tol=1e-9)
            for j in (2, 4, 6):
                direct = j_tilde_integral(psi, 2.5, j / 8, tol=1e-9)
                assert abs(y.samples[j].real - direct) < 1e-6

    def test_uncalibrated_prefactor_differs(self):
        cal = j_tilde_integral(const(1.0), 2.5, 0.5)
        lit = j_tilde_integral(const(1.0), 2.5, 0.5, uncalibrated=True)
        assert cal != pytest.approx(lit, rel=0.1)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            j_tilde(ZERO, 1.5, 8)   # odd integer part
        with pytest.raises(ValueError):
            j_tilde(ZERO, 3.0, 8)   # no fractional part


class TestDirichlet:
    def test_zero_rhs(self):
        y = solve_dirichlet(ZERO, 2.5, 16)
        np.testing.assert_allclose(y.samples, 0.0)

    def test_small_problem_residual(self):
        psi = const(1.0)
        y = solve_dirichlet(psi, 2.5, 64, tol=1e-9)
        assert y.samples[0] == 0.0 and y.samples[-1] == 0.0
        assert abs(y.samples[1]) <= 5.0 / 64
        assert dirichlet_residual(y, 2.5, psi) < 0.2

    def test_right_inverse_quadrature(self):
        # D_a(J_a psi) = psi pointwise by pure quadrature
        a = 0.5
        for psi in (const(1.0), bridge()):
            J = from_callable(
                "J", lambda t, p=psi: np.vectorize(
                    lambda v: rl_integral(p, a, float(v)))(np.asarray(t)))
            for x in (0.3, 0.6):
                assert marchaud_lower(J, a, x, tol=1e-8) == pytest.approx(
                    float(psi(x)), abs=1e-4)
