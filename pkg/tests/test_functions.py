import math

import numpy as np
import pytest

from fractoeplitz.functions import (
    bridge,
    bump,
    const,
    from_callable,
    monomial_sum,
    parse_function,
    poly,
    power,
    sinpi,
)
from fractoeplitz.specialfn import gamma


class TestRegistry:
    def test_poly_eval(self):
        f = poly([1.0, -2.0, 3.0])
        t = np.array([0.0, 0.5, 1.0])
        np.testing.assert_allclose(f(t), 1 - 2 * t + 3 * t**2)

    def test_bridge(self):
        f = bridge()
        assert float(f(0.25)) == pytest.approx(0.1875)
        assert float(f(0.0)) == 0.0 and float(f(1.0)) == 0.0

    def test_power(self):
        f = power(0.5)
        assert float(f(0.25)) == pytest.approx(0.5)
        with pytest.raises(ValueError):
            power(-1.0)

    def test_bump_support_and_smoothness(self):
        f = bump(0.0, 1.0)
        assert f.support == (-1.0, 1.0)
        assert float(f(2.0)) == 0.0
        assert float(f(0.0)) == 1.0
        # C^1 across the edge: finite difference of slope is small
        h = 1e-6
        left = (float(f(1.0)) - float(f(1.0 - h))) / h
        assert abs(left) < 1e-4

    def test_sinpi_derivative_cycle(self):
        f = sinpi()
        assert float(f(0.5)) == pytest.approx(1.0)
        d1 = f.nth_derivative(1)
        assert float(d1(0.0)) == pytest.approx(math.pi)
        d2 = f.nth_derivative(2)
        assert float(d2(0.5)) == pytest.approx(-math.pi**2)
        d4 = f.nth_derivative(4)
        assert float(d4(0.5)) == pytest.approx(math.pi**4)


class TestPowerRuleOracles:
    def test_dalpha_linear(self):
        # D_a t at x: 2^a Gamma(2)/Gamma(2-a) x^{1-a}
        f = poly([0.0, 1.0])
        a, x = 0.5, 0.25
        expect = 2.0**a * gamma(2.0) / gamma(1.5) * x**0.5
        assert f.dalpha(a, x) == pytest.approx(expect, rel=1e-13)
        assert f.dalpha(a, x) == pytest.approx(0.797885, rel=1e-5)

    def test_dalpha_square(self):
        f = poly([0.0, 0.0, 1.0])
        assert f.dalpha(0.5, 0.5) == pytest.approx(0.752252, rel=1e-5)

    def test_jalpha_linear(self):
        f = poly([0.0, 1.0])
        assert f.jalpha(0.5, 1.0) == pytest.approx(0.531923, rel=1e-5)

    def test_jalpha_const(self):
        f = const(1.0)
        # (1/(2^{0.5} Gamma(0.5))) * 2 sqrt(0.25)
        assert f.jalpha(0.5, 0.25) == pytest.approx(0.398942, rel=1e-5)

    def test_oracles_match_quadrature(self):
        from fractoeplitz.fracderiv import marchaud_lower
        from fractoeplitz.fracint import rl_integral
        f = bridge()
        for a in (0.3, 0.7):
            for x in (0.3, 0.8):
                # the divided-difference integrand limits QAWS to ~1e-7 here
                assert f.dalpha(a, x) == pytest.approx(
                    marchaud_lower(f, a, x, tol=1e-7), abs=1e-5)
                assert f.jalpha(a, x) == pytest.approx(
                    rl_integral(f, a, x), abs=1e-8)

    def test_nth_derivative_poly(self):
        f = poly([0.0, 0.0, 1.0, -2.0, 1.0])  # t^2 (1-t)^2
        d2 = f.nth_derivative(2)
        t = 0.3
        assert float(d2(t)) == pytest.approx(2 - 12 * t + 12 * t * t)

    def test_monomial_sum_fractional_power(self):
        f = monomial_sum("mix", [(2.0, 0.5)])
        assert float(f(0.25)) == pytest.approx(1.0)
        assert f.dalpha(0.3, 0.5) == pytest.approx(
            2.0 * 2.0**0.3 * gamma(1.5) / gamma(1.2) * 0.5**0.2, rel=1e-12)


class TestParse:
    def test_aliases(self):
        assert parse_function("t").name == "poly:0,1"
        assert float(parse_function("const:2.5")(0.7)) == 2.5
        assert float(parse_function("pow:2")(3.0)) == 9.0
        assert parse_function("bridge").name == "bridge"
        assert parse_function("sinpi").name == "sinpi"
        b = parse_function("bump:1,0.5")
        assert b.support == (0.5, 1.5)
        assert parse_function("bump").support == (-1.0, 1.0)

    def test_poly_coeffs(self):
        f = parse_function("poly:1,0,-1")
        assert float(f(2.0)) == pytest.approx(-3.0)

    @pytest.mark.parametrize("bad", ["nope", "poly:abc", "bump:1", "pow:x"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_function(bad)

    def test_from_callable(self):
        f = from_callable("sq", lambda t: np.asarray(t) ** 2)
        assert float(f(3.0)) == 9.0
        assert f.dalpha is None
