import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, special

from gammatilt.errors import DomainError, PreconditionError, QuadratureError
from gammatilt.kernels import (QuadConfig, arccot_principal, integrate_from, integrate_piecewise,
                               log_kernel_integral, measure_parts, mittag_leffler,
                               principal_value_integral, quad)


class TestQuad:
    def test_polynomial_exact(self):
        assert quad(lambda x: x * x, 0.0, 3.0) == pytest.approx(9.0, rel=1e-14)

    def test_reversed_limits_flip_sign(self):
        assert quad(math.exp, 1.0, 0.0) == pytest.approx(-(math.e - 1.0), rel=1e-14)

    def test_infinite_range_with_breakpoints(self):
        val = quad(lambda x: math.exp(-x), 0.0, np.inf, points=[1.0, 5.0])
        assert val == pytest.approx(1.0, rel=1e-12)

    def test_divergent_integral_raises(self):
        with pytest.raises(QuadratureError):
            quad(lambda x: 1.0 / x, 0.0, 1.0)

    def test_config_validation(self):
        with pytest.raises(PreconditionError):
            QuadConfig(rel_tol=0.0)
        with pytest.raises(PreconditionError):
            QuadConfig(max_subdivisions=3)


class TestIntegrateFrom:
    def test_algebraic_endpoint_singularity(self):
        # integral of x^-1/2 over (0, 1) is 2
        assert integrate_from(lambda x: x**-0.5, 0.0, 1.0) == pytest.approx(2.0, rel=1e-12)

    def test_many_decades(self):
        val = integrate_from(lambda x: 1.0 / (1.0 + x) ** 2, 0.0, 1e8)
        assert val == pytest.approx(1.0 - 1.0 / (1.0 + 1e8), rel=1e-12)

    def test_empty_interval(self):
        assert integrate_from(math.exp, 2.0, 2.0) == 0.0

    def test_infinite_upper_limit_rejected(self):
        with pytest.raises(DomainError):
            integrate_from(math.exp, 0.0, np.inf)


class TestIntegratePiecewise:
    def test_heavy_tail(self):
        assert integrate_piecewise(lambda x: (1 + x) ** -1.05, 0.0, np.inf) == pytest.approx(
            20.0, rel=1e-12)

    def test_two_sided_singularities(self):
        # Beta(1/2, 1/2) density with both edges singular; near x = 1 the mass
        # within one ulp (about 2 sqrt(eps) / pi) is unrepresentable in x
        f = lambda x: 1.0 / (math.pi * math.sqrt(x * (1 - x)))
        assert integrate_piecewise(f, 0.0, 1.0) == pytest.approx(1.0, abs=2e-8)

    def test_interior_breakpoint_kink(self):
        f = lambda x: abs(x - 0.25)
        assert integrate_piecewise(f, 0.0, 1.0, points=[0.25]) == pytest.approx(
            0.25**2 / 2 + 0.75**2 / 2, rel=1e-13)


class TestArccot:
    @pytest.mark.parametrize("x, expected", [(1.0, math.pi / 4), (0.0, math.pi / 2),
                                             (-1.0, 3 * math.pi / 4)])
    def test_values(self, x, expected):
        assert arccot_principal(x) == pytest.approx(expected, rel=1e-15)

    @given(st.floats(-1e6, 1e6))
    def test_cotangent_inverse(self, x):
        y = arccot_principal(x)
        assert 0.0 < y < math.pi
        assert math.cos(y) / math.sin(y) == pytest.approx(x, rel=1e-9, abs=1e-9)

    @given(st.floats(-1e3, 1e3), st.floats(1e-3, 1e3))
    def test_strictly_decreasing(self, x, dx):
        assert arccot_principal(x + dx) < arccot_principal(x)

    def test_vectorized(self):
        out = arccot_principal(np.array([-1.0, 0.0, 1.0]))
        assert out.shape == (3,)

    def test_rejects_infinite(self):
        with pytest.raises(DomainError):
            arccot_principal(np.inf)


class TestMittagLeffler:
    """Oracle: at alpha = 1/2 the function is exp(q^2) erfc(q)."""

    def test_zero(self):
        for a in (0.2, 0.5, 0.9):
            assert mittag_leffler(a, 0.0) == 1.0

    @pytest.mark.parametrize("q", [0.1, 0.5, 1.0, 1.5, 4.0, 20.0])
    def test_half_against_erfcx(self, q):
        assert mittag_leffler(0.5, q) == pytest.approx(special.erfcx(q), rel=1e-9)

    def test_frozen_values(self):
        assert mittag_leffler(0.5, 1.0) == pytest.approx(0.427584, abs=5e-7)
        assert mittag_leffler(0.5, 4.0) == pytest.approx(0.136999, abs=5e-7)

    def test_series_and_integral_agree_at_switch(self):
        for a in (0.3, 0.7):
            lo, hi = mittag_leffler(a, 1.0), mittag_leffler(a, 1.0 + 1e-9)
            assert hi == pytest.approx(lo, abs=1e-8)

    @given(st.floats(0.1, 0.9), st.floats(0.0, 30.0))
    def test_completely_monotone_range(self, a, q):
        v = mittag_leffler(a, q)
        assert 0.0 < v <= 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            mittag_leffler(1.0, 1.0)
        with pytest.raises(DomainError):
            mittag_leffler(0.5, -1.0)


class TestLogKernel:
    def test_uniform_closed_form(self):
        # Phi(t) = t log t + (1 - t) log(1 - t) - 1 on (0, 1)
        for t in (0.5, 0.2, 0.9):
            expected = t * math.log(t) + (1 - t) * math.log(1 - t) - 1.0
            assert log_kernel_integral(lambda x: 1.0, t, support=(0, 1)) == pytest.approx(
                expected, abs=1e-12)
        assert log_kernel_integral(lambda x: 1.0, 0.5, support=(0, 1)) == pytest.approx(
            -1.693147, abs=5e-7)

    def test_arcsine_equilibrium(self):
        # the arcsine law is the equilibrium measure of [0, 1]: Phi = -log 4 inside
        f = lambda x: 1.0 / (math.pi * math.sqrt(x * (1 - x)))
        for t in (0.1, 0.5, 0.77):
            assert log_kernel_integral(f, t, support=(0, 1)) == pytest.approx(-math.log(4), abs=1e-9)

    def test_atom_at_t_ignored(self):
        assert log_kernel_integral([(0.3, 1.0)], 0.3) == 0.0

    def test_zeta_outside_support_sign(self):
        f = lambda x: (1 + x) ** -2
        got = log_kernel_integral(f, 2.0, support=(0, np.inf))
        brute = integrate.quad(lambda x: math.log(abs(2 - x)) * f(x), 0, 2, limit=200)[0] + \
            integrate.quad(lambda x: math.log(abs(2 - x)) * f(x), 2, np.inf, limit=200)[0]
        assert got == pytest.approx(brute, abs=1e-7)
        assert got == pytest.approx(2.0 / 3.0 * math.log(2.0), abs=1e-10)

    def test_bare_density_needs_support(self):
        with pytest.raises(PreconditionError):
            measure_parts(lambda x: 1.0)


class TestPrincipalValue:
    def test_uniform_symmetric_point(self):
        assert principal_value_integral(lambda x: 1.0, 0.5, support=(0, 1)) == pytest.approx(
            0.0, abs=1e-10)

    def test_uniform_log_ratio(self):
        assert principal_value_integral(lambda x: 1.0, 0.75, support=(0, 1)) == pytest.approx(
            math.log(3.0), abs=1e-9)

    def test_arcsine_symmetric(self):
        f = lambda x: 1.0 / (math.pi * math.sqrt(x * (1 - x)))
        assert principal_value_integral(f, 0.5, support=(0, 1)) == pytest.approx(0.0, abs=1e-8)

    def test_outside_support_is_ordinary_integral(self):
        got = principal_value_integral(lambda x: 1.0, 2.0, support=(0, 1))
        assert got == pytest.approx(math.log(2.0), rel=1e-12)

    def test_atoms(self):
        assert principal_value_integral([(1.0, 0.5), (3.0, 0.5)], 2.0) == pytest.approx(0.0)
