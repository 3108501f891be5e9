import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st
from scipy import integrate, stats

from gammatilt.errors import DomainError
from gammatilt.lamperti import (LampertiRatio, OccupationLaw, occ_cdf, occ_pdf, occ_quantile,
                                randomized_occ_sample, sin_identity_check, skew_scale, x_cdf,
                                x_pdf, x_quantile)

alphas = st.floats(0.05, 0.95)
units = st.floats(0.001, 0.999)


class TestRatioDensity:
    def test_value_at_one(self):
        assert x_pdf(0.5, 1.0) == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-14)

    def test_value_at_index_point_three(self):
        expected = math.sin(0.3 * math.pi) / (math.pi * (2.0 + 2.0 * math.cos(0.3 * math.pi)))
        assert x_pdf(0.3, 1.0) == pytest.approx(expected, rel=1e-14)
        assert x_pdf(0.3, 1.0) == pytest.approx(0.0810935, abs=5e-8)

    def test_half_is_beta_prime(self):
        # at index 1/2 the ratio is G/G' with independent Gamma(1/2) variables
        y = np.geomspace(1e-4, 1e4, 40)
        np.testing.assert_allclose(x_pdf(0.5, y), stats.betaprime(0.5, 0.5).pdf(y), rtol=1e-12)
        np.testing.assert_allclose(x_cdf(0.5, y), stats.betaprime(0.5, 0.5).cdf(y), rtol=1e-10)

    @pytest.mark.parametrize("alpha", [0.1, 0.3, 0.7, 0.9])
    def test_normalized(self, alpha):
        total = integrate.quad(lambda y: x_pdf(alpha, y), 0, 1)[0] + \
            integrate.quad(lambda y: x_pdf(alpha, y), 1, np.inf, limit=400)[0]
        assert total == pytest.approx(1.0, abs=1e-7)

    @given(alphas, st.floats(0.01, 100.0))
    def test_inversion_symmetry(self, alpha, y):
        # S/S' and S'/S have the same law
        assert x_pdf(alpha, 1.0 / y) / y**2 == pytest.approx(x_pdf(alpha, y), rel=1e-10)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            x_pdf(0.5, 0.0)
        with pytest.raises(DomainError):
            x_pdf(1.0, 1.0)


class TestRatioCdf:
    def test_median_is_one(self):
        for a in (0.2, 0.5, 0.8):
            assert x_cdf(a, 1.0) == pytest.approx(0.5, abs=1e-15)
            assert x_quantile(a, 0.5) == pytest.approx(1.0, rel=1e-14)

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
    def test_left_tail_relative_precision(self, alpha):
        # F(x) ~ x^a sin(pi a) / (pi a) as x -> 0
        for x in (1e-100, 1e-250):
            lead = x**alpha * math.sin(math.pi * alpha) / (math.pi * alpha)
            assert x_cdf(alpha, x) == pytest.approx(lead, rel=1e-12)

    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8])
    def test_continuous_across_branches(self, alpha):
        below, at = x_cdf(alpha, np.nextafter(1.0, 0.0)), x_cdf(alpha, 1.0)
        assert below == pytest.approx(at, abs=1e-14)

    def test_endpoints(self):
        assert x_cdf(0.4, 0.0) == 0.0
        assert x_cdf(0.4, np.inf) == 1.0

    @pytest.mark.parametrize("alpha", [0.15, 0.5, 0.85])
    def test_cdf_integrates_density(self, alpha):
        # log coordinates remove the algebraic singularity at zero
        g = lambda w: x_pdf(alpha, math.exp(w)) * math.exp(w) if w > -700 else 0.0
        for x in (0.01, 0.7, 3.0, 50.0):
            area = integrate.quad(g, -np.inf, math.log(x), limit=400, epsabs=1e-13)[0]
            assert x_cdf(alpha, x) == pytest.approx(area, abs=1e-8)

    @given(alphas, units)
    def test_quantile_roundtrip(self, alpha, u):
        assert x_cdf(alpha, x_quantile(alpha, u)) == pytest.approx(u, abs=1e-11)

    @given(alphas, st.floats(0.01, 100.0))
    def test_sin_identity(self, alpha, y):
        a, b, c = sin_identity_check(alpha, y)
        assert a == pytest.approx(c, rel=1e-9, abs=1e-13)
        assert b == pytest.approx(c, rel=1e-9, abs=1e-13)


class TestOccupation:
    def test_arcsine_case(self):
        assert occ_pdf(0.5, 0.5, 0.5) == pytest.approx(2.0 / math.pi, rel=1e-14)
        x = np.linspace(0.01, 0.99, 30)
        np.testing.assert_allclose(occ_pdf(0.5, 0.5, x), stats.arcsine.pdf(x), rtol=1e-12)
        np.testing.assert_allclose(occ_cdf(0.5, 0.5, x), stats.arcsine.cdf(x), rtol=1e-11)

    @pytest.mark.parametrize("alpha, p", [(0.3, 0.2), (0.5, 0.9), (0.8, 0.6)])
    def test_normalized_and_consistent(self, alpha, p):
        total = integrate.quad(lambda x: occ_pdf(alpha, p, x), 0, 1, limit=400)[0]
        assert total == pytest.approx(1.0, abs=1e-7)
        for y in (0.1, 0.5, 0.9):
            area = integrate.quad(lambda x: occ_pdf(alpha, p, x), 0, y, limit=400)[0]
            assert occ_cdf(alpha, p, y) == pytest.approx(area, abs=1e-7)

    @given(alphas, units, units)
    def test_quantile_roundtrip(self, alpha, p, u):
        y = occ_quantile(alpha, p, u)
        # within a few ulps of the edges the ratio y / (1 - y) is not resolved
        assume(1e-9 < y < 1.0 - 1e-9)
        assert occ_cdf(alpha, p, y) == pytest.approx(u, abs=1e-9)

    @given(alphas, st.floats(0.01, 0.99), st.floats(0.01, 0.99))
    def test_skew_reflection(self, alpha, p, x):
        # time positive under p equals time negative under 1 - p
        assert occ_pdf(alpha, p, x) == pytest.approx(occ_pdf(alpha, 1 - p, 1 - x), rel=1e-9)

    def test_skew_scale(self):
        assert skew_scale(0.5, 0.8) == pytest.approx(16.0)
        assert skew_scale(0.3, 0.5) == 1.0

    def test_cdf_closed_endpoints(self):
        assert occ_cdf(0.4, 0.3, 0.0) == 0.0
        assert occ_cdf(0.4, 0.3, 1.0) == 1.0
        with pytest.raises(DomainError):
            occ_cdf(0.4, 0.3, 1.5)


class TestSampling:
    def test_fixed_skewness_matches_law(self, gen):
        draws = randomized_occ_sample(0.4, 0.3, gen, 20000)
        assert stats.kstest(draws, lambda y: occ_cdf(0.4, 0.3, y)).pvalue > 1e-3

    def test_degenerate_randomizer(self, gen):
        draws = randomized_occ_sample(0.5, lambda rng, n: np.ones(n), gen, 10)
        np.testing.assert_array_equal(draws, np.ones(10))
        draws = randomized_occ_sample(0.5, lambda rng, n: np.zeros(n), gen, 10)
        np.testing.assert_array_equal(draws, np.zeros(10))

    def test_scalar_draw(self, gen):
        assert 0.0 < randomized_occ_sample(0.5, 0.5, gen) < 1.0

    def test_randomizer_range_checked(self, gen):
        with pytest.raises(DomainError):
            randomized_occ_sample(0.5, lambda rng, n: np.full(n, 2.0), gen, 4)

    def test_dataclasses(self, gen):
        law = OccupationLaw(0.5, 0.5)
        assert law.scale == 1.0
        d = law.to_dist()
        assert d.support == (0.0, 1.0)
        assert float(d.cdf(0.5)) == pytest.approx(0.5)
        r = LampertiRatio(0.6).to_dist()
        assert float(r.ppf(0.5)) == pytest.approx(1.0)
        with pytest.raises(DomainError):
            OccupationLaw(0.5, 1.0)
