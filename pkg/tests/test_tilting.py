import math

import numpy as np
import pytest
from scipy import integrate, special, stats

from gammatilt.catalog import catalog_density
from gammatilt.dirichlet_mean import MeanFunctional
from gammatilt.dist import Dist
from gammatilt.errors import DomainError, ModelError
from gammatilt.measures import arcsine, discrete, lambda_alpha_p, obr_half_p, q_c, rho_alpha, \
    uniform01, zeta
from gammatilt.tilting import (TiltSpec, beta_scale_law, density_expectation, ggc_laplace,
                               ggc_levy_density, levy_integrability, mean_cauchy_stieltjes,
                               stable_mixture_levy_density, thorin_exponent, thorin_tilt,
                               tilt_gamma_mixture, tilt_mean_backward, tilt_mean_forward,
                               untilt_density)


def beta_dist(a, b):
    ref = stats.beta(a, b)
    return Dist(f"beta({a},{b})", (0.0, 1.0), pdf_fn=ref.pdf, cdf_fn=ref.cdf,
                sampler=lambda rng, n: rng.beta(a, b, n))


class TestTiltSpec:
    def test_rate(self):
        assert TiltSpec(2.0, 3.0).rate == 1.5

    def test_validation(self):
        with pytest.raises(DomainError):
            TiltSpec(0.0, 1.0)
        with pytest.raises(DomainError):
            TiltSpec(1.0, -1.0)


class TestBetaScaling:
    def test_identity_at_one(self, gen):
        rec = beta_scale_law(2.0, 1.0, arcsine())
        assert rec.is_identity
        assert rec.mixed_base is rec.base

    def test_two_routes_agree(self, gen):
        rec = beta_scale_law(2.0, 0.4, arcsine())
        assert rec.beta_params == pytest.approx((0.8, 1.2))
        a = rec.sample_mixed(gen, 20000)
        b = rec.sample_product(gen, 20000)
        assert stats.ks_2samp(a, b).pvalue > 1e-3

    def test_inversion_of_both_sides(self):
        # the cdf of the mixed mean against B * M_{p theta}(H) by quadrature over B
        rec = beta_scale_law(1.5, 2.0 / 3.0, uniform01())
        inner = catalog_density("dpuni")
        beta = stats.beta(1.0, 0.5)
        x = 0.3
        prod = integrate.quad(lambda v: beta.pdf(v) * float(inner.cdf(min(1.0, x / v))), 0, 1,
                              points=[x], limit=200)[0]
        assert float(rec.mixed_mean.cdf(x)) == pytest.approx(prod, abs=1e-6)

    def test_validation(self):
        with pytest.raises(DomainError):
            beta_scale_law(1.0, 0.0, uniform01())


class TestGammaMixture:
    def test_point_mass_is_gamma(self):
        # G_theta tilted at rate c and scaled by b
        theta, b, c = 1.7, 2.0, 0.5
        tilt = tilt_gamma_mixture(1.0, theta, b, c)
        for lam in (0.3, 2.0):
            expected = ((1 + c) / (1 + c + b * lam)) ** theta
            assert tilt.laplace(lam) == pytest.approx(expected, rel=1e-13)
            assert tilt.laplace_via_y(lam) == pytest.approx(expected, rel=1e-13)

    @pytest.mark.parametrize("b, c", [(1.0, 1.0), (0.5, 3.0)])
    def test_two_laplace_routes(self, b, c):
        tilt = tilt_gamma_mixture(beta_dist(2.0, 3.0), 1.3, b, c)
        for lam in (0.1, 1.0, 5.0):
            assert tilt.laplace(lam) == pytest.approx(tilt.laplace_via_y(lam), rel=1e-9)

    def test_normalizer_hypergeometric(self):
        # E[(1 + cM)^-theta] for M ~ Beta(a, b) is 2F1(theta, a; a + b; -c)
        tilt = tilt_gamma_mixture(beta_dist(2.0, 3.0), 1.3, 1.0, 0.7)
        assert tilt.normalizer == pytest.approx(special.hyp2f1(1.3, 2.0, 5.0, -0.7), rel=1e-10)

    def test_sampler_laplace(self, gen):
        theta, b, c = 1.3, 1.0, 2.0
        tilt = tilt_gamma_mixture(beta_dist(2.0, 3.0), theta, b, c)
        w = tilt.sample_w(gen, 40000)
        vals = np.exp(-w)
        se = vals.std() / math.sqrt(vals.size)
        assert abs(vals.mean() - tilt.laplace(1.0)) < 5 * se

    def test_untilted(self):
        tilt = tilt_gamma_mixture(beta_dist(2.0, 3.0), 1.3)
        assert tilt.y is None and tilt.normalizer == 1.0


class TestMeanTilting:
    def test_forward_zeta_gives_uniform_mean(self):
        # zeta pushed forward at c = 1 is the uniform law
        fwd = tilt_mean_forward(zeta(), 1.0, 1.0, mean_pdf=catalog_density("zeta_mean").pdf)
        assert float(fwd.pdf(0.5)) == pytest.approx(2 * math.e / math.pi, rel=1e-7)
        ys = np.linspace(0.1, 0.9, 5)
        np.testing.assert_allclose(fwd.pdf(ys), catalog_density("dpuni").pdf(ys), rtol=1e-7)

    def test_forward_against_inversion(self):
        c = 2.0
        fwd = tilt_mean_forward(arcsine(), 1.0, c)
        ref = MeanFunctional(1.0, q_c(c, arcsine()))
        ys = np.array([0.2, 0.4, 0.6])
        np.testing.assert_allclose(fwd.pdf(ys), ref.pdf(ys), rtol=1e-7)

    def test_backward_inverts_forward(self):
        back = tilt_mean_backward(catalog_density("dpuni").pdf, 1.0, 1.0)
        ms = np.array([0.3, 1.0, 4.0])
        np.testing.assert_allclose(back.pdf(ms), catalog_density("zeta_mean").pdf(ms), rtol=1e-7)
        assert back.params["normalizer"] == pytest.approx(
            MeanFunctional(1.0, zeta()).laplace_moment(1.0), rel=1e-8)

    def test_uniform_y_not_a_tilted_mean(self):
        with pytest.raises(ModelError):
            untilt_density(lambda y: 1.0, 1.0)

    def test_uniform_y_below_one(self):
        pdf, norm = untilt_density(lambda y: 1.0, 0.5, 2.0)
        # mass of (1 - y)^-1/2 within one ulp of 1 is below float resolution
        assert norm == pytest.approx(0.5, rel=1e-7)
        g = lambda w: float(pdf(math.exp(w))) * math.exp(w)
        assert integrate.quad(g, -40, 60, limit=400)[0] == pytest.approx(1.0, abs=1e-7)


class TestThorinTilt:
    def test_lamperti_to_occupation(self):
        alpha, c = 0.4, 3.0
        named = thorin_tilt(rho_alpha(alpha), c)
        ca = c**alpha
        assert named.params["p"] == pytest.approx(ca / (1 + ca))
        generic = q_c(c, rho_alpha(alpha))
        ys = np.linspace(0.1, 0.9, 5)
        np.testing.assert_allclose(named.density(ys), generic.density(ys), rtol=1e-10)
        assert float(named.phi(0.4)) == pytest.approx(float(generic.phi(0.4)), abs=1e-8)

    def test_zeta(self):
        assert thorin_tilt(zeta(), 1.0).name == "uniform01"
        named = thorin_tilt(zeta(), 4.0)
        ys = np.linspace(0.1, 0.9, 5)
        np.testing.assert_allclose(named.density(ys), q_c(4.0, zeta()).density(ys), rtol=1e-12)

    def test_atoms(self):
        out = thorin_tilt(discrete([1.0, 3.0], [0.5, 0.5]), 1.0)
        np.testing.assert_allclose(out.atoms, [0.5, 0.75])

    def test_c_positive(self):
        with pytest.raises(DomainError):
            thorin_tilt(zeta(), 0.0)


class TestTransforms:
    def test_ggc_laplace_matches_mean(self):
        nu = arcsine()
        assert ggc_laplace(nu, 1.5, 2.0) == pytest.approx(
            MeanFunctional(1.5, nu).laplace_moment(2.0), rel=1e-9)

    def test_tilted_ggc_laplace(self):
        nu, theta, tilt = uniform01(), 1.0, TiltSpec(2.0, 1.0)
        gt = tilt_gamma_mixture(catalog_density("dpuni"), theta, tilt.b, tilt.c)
        assert ggc_laplace(nu, theta, 0.7, tilt) == pytest.approx(gt.laplace(0.7), rel=1e-7)

    def test_cauchy_stieltjes_beta(self):
        ref = stats.beta(1.5, 1.5)
        got = mean_cauchy_stieltjes(ref.pdf, (0, 1), 1.0, 3.0)
        assert got == pytest.approx(special.hyp2f1(1.0, 1.5, 3.0, -3.0), rel=1e-10)
        assert got == pytest.approx(MeanFunctional(1.0, arcsine()).laplace_moment(3.0), rel=1e-9)

    def test_thorin_exponent(self):
        assert thorin_exponent(discrete([2.0], [1.0]), 1.5) == pytest.approx(math.log(4.0))
        with pytest.raises(DomainError):
            thorin_exponent(uniform01(), -1.0)

    def test_density_expectation(self):
        assert density_expectation(stats.beta(2, 2).pdf, (0, 1), lambda x: x) == pytest.approx(0.5)


class TestLevyDensities:
    def test_gamma_levy_density(self):
        mean = MeanFunctional(1.4, discrete([1.0], [1.0]))
        s = np.array([0.1, 1.0, 3.0])
        np.testing.assert_allclose(ggc_levy_density(mean, TiltSpec(), s), 1.4 * np.exp(-s) / s,
                                   rtol=1e-12)
        np.testing.assert_allclose(ggc_levy_density(mean, TiltSpec(1.0, 0.5), s),
                                   1.4 * np.exp(-1.5 * s) / s, rtol=1e-12)

    def test_continuous_thorin_measure(self):
        # uniform Thorin measure: integral_0^1 exp(-s/r) dr = E_2(s) in closed form
        mean = MeanFunctional(1.0, uniform01())
        for s in (0.2, 2.0):
            assert float(ggc_levy_density(mean, TiltSpec(), s)) == pytest.approx(
                special.expn(2, s) / s, rel=1e-9)

    def test_linnik_levy_density(self):
        s = np.array([0.2, 1.0, 4.0])
        got = stable_mixture_levy_density(0.5, 2.0, discrete([1.0], [1.0]), s)
        np.testing.assert_allclose(got, 0.5 * 2.0 / s * special.erfcx(np.sqrt(s)), rtol=1e-8)

    def test_linnik_exponent(self):
        # theta log(1 + lam^alpha) equals integral (1 - e^{-lam s}) levy(s) ds
        nu = discrete([1.0], [1.0])
        f = lambda s: -math.expm1(-s) * float(stable_mixture_levy_density(0.5, 1.0, nu, s))
        val = integrate.quad(f, 0, 1, limit=200)[0] + integrate.quad(f, 1, np.inf, limit=200)[0]
        assert val == pytest.approx(math.log(2.0), rel=1e-6)

    def test_integrability(self):
        mean = MeanFunctional(1.0, discrete([1.0], [1.0]))
        val = levy_integrability(lambda s: ggc_levy_density(mean, TiltSpec(), s))
        # integral_0^1 e^-s ds + integral_1^inf e^-s / s ds
        assert val == pytest.approx(1 - math.exp(-1) + special.exp1(1.0), rel=1e-9)

    def test_domain(self):
        mean = MeanFunctional(1.0, discrete([1.0], [1.0]))
        with pytest.raises(DomainError):
            ggc_levy_density(mean, TiltSpec(), 0.0)
