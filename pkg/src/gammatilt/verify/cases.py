"""The distributional identities checked by the verification suite.

Each :class:`IdentityCase` compares two independent routes to the same law
(two samplers, a sampler and a closed-form cdf or transform, or two
quadratures) over a small parameter grid and reports the worst statistic over
that grid. Runners receive a dedicated generator and the case sample size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

import numpy as np
from scipy import special

from .. import catalog
from ..dirichlet_mean import MeanFunctional, cr_cdf
from ..kernels import log_kernel_integral
from ..lamperti import occ_cdf, randomized_occ_sample, x_cdf, x_pdf
from ..measures import (BaseMeasure, arcsine, discrete, lambda_alpha_p, rho_alpha, rho_alpha_H, uniform01,
                        with_zero_atom, zeta)
from ..samplers import (_stable, sample_gamma_product_stable, sample_gamma_product_tilted_stable,
                        sample_lamperti_x, sample_linnik, sample_mean_stickbreak,
                        sample_occupation, sample_tilted_linnik, sample_tilted_stable_ratio,
                        sample_xi_theta, stickbreak_mean_from)
from ..tilting import (beta_scale_law, ggc_laplace, thorin_tilt, tilt_gamma_mixture,
                       tilt_mean_backward, tilt_mean_forward, TiltSpec)
from .stats import (LAMBDA_GRID, cumulative_cdf, interpolated_cdf, ks_two_sample, ks_vs_cdf,
                    transform_match)

__all__ = ["IdentityCase", "CASES", "case_ids", "get_case", "KS_THRESHOLD", "SE_THRESHOLD"]

KS_THRESHOLD = 0.006
SE_THRESHOLD = 4.0
ONE_SAMPLE_N = 200_000
TWO_SAMPLE_N = 400_000


@dataclass(frozen=True)
class IdentityCase:
    """One identity of the suite.

    ``lhs`` and ``rhs`` describe the two routes; ``runner(gen, n)`` returns the
    worst statistic over ``params``. Deterministic cases ignore ``gen``.
    """

    id: str
    anchor: str
    lhs: str
    rhs: str
    method: str
    params: Tuple
    n: int
    threshold: float
    runner: Callable = field(repr=False, compare=False)

    def __post_init__(self):
        if self.method not in ("ks_two_sample", "ks_vs_cdf", "transform_match",
                               "density_quadrature"):
            raise ValueError(f"unknown method {self.method!r}")
        if not self.threshold > 0:
            raise ValueError("threshold must be positive")

    @property
    def tier(self) -> str:
        return "deterministic" if self.method == "density_quadrature" else "stochastic"

    def run(self, gen: np.random.Generator) -> float:
        return float(self.runner(gen, self.n))


CASES: List[IdentityCase] = []


def _case(id, anchor, lhs, rhs, method, params, n=ONE_SAMPLE_N, threshold=None):
    if threshold is None:
        threshold = SE_THRESHOLD if method == "transform_match" else KS_THRESHOLD

    def deco(fn):
        CASES.append(IdentityCase(id, anchor, lhs, rhs, method, tuple(params), int(n),
                                  float(threshold), fn))
        return fn
    return deco


def case_ids() -> List[str]:
    return [c.id for c in CASES]


def get_case(id: str) -> IdentityCase:
    for c in CASES:
        if c.id == id:
            return c
    raise KeyError(id)


# ---- shared sampling recipes -------------------------------------------

def _stick(theta, base: BaseMeasure, gen, n):
    return sample_mean_stickbreak(MeanFunctional(theta, base), gen, n)


def _to_unit(r):
    with np.errstate(invalid="ignore"):
        return np.where(np.isinf(r), 1.0, r / (1.0 + r))


def _random_skew_mean(alpha, shape, xi, gen):
    """Stick-breaking mean of shape ``shape`` whose atoms are occupation times
    of skewness ``xi[i]`` in row ``i``."""
    xi = np.asarray(xi, dtype=float)
    with np.errstate(divide="ignore"):
        scale = (xi / (1.0 - xi)) ** (1.0 / alpha)

    def draw(g, shp, rows):
        r = scale[rows][:, None] * _stable(alpha, g, shp) / _stable(alpha, g, shp)
        return _to_unit(r)
    return stickbreak_mean_from(shape, draw, gen, xi.size)


def _gamma_pow_cdf(alpha, theta):
    """Cdf of ``G_theta^(1/alpha)``."""
    return lambda x: special.gammainc(theta, np.maximum(np.asarray(x, dtype=float), 0.0) ** alpha)


def _density_cdf(dist, samples, n_nodes=400):
    """Interpolated cdf of a catalog density, integrated node to node."""
    return interpolated_cdf(lambda nodes: cumulative_cdf(dist.pdf, nodes, dist.support, dist.cfg),
                            samples, dist.support, n_nodes)


_NU = discrete([0.5, 1.5, 3.0], [0.2, 0.5, 0.3])


# ---- Linnik and stable laws ---------------------------------------------

@_case("thm41_i", "Linnik law as a gamma variable times a stable-ratio Dirichlet mean",
       "G_theta^(1/a) S_a", "G_{a theta} S_a / T_{a, a theta}", "ks_two_sample",
       [(2, 1.0), (3, 0.5), (4, 2.0), (0.3, 1.5)], n=TWO_SAMPLE_N)
def _thm41_i(gen, n):
    worst = 0.0
    for k, theta in [(2, 1.0), (3, 0.5), (4, 2.0)]:
        alpha = 1.0 / k
        lhs = sample_linnik(alpha, theta, gen, n)
        rhs = gen.standard_gamma(alpha * theta, n) * sample_tilted_stable_ratio(k, theta, gen, n)
        worst = max(worst, ks_two_sample(lhs, rhs))
    # general index: the Dirichlet mean by stick breaking
    alpha, theta = 0.3, 1.5
    lhs = sample_linnik(alpha, theta, gen, n)
    rhs = gen.standard_gamma(alpha * theta, n) * _stick(alpha * theta, rho_alpha(alpha), gen, n)
    return max(worst, ks_two_sample(lhs, rhs))


@_case("thm41_ii", "Lamperti ratio as a beta-scaled Lamperti-base mean",
       "B_{a,1-a} M_a(rho_a)", "closed-form Lamperti cdf", "ks_vs_cdf",
       [0.3, 0.5, 0.7], n=100_000)
def _thm41_ii(gen, n):
    worst = 0.0
    for alpha in (0.3, 0.5, 0.7):
        draws = gen.beta(alpha, 1.0 - alpha, n) * _stick(alpha, rho_alpha(alpha), gen, n)
        worst = max(worst, ks_vs_cdf(draws, lambda x, a=alpha: x_cdf(a, x)))
    return worst


@_case("thm41_iii", "three representations of the Linnik law for theta below one",
       "G_theta^(1/a) S_a",
       "B_{theta,1-theta}^(1/a) G_1 X_a ; G_1 B_{theta a,1-theta a} S/T ; "
       "G_{theta a+1-a} B_{a theta,1-a} S/T", "ks_two_sample", [(2, 0.5), (3, 0.6)],
       n=TWO_SAMPLE_N)
def _thm41_iii(gen, n):
    worst = 0.0
    for k, theta in [(2, 0.5), (3, 0.6)]:
        alpha = 1.0 / k
        shape = alpha * theta
        lhs = sample_linnik(alpha, theta, gen, n)
        forms = [
            gen.beta(theta, 1.0 - theta, n) ** (1.0 / alpha) * gen.standard_gamma(1.0, n)
            * sample_lamperti_x(alpha, gen, n),
            gen.standard_gamma(1.0, n) * gen.beta(shape, 1.0 - shape, n)
            * sample_tilted_stable_ratio(k, theta, gen, n),
            gen.standard_gamma(shape + 1.0 - alpha, n) * gen.beta(shape, 1.0 - alpha, n)
            * sample_tilted_stable_ratio(k, theta, gen, n),
        ]
        worst = max(worst, *(ks_two_sample(lhs, f) for f in forms))
    return worst


@_case("thm41_iv", "gamma power as a gamma variable over a polynomially tilted stable",
       "G_theta^(1/a) (closed-form cdf)", "G_{a theta} / T_{a, a theta} and variants",
       "ks_vs_cdf", [(2, 0.5), (2, 1.0), (2, 2.0), (3, 0.5), (3, 1.0)])
def _thm41_iv(gen, n):
    worst = 0.0
    for k, theta in [(2, 0.5), (2, 1.0), (2, 2.0), (3, 0.5), (3, 1.0)]:
        alpha = 1.0 / k
        shape = alpha * theta
        cdf = _gamma_pow_cdf(alpha, theta)
        forms = [gen.standard_gamma(shape, n) / sample_gamma_product_tilted_stable(k, theta, gen, n)]
        if theta < 1.0:
            forms.append(gen.standard_gamma(1.0, n) * gen.beta(theta, 1.0 - theta, n) ** (1.0 / alpha)
                         / _stable(alpha, gen, n))
            forms.append(gen.standard_gamma(shape + 1.0 - alpha, n) * gen.beta(shape, 1.0 - alpha, n)
                         / sample_gamma_product_tilted_stable(k, theta, gen, n))
        elif theta == 1.0:
            forms.append(gen.standard_gamma(1.0, n) / _stable(alpha, gen, n))
        worst = max(worst, *(ks_vs_cdf(f, cdf) for f in forms))
    return worst


@_case("prop42", "log potential of the Lamperti ratio in closed form",
       "quadrature of E log|x - X_a|", "(1/2a) log(x^2a + 2 x^a cos(pi a) + 1)",
       "density_quadrature",
       [(a, x) for a in (0.3, 0.5, 0.7) for x in (0.25, 1.0, 4.0)] + [(0.3, 2.0)],
       n=0, threshold=1e-5)
def _prop42(gen, n):
    worst = 0.0
    for alpha, x in get_case("prop42").params:
        num = log_kernel_integral(lambda y, a=alpha: float(x_pdf(a, y)), x, support=(0.0, np.inf))
        xa = x**alpha
        closed = math.log(xa * xa + 2.0 * xa * math.cos(math.pi * alpha) + 1.0) / (2.0 * alpha)
        worst = max(worst, abs(num - closed))
    return worst


@_case("prop44", "stable-ratio means of index 1/k as gamma products",
       "k^k S_{1/k} prod G_{(theta+j)/k}", "stick-breaking M_{theta/k}(rho_{1/k})",
       "ks_two_sample", [(k, t) for k in (2, 3, 4) for t in (1.0, 2.0)], n=TWO_SAMPLE_N)
def _prop44(gen, n):
    worst = 0.0
    for k in (2, 3, 4):
        for theta in (1.0, 2.0):
            a = sample_tilted_stable_ratio(k, theta, gen, n)
            b = _stick(theta / k, rho_alpha(1.0 / k), gen, n)
            worst = max(worst, ks_two_sample(a, b))
    return worst


@_case("linnik", "Linnik Laplace transform and the exponentially tilted Linnik law",
       "Linnik and tilted Linnik draws",
       "(1+lam^a)^-theta ; ((1+(b lam+c)^a)/(1+c^a))^-theta ; acceptance (1+c^a)^-theta",
       "transform_match", [(a, t) for a in (0.3, 0.5, 0.7) for t in (0.5, 1.0, 2.0)])
def _linnik(gen, n):
    worst = 0.0
    b, c = 1.5, 0.8
    for alpha in (0.3, 0.5, 0.7):
        for theta in (0.5, 1.0, 2.0):
            draws = sample_linnik(alpha, theta, gen, n)
            worst = max(worst, transform_match(
                draws, lambda lam, a=alpha, t=theta: (1.0 + lam**a) ** -t))
            tilted, (acc, prop) = sample_tilted_linnik(alpha, theta, b, c, gen, n,
                                                       return_acceptance=True)
            base = 1.0 + c**alpha
            worst = max(worst, transform_match(
                tilted, lambda lam, a=alpha, t=theta: ((1.0 + (b * lam + c) ** a) / base) ** -t))
            rate = base**-theta
            se = math.sqrt(rate * (1.0 - rate) / prop)
            worst = max(worst, abs(acc / prop - rate) / se)
    return worst


# ---- occupation times ---------------------------------------------------

@_case("prop45_iii", "beta-scaled Bessel bridge occupation time",
       "B_{a,1-a} M_a(Lambda_{a,p})", "closed density (1-x)/(1-p) Lamperti occupation density",
       "ks_vs_cdf", [(0.5, 0.3), (0.3, 0.7)])
def _prop45_iii(gen, n):
    worst = 0.0
    for alpha, p in [(0.5, 0.3), (0.3, 0.7)]:
        dist = catalog.catalog_density("gden", alpha=alpha, p=p)
        draws = dist.rvs(gen, n)
        worst = max(worst, ks_vs_cdf(draws, _density_cdf(dist, draws)))
    return worst


@_case("prop46", "occupation laws under beta-randomized skewness",
       "composed samplers", "closed densities of the first and beta-scaled laws", "ks_vs_cdf",
       [(0.5, 1.0, 0.3), (0.4, 1.5, 0.6)])
def _prop46(gen, n):
    worst = 0.0
    for alpha, theta, p in [(0.5, 1.0, 0.3), (0.4, 1.5, 0.6)]:
        for name in ("firstA", "bden"):
            dist = catalog.catalog_density(name, alpha=alpha, theta=theta, p=p)
            draws = dist.rvs(gen, n)
            worst = max(worst, ks_vs_cdf(draws, _density_cdf(dist, draws)))
    return worst


@_case("prop51", "occupation time with occupation-distributed skewness",
       "A_{a, xi} with xi ~ A_{b, p}", "closed-form cdf of A_{a b, p}", "ks_vs_cdf",
       [(0.5, 0.6, 0.25), (0.7, 0.5, 0.6)])
def _prop51(gen, n):
    worst = 0.0
    for alpha, beta, p in [(0.5, 0.6, 0.25), (0.7, 0.5, 0.6)]:
        draws = randomized_occ_sample(alpha, lambda g, m, b=beta, q=p: sample_occupation(b, q, g, m),
                                      gen, n)
        worst = max(worst, ks_vs_cdf(draws, lambda y, a=alpha * beta, q=p: occ_cdf(a, q, y)))
    return worst


# ---- gamma convolutions and stable mixtures -----------------------------

@_case("prop55", "time-changed subordinator as a gamma times Dirichlet mean",
       "(G_{theta a} / T_{a, theta a})^a M_theta(nu)", "exp(-theta E log(1 + lam R))",
       "transform_match", [(2, 1.5), (3, 0.5)])
def _prop55(gen, n):
    worst = 0.0
    for k, theta in [(2, 1.5), (3, 0.5)]:
        alpha = 1.0 / k
        g = (gen.standard_gamma(alpha * theta, n)
             / sample_gamma_product_tilted_stable(k, theta, gen, n)) ** alpha
        draws = g * _stick(theta, _NU, gen, n)
        worst = max(worst, transform_match(
            draws, lambda lam, t=theta: math.exp(-t * _NU.expect(lambda r: math.log1p(lam * r)))))
    return worst


@_case("prop56", "a beta choice that collapses the time change to a gamma variable",
       "(G_{theta a} / T_{a, theta a})^a B_{a theta, theta(1-a)}", "gamma cdf of shape a theta",
       "ks_vs_cdf", [(2, 1.0), (3, 2.0)])
def _prop56(gen, n):
    worst = 0.0
    for k, theta in [(2, 1.0), (3, 2.0)]:
        alpha = 1.0 / k
        g = (gen.standard_gamma(alpha * theta, n)
             / sample_gamma_product_tilted_stable(k, theta, gen, n)) ** alpha
        draws = g * gen.beta(alpha * theta, theta * (1.0 - alpha), n)
        worst = max(worst, ks_vs_cdf(draws, lambda x, s=alpha * theta: special.gammainc(
            s, np.maximum(x, 0.0))))
    return worst


@_case("prop57", "mean over a mixed Lamperti base factorizes",
       "M_{a theta}(rho_{a, nu})", "M_{a theta}(rho_a) M_theta(nu)^(1/a)", "ks_two_sample",
       [(0.5, 1.0), (0.3, 2.0)], n=TWO_SAMPLE_N)
def _prop57(gen, n):
    worst = 0.0
    for alpha, theta in [(0.5, 1.0), (0.3, 2.0)]:
        lhs = _stick(alpha * theta, rho_alpha_H(alpha, _NU), gen, n)
        rhs = _stick(alpha * theta, rho_alpha(alpha), gen, n) * _stick(theta, _NU, gen, n) ** (1 / alpha)
        worst = max(worst, ks_two_sample(lhs, rhs))
    return worst


@_case("prop58", "unit-shape mean over a zero-inflated mixed Lamperti base",
       "M_1(a rho_{a,H} + (1-a) delta_0)", "X_a M_1(H)^(1/a) ; B M_{a theta}(rho_a) M_theta(H)^(1/a)",
       "ks_two_sample", [(0.3, 1.0), (0.5, 1.5)], n=TWO_SAMPLE_N)
def _prop58(gen, n):
    alpha = 0.3
    lhs = _stick(1.0, with_zero_atom(rho_alpha_H(alpha, _NU), alpha), gen, n)
    rhs = sample_lamperti_x(alpha, gen, n) * _stick(1.0, _NU, gen, n) ** (1.0 / alpha)
    worst = ks_two_sample(lhs, rhs)
    alpha, theta = 0.5, 1.5
    shape = alpha * theta
    lhs = _stick(1.0, with_zero_atom(rho_alpha_H(alpha, _NU), shape), gen, n)
    rhs = (gen.beta(shape, 1.0 - shape, n) * _stick(shape, rho_alpha(alpha), gen, n)
           * _stick(theta, _NU, gen, n) ** (1.0 / alpha))
    return max(worst, ks_two_sample(lhs, rhs))


@_case("prop510", "log potential of the mixed Lamperti ratio as a Laplace transform",
       "exp(-theta a S(x)) x^(theta a)", "E exp(-G_{theta/2} M_{theta/2}(W))", "transform_match",
       [(0.3, 1.0, 2.0), (0.5, 2.0, 0.7)])
def _prop510(gen, n):
    worst = 0.0
    for alpha, theta, x in [(0.3, 1.0, 2.0), (0.5, 2.0, 0.7)]:
        lhs, _ = catalog.catalog_function("prop510", alpha=alpha, H=_NU, theta=theta, x=x)
        xa = x**-alpha
        w_atoms = 2.0 * _NU.atoms * xa * math.cos(math.pi * alpha) + (_NU.atoms * xa) ** 2
        W = discrete(w_atoms, _NU.weights)
        draws = gen.standard_gamma(theta / 2.0, n) * _stick(theta / 2.0, W, gen, n)
        worst = max(worst, transform_match(draws, lambda lam: lhs * x ** (theta * alpha),
                                           lambdas=(1.0,)))
    return worst


@_case("prop52", "randomized skewness law by rejection from a Dirichlet mean",
       "accepted r M / (r M + 1)", "stick-breaking M_theta of the pushed base", "ks_two_sample",
       [(0.5, 1.0, 0.7), (0.3, 2.0, 1.5)], n=TWO_SAMPLE_N)
def _prop52(gen, n):
    worst = 0.0
    for alpha, theta, c in [(0.5, 1.0, 0.7), (0.3, 2.0, 1.5)]:
        xi = sample_xi_theta(theta, c, _NU, gen, n, alpha=alpha)
        direct = _stick(theta, thorin_tilt(_NU, c**alpha), gen, n)
        worst = max(worst, ks_two_sample(xi, direct))
    return worst


@_case("prop512_513", "occupation means under mean-randomized skewness at index one half",
       "xi-randomized and gamma-product samplers", "closed densities with tilt constant 4",
       "ks_vs_cdf", [(0.5, 1.0)])
def _prop512_513(gen, n):
    alpha = 0.5
    H = rho_alpha(0.5)
    # unit-shape mean of the Lamperti base: 4 S_{1/2} G_{3/2}
    m1 = sample_tilted_stable_ratio(2, 2.0, gen, n)
    draws = _to_unit(m1 ** (1.0 / alpha) * sample_lamperti_x(alpha, gen, n))
    dist = catalog.catalog_density("prop513", alpha=alpha, H=H)
    worst = ks_vs_cdf(draws, _density_cdf(dist, draws))
    theta = 1.0
    shape = alpha * theta
    xi = sample_xi_theta(theta, 1.0, H, gen, n)
    draws = gen.beta(shape, 1.0 - shape, n) * _random_skew_mean(alpha, shape, xi, gen)
    dist = catalog.catalog_density("prop512", alpha=alpha, theta=theta, H=H)
    worst = max(worst, ks_vs_cdf(draws, _density_cdf(dist, draws)))
    return worst


@_case("sec55_i_ii", "tilted stable composition and skew-bridge recovery",
       "T_{1/4, theta/2} ; A_{1/2, xi_theta} means",
       "T_{1/2,theta/2} T_{1/2,theta}^2 ; M(Lambda_{1/4,p}) and M_theta(Lambda_{1/2,p})",
       "ks_two_sample", [(1.0, None), (2.0, None), (1.0, 0.3), (0.5, 0.3)], n=TWO_SAMPLE_N)
def _sec55(gen, n):
    worst = 0.0
    for theta in (1.0, 2.0):
        lhs = sample_gamma_product_tilted_stable(4, 2.0 * theta, gen, n)
        rhs = (sample_gamma_product_tilted_stable(2, theta, gen, n)
               * sample_gamma_product_tilted_stable(2, 2.0 * theta, gen, n) ** 2)
        worst = max(worst, ks_two_sample(lhs, rhs))
    alpha = beta = 0.5
    p = 0.3
    c = (p / (1.0 - p)) ** (1.0 / beta)
    for theta in (1.0, 0.5):
        xi = sample_xi_theta(theta, c, rho_alpha(beta), gen, n)
        worst = max(worst, ks_two_sample(xi, _stick(theta, lambda_alpha_p(beta, p), gen, n)))
        lhs = _random_skew_mean(alpha, alpha * theta, xi, gen)
        rhs = _stick(alpha * theta, lambda_alpha_p(alpha * beta, p), gen, n)
        worst = max(worst, ks_two_sample(lhs, rhs))
    return worst


# ---- Dirichlet means with explicit densities ----------------------------

_CM_GRID = np.linspace(0.05, 0.95, 19)


@_case("cm_beta", "occupation-base Dirichlet mean is a symmetric beta law (inversion)",
       "inversion cdf of M_theta(Lambda_{1/2,1/2})", "beta(theta+1/2, theta+1/2) cdf",
       "density_quadrature", [0.5, 1.0, 2.0], n=0, threshold=1e-4)
def _cm_beta(gen, n):
    worst = 0.0
    base = lambda_alpha_p(0.5, 0.5)
    for theta in (0.5, 1.0, 2.0):
        got = cr_cdf(MeanFunctional(theta, base), _CM_GRID)
        ref = special.betainc(theta + 0.5, theta + 0.5, _CM_GRID)
        worst = max(worst, float(np.max(np.abs(got - ref))))
    return worst


@_case("cm_beta_mc", "occupation-base Dirichlet mean is a symmetric beta law (sampling)",
       "stick-breaking M_theta(Lambda_{1/2,1/2})", "beta(theta+1/2, theta+1/2) cdf", "ks_vs_cdf",
       [0.5, 1.0, 2.0])
def _cm_beta_mc(gen, n):
    worst = 0.0
    base = lambda_alpha_p(0.5, 0.5)
    for theta in (0.5, 1.0, 2.0):
        draws = _stick(theta, base, gen, n)
        worst = max(worst, ks_vs_cdf(draws, lambda x, t=theta: special.betainc(
            t + 0.5, t + 0.5, np.clip(x, 0.0, 1.0))))
    return worst


@_case("dk_uniform", "unit-shape Dirichlet mean of the uniform law",
       "stick-breaking M_1(U)", "closed density e/pi sin(pi y) y^-y (1-y)^(y-1)", "ks_vs_cdf", [()])
def _dk_uniform(gen, n):
    dist = catalog.catalog_density("dpuni")
    draws = _stick(1.0, uniform01(), gen, n)
    return ks_vs_cdf(draws, _density_cdf(dist, draws))


def _sup_gap(f, g, grid):
    return float(np.max(np.abs(np.asarray(f(grid), dtype=float) - np.asarray(g(grid), dtype=float))))


_POS_GRID = np.geomspace(0.01, 50.0, 30)
_UNIT_GRID = np.linspace(0.02, 0.98, 25)


@_case("prop33", "exponential-ratio mean recovered from the uniform-base mean",
       "backward tilt of the uniform-base mean density", "closed density and normalizer e^-1",
       "density_quadrature", [()], n=0, threshold=1e-6)
def _prop33(gen, n):
    dpuni = catalog.catalog_density("dpuni")
    back = tilt_mean_backward(dpuni.pdf, 1.0, 1.0)
    ref = catalog.catalog_density("zeta_mean")
    gap = _sup_gap(back.pdf, ref.pdf, _POS_GRID)
    fwd = tilt_mean_forward(zeta(), 1.0, 1.0, mean_pdf=ref.pdf)
    gap = max(gap, _sup_gap(fwd.pdf, dpuni.pdf, _UNIT_GRID))
    return max(gap, abs(back.params["normalizer"] - math.exp(-1.0)))


@_case("prop34", "exponential-ratio subordinator recovered from the uniform subordinator",
       "backward tilt of the uniform subordinator density", "closed subordinator density",
       "density_quadrature", [0.3, 0.7], n=0, threshold=1e-6)
def _prop34(gen, n):
    worst = 0.0
    for t in (0.3, 0.7):
        uni = catalog.catalog_density("uni_subordinator", t=t)
        back = tilt_mean_backward(uni.pdf, 1.0, 1.0)
        ref = catalog.catalog_density("zeta_subordinator", t=t)
        worst = max(worst, _sup_gap(back.pdf, ref.pdf, _POS_GRID),
                    abs(back.params["normalizer"] - math.exp(-t)))
    return worst


@_case("prop35", "skew Brownian bridge occupation mean from the exponential-ratio mean",
       "forward tilt of the exponential-ratio mean density with c = p^2/q^2",
       "closed occupation-mean density", "density_quadrature", [0.3, 0.7], n=0, threshold=1e-6)
def _prop35(gen, n):
    worst = 0.0
    ref_mean = catalog.catalog_density("zeta_mean")
    for p in (0.3, 0.7):
        c = (p / (1.0 - p)) ** 2
        fwd = tilt_mean_forward(zeta(), 1.0, c, mean_pdf=ref_mean.pdf)
        ref = catalog.catalog_density("obr_mean", p=p)
        worst = max(worst, _sup_gap(fwd.pdf, ref.pdf, _UNIT_GRID))
    return worst


@_case("thm31", "Dirichlet mean of a zero-inflated base is beta scaled",
       "M_theta(p H + (1-p) delta_0)", "B_{p theta, (1-p) theta} M_{p theta}(H)", "ks_two_sample",
       [(2.5, 0.4), (1.0, 0.5)], n=TWO_SAMPLE_N)
def _thm31(gen, n):
    worst = 0.0
    for theta, p in [(2.5, 0.4), (1.0, 0.5)]:
        rec = beta_scale_law(theta, p, uniform01())
        worst = max(worst, ks_two_sample(rec.sample_mixed(gen, n), rec.sample_product(gen, n)))
    return worst


@_case("thm32", "exponentially tilted gamma mixture",
       "b/c G_theta Y with Y by rejection", "Laplace transform of the tilted gamma convolution",
       "transform_match", [(1.0, 2.0, 1.0), (1.0, 0.5, 3.0)])
def _thm32(gen, n):
    worst = 0.0
    nu = arcsine()
    m_dist = MeanFunctional(1.0, nu).to_dist()
    for theta, b, c in [(1.0, 2.0, 1.0), (1.0, 0.5, 3.0)]:
        tilt = tilt_gamma_mixture(m_dist, theta, b, c)
        draws = tilt.sample_w(gen, n)
        worst = max(worst, transform_match(
            draws, lambda lam, t=theta, s=TiltSpec(b, c): ggc_laplace(nu, t, lam, s)))
    return worst
