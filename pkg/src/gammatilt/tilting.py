"""Gamma tilting and beta scaling of Dirichlet means and GGC laws.

A generalized gamma convolution ``L = G_theta M`` (independent gamma and
Dirichlet mean) stays in the class under the exponential change of measure
``e^{-(c/b) w} b^{-1} f_L(w / b)``. The tilted law is ``(b/c) G_theta Y`` where
``Y = cM'/(cM' + 1)`` and ``M'`` has density proportional to
``(1 + c m)^-theta f_M(m)``. When ``M = M_theta(H)``, ``Y`` is again a Dirichlet
mean, with base the pushforward of ``H`` under ``r -> cr/(cr + 1)``.

Beta scaling is the companion identity
``M_theta(p H + (1-p) delta_0) = M_{p theta}(H) * Beta(p theta, (1-p) theta)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .dirichlet_mean import MeanFunctional
from .dist import Dist, vectorize_scalar
from .errors import DomainError, ModelError, PreconditionError, QuadratureError, SamplerError
from .kernels import DEFAULT_QUAD, QuadConfig, integrate_piecewise, mittag_leffler
from .measures import (BaseMeasure, discrete, lambda_alpha_p, obr_half_p, q_c, uniform01,
                       with_zero_atom)
from .samplers import as_generator, sample_mean_stickbreak

__all__ = [
    "TiltSpec",
    "BetaScaleRecord",
    "beta_scale_law",
    "GammaTilt",
    "tilt_gamma_mixture",
    "untilt_density",
    "tilt_mean_forward",
    "tilt_mean_backward",
    "thorin_tilt",
    "thorin_exponent",
    "ggc_laplace",
    "density_expectation",
    "mean_cauchy_stieltjes",
    "ggc_levy_density",
    "stable_mixture_levy_density",
    "levy_integrability",
]


@dataclass(frozen=True)
class TiltSpec:
    """Scale ``b > 0`` and exponential tilt rate ``c >= 0``."""

    b: float = 1.0
    c: float = 0.0

    def __post_init__(self):
        b, c = float(self.b), float(self.c)
        if not (b > 0 and math.isfinite(b)):
            raise DomainError(f"scale b must be positive, got {b}")
        if not (c >= 0 and math.isfinite(c)):
            raise DomainError(f"tilt rate c must be nonnegative, got {c}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def rate(self) -> float:
        """Exponential rate ``c / b`` applied to the law of ``b L``."""
        return self.c / self.b


def _check_theta(theta) -> float:
    theta = float(theta)
    if not (theta > 0 and math.isfinite(theta)):
        raise DomainError(f"theta must be positive and finite, got {theta}")
    return theta


def _check_c(c) -> float:
    c = float(c)
    if not (c > 0 and math.isfinite(c)):
        raise DomainError(f"c must be positive, got {c}")
    return c


def density_expectation(pdf: Callable, support, g: Callable[[float], float],
                        cfg: QuadConfig = DEFAULT_QUAD, points=()) -> float:
    """``integral g(x) pdf(x) dx`` over ``support`` by deterministic quadrature."""
    a, b = support
    f = lambda x: g(x) * float(pdf(x))
    return integrate_piecewise(f, a, b, cfg, points=points)


# ---- beta scaling -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BetaScaleRecord:
    """The two sides of ``M_theta(H^(p)) = M_{p theta}(H) * B``.

    ``mixed_mean`` is ``M_theta(p H + (1-p) delta_0)``; ``inner_mean`` is
    ``M_{p theta}(H)`` and ``beta_params`` the parameters of the independent
    beta factor, ``None`` when ``p = 1`` (the factor is then identically one).
    """

    theta: float
    p: float
    base: BaseMeasure
    mixed_base: BaseMeasure
    mixed_mean: MeanFunctional
    inner_mean: MeanFunctional
    beta_params: Optional[tuple]

    @property
    def is_identity(self) -> bool:
        return self.beta_params is None

    def sample_mixed(self, rng, size):
        return sample_mean_stickbreak(self.mixed_mean, rng, size)

    def sample_product(self, rng, size):
        gen = as_generator(rng)
        inner = sample_mean_stickbreak(self.inner_mean, gen, size)
        if self.beta_params is None:
            return inner
        return inner * gen.beta(*self.beta_params, size=np.shape(inner))


def beta_scale_law(theta, p, base: BaseMeasure) -> BetaScaleRecord:
    """Beta-scaling record for ``M_theta`` of the zero-inflated base ``pH + (1-p) delta_0``."""
    theta = _check_theta(theta)
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise DomainError(f"p must lie in (0, 1], got {p}")
    mixed = with_zero_atom(base, p)
    beta = None if p == 1.0 else (theta * p, theta * (1.0 - p))
    return BetaScaleRecord(theta, p, base, mixed, MeanFunctional(theta, mixed),
                           MeanFunctional(theta * p, base), beta)


# ---- gamma tilting of G_theta M ----------------------------------------

@dataclass(frozen=True, eq=False)
class GammaTilt:
    """Result of tilting ``W = G_theta M`` by ``TiltSpec(b, c)``.

    Attributes
    ----------
    y : Dist or None
        Law of ``Y_{theta,c}`` on ``(0, 1)``; ``None`` when ``c = 0``.
    normalizer : float
        ``E[(1 + cM)^-theta] = E[exp(-c G_theta M)]``.
    """

    theta: float
    tilt: TiltSpec
    m: Dist
    y: Optional[Dist]
    normalizer: float
    atom: Optional[float] = None

    def laplace(self, lam: float) -> float:
        """``E exp(-lam W~)`` through the ratio ``E e^{-(b lam + c) W} / E e^{-c W}``."""
        b, c = self.tilt.b, self.tilt.c
        num = self._m_moment(b * lam + c)
        return num / self.normalizer

    def laplace_via_y(self, lam: float) -> float:
        """``E exp(-lam W~)`` through ``W~ = (b/c) G_theta Y``."""
        b, c = self.tilt.b, self.tilt.c
        if self.y is None:
            return self._m_moment(b * lam)
        s = b * lam / c
        if self.atom is not None:
            y0 = c * self.atom / (c * self.atom + 1.0)
            return (1.0 + s * y0) ** -self.theta
        return density_expectation(self.y.pdf, (0.0, 1.0), lambda v: (1.0 + s * v) ** -self.theta,
                                   self.m.cfg)

    def _m_moment(self, s: float) -> float:
        if self.atom is not None:
            return (1.0 + s * self.atom) ** -self.theta
        return density_expectation(self.m.pdf, self.m.support,
                                   lambda v: (1.0 + s * v) ** -self.theta, self.m.cfg)

    def sample_w(self, rng, size):
        """Draws of the tilted variable ``W~``."""
        gen = as_generator(rng)
        b, c = self.tilt.b, self.tilt.c
        g = gen.gamma(self.theta, 1.0, size)
        if self.y is None:
            m = np.full(size, self.atom) if self.atom is not None else self.m.rvs(gen, size)
            return b * g * m
        return (b / c) * g * self.y.rvs(gen, size)


def _tilted_rejection(m_dist: Dist, theta, c, max_proposals=None):
    def draw(rng, n):
        gen = as_generator(rng)
        budget = int(max_proposals) if max_proposals is not None else 200 * n + 10000
        kept, used, have = [], 0, 0
        while have < n:
            batch = max(1024, 2 * (n - have))
            if used + batch > budget:
                raise SamplerError(f"tilted rejection exceeded {budget} proposals")
            m = m_dist.rvs(gen, batch)
            used += batch
            keep = m[gen.random(batch) < (1.0 + c * m) ** -theta]
            kept.append(keep)
            have += keep.size
        m = np.concatenate(kept)[:n]
        return c * m / (c * m + 1.0)
    return draw


def tilt_gamma_mixture(M: Union[Dist, float], theta, b=1.0, c=0.0,
                       cfg: QuadConfig = DEFAULT_QUAD) -> GammaTilt:
    """Tilt ``W = G_theta M`` to density ``e^{-(c/b) w} b^{-1} f_W(w/b)`` (normalized).

    ``M`` is a :class:`Dist` with a density on the positive half-line, or a
    number for a point mass. For ``c = 0`` the result is the plain scaling
    ``b W`` and ``y`` is ``None``.
    """
    theta = _check_theta(theta)
    tilt = TiltSpec(b, c)
    c = tilt.c
    if np.isscalar(M):
        m0 = float(M)
        if not m0 >= 0:
            raise DomainError("a point-mass M must be nonnegative")
        m_dist = Dist(f"delta({m0:g})", (m0, m0), cdf_fn=lambda x: np.where(np.asarray(x) >= m0, 1.0, 0.0),
                      sampler=lambda rng, n: np.full(int(n), m0), params={"atom": m0}, cfg=cfg)
        norm = (1.0 + c * m0) ** -theta
        y = None
        if c > 0:
            y0 = c * m0 / (c * m0 + 1.0)
            y = Dist(f"delta({y0:g})", (y0, y0),
                     cdf_fn=lambda x: np.where(np.asarray(x) >= y0, 1.0, 0.0),
                     sampler=lambda rng, n: np.full(int(n), y0), params={"atom": y0}, cfg=cfg)
        return GammaTilt(theta, tilt, m_dist, y, norm, atom=m0)

    if M.support[0] < 0:
        raise PreconditionError("M must live on the positive half-line")
    if c == 0.0:
        return GammaTilt(theta, tilt, M, None, 1.0)
    if not M.has_pdf:
        raise PreconditionError("tilting needs a density for M")
    norm = density_expectation(M.pdf, M.support, lambda m: (1.0 + c * m) ** -theta, cfg)
    y = _y_from_m_density(M.pdf, theta, c, norm, M.support)
    sampler = _tilted_rejection(M, theta, c) if M.has_sampler else None
    ylo = c * M.support[0] / (c * M.support[0] + 1.0)
    yhi = 1.0 if not np.isfinite(M.support[1]) else c * M.support[1] / (c * M.support[1] + 1.0)
    y_dist = Dist(f"Y(theta={theta:g}, c={c:g}, {M.name})", (ylo, yhi), pdf_fn=y, sampler=sampler,
                  params={"theta": theta, "c": c, "normalizer": norm}, cfg=cfg)
    return GammaTilt(theta, tilt, M, y_dist, norm)


def _y_from_m_density(m_pdf, theta, c, norm, m_support=(0.0, np.inf)):
    lo, hi = m_support

    def one(y):
        if not 0.0 < y < 1.0:
            return 0.0
        m = y / (c * (1.0 - y))
        if not lo < m < hi:
            return 0.0
        return (1.0 - y) ** (theta - 2.0) * float(m_pdf(m)) / (c * norm)
    return vectorize_scalar(one)


def _divergence_check(y_pdf, theta):
    # the tail of E[(1-Y)^-theta] in log coordinates is f(1-s) s^(1-theta)
    g = lambda s: float(y_pdf(1.0 - s)) * s ** (1.0 - theta)
    near, far = g(1e-12), g(1e-6)
    if far > 0 and near / far > 0.5:
        raise ModelError(
            f"E[(1 - Y)^-{theta:g}] diverges: this law cannot be a tilted mean Y_(theta,c) "
            f"for theta = {theta:g}")


def untilt_density(y_pdf: Callable, theta, c=1.0, cfg: QuadConfig = DEFAULT_QUAD,
                   support=(0.0, 1.0), points=()):
    """Recover ``(f_M, E[(1 + cM)^-theta])`` from the density of ``Y_{theta,c}``.

    ``f_M(m) = c N (1 + cm)^(theta - 2) f_Y(cm / (1 + cm))`` with
    ``1 / N = E[(1 - Y)^-theta]``. Raises :class:`ModelError` when that
    expectation diverges, which rules out e.g. a uniform ``Y`` for ``theta >= 1``.
    """
    theta, c = _check_theta(theta), _check_c(c)
    _divergence_check(y_pdf, theta)
    try:
        inv_norm = density_expectation(y_pdf, support, lambda v: (1.0 - v) ** -theta, cfg,
                                       points=points)
    except QuadratureError as exc:
        raise ModelError(f"E[(1 - Y)^-{theta:g}] could not be resolved; it appears to diverge") from exc
    if not (math.isfinite(inv_norm) and inv_norm > 0):
        raise ModelError(f"E[(1 - Y)^-{theta:g}] is not a positive finite number")
    norm = 1.0 / inv_norm

    def one(m):
        if not m > 0:
            return 0.0
        y = c * m / (1.0 + c * m)
        return c * norm * (1.0 + c * m) ** (theta - 2.0) * float(y_pdf(y))
    return vectorize_scalar(one), norm


# ---- Dirichlet means ----------------------------------------------------

def tilt_mean_forward(H: BaseMeasure, theta, c, mean_pdf: Optional[Callable] = None,
                      cfg: QuadConfig = DEFAULT_QUAD) -> Dist:
    """Density of ``M_theta(Q_c)`` from that of ``M_theta(H)``.

    ``f(y) = (1 - y)^(theta - 2) f_M(y / (c (1 - y))) / (c E[(1 + c M)^-theta])``.
    ``mean_pdf`` overrides the inversion-formula density of ``M_theta(H)``; the
    normalizer is always a quadrature against the density in use.
    """
    theta, c = _check_theta(theta), _check_c(c)
    mean = MeanFunctional(theta, H, cfg)
    pdf = mean_pdf if mean_pdf is not None else mean.pdf
    lo, hi = H.support
    pts = [float(a) for a in H.atoms if lo < a < hi]
    norm = density_expectation(pdf, (lo, hi), lambda m: (1.0 + c * m) ** -theta, cfg, points=pts)
    y_pdf = _y_from_m_density(pdf, theta, c, norm, (lo, hi))
    Q = thorin_tilt(H, c, cfg)
    sampler = None
    if Q.sampler is not None:
        target = MeanFunctional(theta, Q, cfg)
        sampler = lambda rng, n: sample_mean_stickbreak(target, rng, n)
    return Dist(f"mean(theta={theta:g}, q_c({c:g}, {H.name}))", Q.support, pdf_fn=y_pdf,
                sampler=sampler, params={"theta": theta, "c": c, "normalizer": norm}, cfg=cfg)


def tilt_mean_backward(q_pdf: Callable, theta, c=1.0, cfg: QuadConfig = DEFAULT_QUAD,
                       points=()) -> Dist:
    """Density of ``M_theta(H)`` from that of ``M_theta(Q_c)``; inverse of the forward map.

    ``points`` lists interior singularities of ``q_pdf``, such as images of atoms.
    """
    pdf, norm = untilt_density(q_pdf, theta, c, cfg, points=points)
    return Dist(f"untilted(theta={theta:g}, c={c:g})", (0.0, np.inf), pdf_fn=pdf,
                params={"theta": float(theta), "c": float(c), "normalizer": norm}, cfg=cfg)


def thorin_tilt(nu: BaseMeasure, c, cfg: QuadConfig = DEFAULT_QUAD) -> BaseMeasure:
    """Pushforward of ``nu`` under ``r -> cr / (cr + 1)``, with named closed forms.

    Lamperti ratios map to occupation laws, the ``zeta`` law maps to the uniform
    law (``c = 1``) or to a skewed bridge occupation law, and atoms map to atoms.
    """
    c = _check_c(c)
    fam = nu.family
    if fam == "rho_alpha":
        ca = c ** nu.params["alpha"]
        return lambda_alpha_p(nu.params["alpha"], ca / (1.0 + ca))
    if fam == "zeta":
        if c == 1.0:
            return uniform01()
        r = math.sqrt(c)
        return obr_half_p(r / (1.0 + r))
    if fam == "discrete" or (nu.pdf is None and nu.atoms.size):
        pushed = [c * a / (c * a + 1.0) for a in nu.atoms]
        return discrete(pushed, nu.weights)
    return q_c(c, nu, cfg=cfg)


# ---- Laplace transforms and Levy densities ------------------------------

def thorin_exponent(nu: BaseMeasure, lam, cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """``integral log(1 + lam r) nu(dr)`` by direct quadrature over ``nu``."""
    lam = float(lam)
    if lam < 0:
        raise DomainError("lam must be nonnegative")
    return nu.expect(lambda r: math.log1p(lam * r), cfg)


def ggc_laplace(nu: BaseMeasure, theta, lam, tilt: TiltSpec = TiltSpec(),
                cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """Laplace transform of the tilted GGC, ``exp(-theta [t(b lam + c) - t(c)])``."""
    theta = _check_theta(theta)
    up = thorin_exponent(nu, tilt.b * lam + tilt.c, cfg)
    down = thorin_exponent(nu, tilt.c, cfg) if tilt.c > 0 else 0.0
    return math.exp(-theta * (up - down))


def mean_cauchy_stieltjes(mean_pdf: Callable, support, theta, lam,
                          cfg: QuadConfig = DEFAULT_QUAD, points=()) -> float:
    """``E[(1 + lam M)^-theta]`` by quadrature against a mean density."""
    theta = _check_theta(theta)
    return density_expectation(mean_pdf, support, lambda m: (1.0 + lam * m) ** -theta, cfg, points)


def _expect_near(nu: BaseMeasure, g, scale, cfg):
    # integral g d(nu) where g switches on around r = scale; split the quadrature there
    total = float(sum(w * g(a) for a, w in zip(nu.atoms, nu.weights)))
    if nu.pdf is not None:
        lo, hi = nu.support
        pts = [p for p in (0.5 * scale, scale, 2.0 * scale) if lo < p < hi]
        total += density_expectation(nu.pdf, (lo, hi), g, cfg, points=pts)
    return total


def ggc_levy_density(mean: MeanFunctional, tilt: TiltSpec, s, cfg: QuadConfig = DEFAULT_QUAD):
    """Levy density of ``b G_theta M_theta(nu)`` tilted at rate ``c / b``.

    ``theta s^-1 exp(-(c/b) s) integral exp(-s / (b r)) nu(dr)``.
    """
    theta, nu = mean.theta, mean.base
    if nu.support[0] < 0:
        raise PreconditionError("the Thorin measure must live on the positive half-line")
    b = tilt.b

    def one(v):
        if not v > 0:
            raise DomainError("the Levy density is defined for s > 0")
        kern = lambda r: math.exp(-v / (b * r)) if r > 0 else 0.0
        return theta / v * math.exp(-tilt.rate * v) * _expect_near(nu, kern, v / b, cfg)
    return vectorize_scalar(one)(s)


def stable_mixture_levy_density(alpha, theta, nu: BaseMeasure, s, cfg: QuadConfig = DEFAULT_QUAD):
    """``alpha theta s^-1 integral E exp(-s / (X r^(1/alpha))) nu(dr)`` for the ratio ``X``.

    Evaluated through the Mittag-Leffler-type transform
    ``E exp(-q^(1/alpha) X) = phi_alpha(q)``; for ``nu = delta_1`` this is the
    Linnik Levy density ``alpha theta s^-1 phi_alpha(s^alpha)``.
    """
    theta = _check_theta(theta)

    def one(v):
        if not v > 0:
            raise DomainError("the Levy density is defined for s > 0")
        # 1/X has the law of X, so E exp(-s / (X r^(1/a))) = phi_a(s^a / r)
        kern = lambda r: float(mittag_leffler(alpha, v**alpha / r, cfg)) if r > 0 else 0.0
        return alpha * theta / v * nu.expect(kern, cfg)
    return vectorize_scalar(one)(s)


def levy_integrability(levy: Callable[[float], float], cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """``integral min(1, s) levy(s) ds``; finite for any Levy density."""
    f = lambda v: min(1.0, v) * float(levy(v))
    return integrate_piecewise(f, 0.0, np.inf, cfg, points=[1.0])
