"""Closed-form densities of Dirichlet means and related occupation laws.

Every entry is built by :func:`catalog_density` and returned as a
:class:`~gammatilt.dist.Dist` carrying the closed-form density, a cdf (closed
or by quadrature) and, where a distributional representation exists, a sampler
that does not use the density. The two routes are what the verification suite
compares.

A few entries are not distributions but evaluable identities; those are built
by :func:`catalog_function`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from .dirichlet_mean import (MeanFunctional, _kernel_integral, cr_cdf, delta,
                             lamperti_delta, lamperti_delta_derivative)
from .dist import Dist, vectorize_scalar
from .errors import DomainError, PreconditionError
from .kernels import DEFAULT_QUAD, QuadConfig, arccot_principal
from .lamperti import check_alpha, check_p, occ_pdf, skew_scale, x_cdf
from .measures import (BaseMeasure, base_from_name, lambda_alpha_H, obr_kappa, rho_alpha,
                       rho_alpha_H, uniform01, with_zero_atom, zeta)
from .samplers import _stable, as_generator, sample_mean_stickbreak

__all__ = ["CatalogEntry", "CATALOG", "catalog_density", "catalog_function", "catalog_ids",
           "lamperti_angle", "upsilon", "s_alpha_H", "sigma_alpha_H"]


def _out(a):
    return float(a) if np.ndim(a) == 0 else a


def _arr(x):
    return np.asarray(x, dtype=float)


def _lamperti_den(alpha, x):
    xa = x**alpha
    return xa * xa + 2.0 * xa * math.cos(math.pi * alpha) + 1.0


def lamperti_angle(alpha, x):
    """``arccot(cot(pi a) + x^a / sin(pi a))``, equal to ``pi a (1 - F_X(x))``."""
    spa = math.sin(math.pi * alpha)
    x = _arr(x)
    return _out(arccot_principal(math.cos(math.pi * alpha) / spa + x**alpha / spa))


def _as_base(H) -> BaseMeasure:
    if isinstance(H, BaseMeasure):
        return H
    if isinstance(H, str):
        return base_from_name(H)
    if isinstance(H, dict):
        spec = dict(H)
        return base_from_name(spec.pop("name"), **spec)
    raise PreconditionError(f"cannot interpret {H!r} as a base measure")


def _check_theta(theta):
    theta = float(theta)
    if not theta > 0:
        raise DomainError("theta must be positive")
    return theta


# ---- samplers built from representations -------------------------------

def _stick(theta, base):
    mean = MeanFunctional(theta, base)
    return lambda rng, n: sample_mean_stickbreak(mean, as_generator(rng), n)


def _beta_times(a, b, inner):
    def draw(rng, n):
        gen = as_generator(rng)
        return gen.beta(a, b, n) * inner(gen, n)
    return draw


def _to_unit(scale, inner):
    def draw(rng, n):
        r = scale * inner(as_generator(rng), n)
        with np.errstate(invalid="ignore"):
            return np.where(np.isinf(r), 1.0, r / (1.0 + r))
    return draw


def _lamperti_x(alpha):
    return lambda gen, n: _stable(alpha, gen, n) / _stable(alpha, gen, n)


# ---- mixtures over a base H --------------------------------------------

def _mix(H: BaseMeasure, kernel, cfg):
    def f(x):
        return H.expect(lambda r: kernel(x, r), cfg)
    return vectorize_scalar(f)


def upsilon(alpha, H: BaseMeasure, x, cfg: QuadConfig = DEFAULT_QUAD):
    """Cdf of ``R^(1/a) X`` as an average of Lamperti cdfs over ``R ~ H``."""
    alpha = check_alpha(alpha)
    return _as_base_rho(alpha, H, cfg).cdf(x)


def s_alpha_H(alpha, H: BaseMeasure, x, cfg: QuadConfig = DEFAULT_QUAD):
    """Log potential of ``R^(1/a) X``: ``(1/2a) E log(x^2a + 2 x^a R cos(pi a) + R^2)``."""
    return _as_base_rho(alpha, H, cfg).phi(x, cfg)


def sigma_alpha_H(alpha, H: BaseMeasure, x, cfg: QuadConfig = DEFAULT_QUAD):
    """Derivative of :func:`s_alpha_H`."""
    return _as_base_rho(alpha, H, cfg).dphi(x, cfg)


def _as_base_rho(alpha, H, cfg):
    return rho_alpha_H(alpha, _as_base(H), cfg)


def _tilt_constant(theta, H: BaseMeasure, cfg) -> float:
    """``1 / E[(1 + M_theta(H))^-theta] = exp(theta E log(1 + R))``."""
    return 1.0 / MeanFunctional(theta, H, cfg).laplace_moment(1.0)


# ---- entries ------------------------------------------------------------

def _dpuni(cfg):
    def pdf(y):
        y = _arr(y)
        return _out(math.e / np.pi * np.sin(np.pi * y) * y**-y * (1.0 - y) ** (y - 1.0))
    return Dist("dpuni", (0.0, 1.0), pdf_fn=pdf, sampler=_stick(1.0, uniform01()), cfg=cfg)


def _zeta_mean(cfg):
    def pdf(x):
        x = _arr(x)
        w = x / (1.0 + x)
        return _out(np.sin(np.pi * w) * x**-w / np.pi)
    return Dist("zeta_mean", (0.0, np.inf), pdf_fn=pdf, sampler=_stick(1.0, zeta()), cfg=cfg)


def _unit_t(t):
    t = float(t)
    if not 0.0 < t < 1.0:
        raise DomainError("subordinator time t must lie in (0, 1)")
    return t


def _uni_subordinator(cfg, t):
    t = _unit_t(t)

    def pdf(y):
        y = _arr(y)
        s = t * (1.0 - y)
        return _out(math.exp(t) / np.pi * np.sin(np.pi * s) * y ** (s - 1.0) * (1.0 - y) ** -s)
    return Dist(f"uni_subordinator(t={t:g})", (0.0, 1.0), pdf_fn=pdf,
                sampler=_stick(1.0, with_zero_atom(uniform01(), t)), params={"t": t}, cfg=cfg)


def _zeta_subordinator(cfg, t):
    t = _unit_t(t)

    def pdf(x):
        x = _arr(x)
        s = t / (1.0 + x)
        return _out(np.sin(np.pi * s) * x ** (s - 1.0) / np.pi)
    return Dist(f"zeta_subordinator(t={t:g})", (0.0, np.inf), pdf_fn=pdf,
                sampler=_stick(1.0, with_zero_atom(zeta(), t)), params={"t": t}, cfg=cfg)


def _obr_mean(cfg, p):
    p = check_p(p)
    q = 1.0 - p
    c = (p / q) ** 2
    kappa = obr_kappa(p, cfg)

    def pdf(y):
        y = _arr(y)
        h = q * q * y / (p * p * (1.0 - y) + q * q * y)
        return _out(kappa / np.pi * c**h * np.sin(np.pi * h) * y**-h * (1.0 - y) ** (h - 1.0))
    from .measures import obr_half_p
    return Dist(f"obr_mean(p={p:g})", (0.0, 1.0), pdf_fn=pdf, sampler=_stick(1.0, obr_half_p(p)),
                params={"p": p, "kappa": kappa}, cfg=cfg)


def _densimple(cfg, p, H=None):
    p = check_p(p)
    H = uniform01() if H is None else _as_base(H)

    def pdf(x):
        x = _arr(x)
        return _out(x ** (p - 1.0) * np.sin(np.pi * p * (1.0 - _arr(H.cdf(x))))
                    * np.exp(-p * _arr(H.phi(x, cfg))) / np.pi)
    return Dist(f"densimple(p={p:g}, {H.name})", (0.0, H.support[1]), pdf_fn=pdf,
                sampler=_stick(1.0, with_zero_atom(H, p)), params={"p": p, "H": H.name}, cfg=cfg)


def _mden(cfg, alpha, theta):
    alpha, theta = check_alpha(alpha), _check_theta(theta)
    shape = alpha * theta
    if not shape < 1.0:
        raise DomainError("requires alpha * theta < 1")

    def pdf(x):
        x = _arr(x)
        return _out(np.sin(theta * _arr(lamperti_angle(alpha, x))) * x ** (shape - 1.0)
                    / _lamperti_den(alpha, x) ** (theta / 2.0) / np.pi)
    inner = _stick(shape, rho_alpha(alpha))
    return Dist(f"mden(alpha={alpha:g}, theta={theta:g})", (0.0, np.inf), pdf_fn=pdf,
                sampler=_beta_times(shape, 1.0 - shape, lambda g, n: inner(g, n)),
                params={"alpha": alpha, "theta": theta}, cfg=cfg)


def _lamperti_mean_dist(name, alpha, shape, cfg, grad=None):
    mean = MeanFunctional(shape, rho_alpha(alpha), cfg)
    grad = grad or (lambda t: float(lamperti_delta_derivative(alpha, shape, t)))

    def one(x):
        if x <= 0:
            return 0.0
        if shape == 1.0:
            return float(lamperti_delta(alpha, 1.0, x))
        return max(0.0, _kernel_integral(shape, grad, 0.0, x, [], cfg))

    def cdf_one(x):
        if x <= 0:
            return 0.0
        f = lambda t: float(lamperti_delta(alpha, shape, t))
        return min(1.0, max(0.0, _kernel_integral(shape, f, 0.0, x, [], cfg)))

    return Dist(name, (0.0, np.inf), pdf_fn=vectorize_scalar(one), cdf_fn=vectorize_scalar(cdf_one),
                sampler=_stick(shape, mean.base), params={"alpha": alpha, "shape": shape}, cfg=cfg)


def _thm42(cfg, alpha, theta):
    alpha, theta = check_alpha(alpha), _check_theta(theta)
    return _lamperti_mean_dist(f"thm42(alpha={alpha:g}, theta={theta:g})", alpha, alpha * theta, cfg)


def _cor41(cfg, alpha):
    alpha = check_alpha(alpha)
    spa = math.sin(math.pi * alpha)

    def grad(x):
        if x <= 0:
            return 0.0
        xa = x**alpha
        return alpha * xa / x / math.pi * (1.0 - xa * xa) * spa / _lamperti_den(alpha, x) ** 2
    return _lamperti_mean_dist(f"cor41(alpha={alpha:g})", alpha, alpha, cfg, grad=grad)


def _cor41_theta_inv(cfg, alpha):
    alpha = check_alpha(alpha)

    def pdf(x):
        x = _arr(x)
        F = _arr(x_cdf(alpha, x))
        return _out(np.sin(np.pi * F) / _lamperti_den(alpha, x) ** (1.0 / (2.0 * alpha)) / np.pi)
    return Dist(f"cor41_theta_inv(alpha={alpha:g})", (0.0, np.inf), pdf_fn=pdf,
                sampler=_stick(1.0, rho_alpha(alpha)), params={"alpha": alpha}, cfg=cfg)


def _gden(cfg, alpha, p):
    alpha, p = check_alpha(alpha), check_p(p)
    from .measures import lambda_alpha_p

    def pdf(x):
        x = _arr(x)
        return _out((1.0 - x) / (1.0 - p) * _arr(occ_pdf(alpha, p, x)))
    inner = _stick(alpha, lambda_alpha_p(alpha, p))
    return Dist(f"gden(alpha={alpha:g}, p={p:g})", (0.0, 1.0), pdf_fn=pdf,
                sampler=_beta_times(alpha, 1.0 - alpha, lambda g, n: inner(g, n)),
                params={"alpha": alpha, "p": p}, cfg=cfg)


def _occ_tilt_parts(alpha, theta, p):
    alpha, theta, p = check_alpha(alpha), _check_theta(theta), check_p(p)
    if not alpha * theta < 1.0:
        raise DomainError("requires alpha * theta < 1")
    return alpha, theta, p, 1.0 - p


def _first_a_core(alpha, theta, p, q, y):
    y = _arr(y)
    arg = (q / p) ** (1.0 / alpha) * y / (1.0 - y)
    ya, za = y**alpha, (1.0 - y) ** alpha
    den = ya * ya * q * q + 2.0 * q * p * ya * za * math.cos(alpha * math.pi) + za * za * p * p
    return y ** (alpha * theta - 1.0) * np.sin(theta * _arr(lamperti_angle(alpha, arg))) / (
        np.pi * den ** (theta / 2.0))


def _first_a(cfg, alpha, theta, p):
    alpha, theta, p, q = _occ_tilt_parts(alpha, theta, p)
    shape = alpha * theta

    def pdf(y):
        return _out(q**theta * _first_a_core(alpha, theta, p, q, y) / (1.0 - _arr(y)))
    inner = _stick(shape, rho_alpha(alpha))
    scaled = _beta_times(shape, 1.0 - shape, lambda g, n: inner(g, n))
    return Dist(f"firstA(alpha={alpha:g}, theta={theta:g}, p={p:g})", (0.0, 1.0), pdf_fn=pdf,
                sampler=_to_unit(skew_scale(alpha, p), lambda g, n: scaled(g, n)),
                params={"alpha": alpha, "theta": theta, "p": p}, cfg=cfg)


def _bden(cfg, alpha, theta, p):
    alpha, theta, p, q = _occ_tilt_parts(alpha, theta, p)
    shape = alpha * theta
    from .measures import lambda_alpha_p

    def pdf(y):
        return _out(_first_a_core(alpha, theta, p, q, y))
    inner = _stick(shape, lambda_alpha_p(alpha, p))
    return Dist(f"bden(alpha={alpha:g}, theta={theta:g}, p={p:g})", (0.0, 1.0), pdf_fn=pdf,
                sampler=_beta_times(shape, 1.0 - shape, lambda g, n: inner(g, n)),
                params={"alpha": alpha, "theta": theta, "p": p}, cfg=cfg)


def _mixture_sampler(alpha, theta, H, extra_beta=False):
    """``[B] M_{a theta}(rho_a) M_theta(H)^(1/a)`` with independent factors."""
    shape = alpha * theta
    lam = _stick(shape, rho_alpha(alpha))
    outer = _stick(theta, H)

    def draw(rng, n):
        gen = as_generator(rng)
        out = lam(gen, n) * outer(gen, n) ** (1.0 / alpha)
        if extra_beta:
            out *= gen.beta(shape, 1.0 - shape, n)
        return out
    return draw


def _thm51(cfg, alpha, theta, H):
    alpha, theta, H = check_alpha(alpha), _check_theta(theta), _as_base(H)
    shape = alpha * theta
    base = rho_alpha_H(alpha, H, cfg)
    cpa = math.cos(math.pi * alpha)

    def grad(x):
        if x <= 0:
            return 0.0
        xa = x**alpha
        b1 = H.expect(lambda r: xa / x * r / (xa * xa + 2.0 * xa * r * cpa + r * r), cfg)
        b2 = H.expect(lambda r: xa * xa / x / (xa * xa + 2.0 * xa * r * cpa + r * r), cfg)
        ups = float(base.cdf(x))
        damp = math.exp(-shape * float(base.phi(x, cfg)))
        return shape / math.pi * damp * (math.sin(math.pi * alpha * (1.0 - theta * ups)) * b1
                                         - math.sin(math.pi * shape * ups) * b2)

    def one(x):
        if x <= 0:
            return 0.0
        if shape == 1.0:
            return float(delta(1.0, base, x, cfg))
        return max(0.0, _kernel_integral(shape, grad, 0.0, x, [], cfg))

    mean = MeanFunctional(shape, base, cfg)
    return Dist(f"thm51(alpha={alpha:g}, theta={theta:g}, {H.name})", (0.0, np.inf),
                pdf_fn=vectorize_scalar(one), cdf_fn=lambda x: cr_cdf(mean, x, cfg),
                sampler=_mixture_sampler(alpha, theta, H),
                params={"alpha": alpha, "theta": theta, "H": H.name}, cfg=cfg)


def _thm52_kernel(alpha, theta, base, cfg):
    shape = alpha * theta

    def f(x):
        x = _arr(x)
        return _out(np.sin(np.pi * shape * (1.0 - _arr(base.cdf(x))))
                    * np.exp(-shape * _arr(base.phi(x, cfg))) * x ** (shape - 1.0) / np.pi)
    return f


def _thm52(cfg, alpha, theta, H):
    alpha, theta, H = check_alpha(alpha), _check_theta(theta), _as_base(H)
    if not alpha * theta < 1.0:
        raise DomainError("requires alpha * theta < 1")
    base = rho_alpha_H(alpha, H, cfg)
    return Dist(f"thm52(alpha={alpha:g}, theta={theta:g}, {H.name})", (0.0, np.inf),
                pdf_fn=_thm52_kernel(alpha, theta, base, cfg),
                sampler=_mixture_sampler(alpha, theta, H, extra_beta=True),
                params={"alpha": alpha, "theta": theta, "H": H.name}, cfg=cfg)


def _prop511(cfg, alpha, theta, H):
    alpha, theta, H = check_alpha(alpha), _check_theta(theta), _as_base(H)
    shape = alpha * theta
    kappa = _tilt_constant(theta, H, cfg)
    inner = _thm51(cfg, alpha, theta, H)

    def pdf(y):
        y = _arr(y)
        return _out(kappa * (1.0 - y) ** (shape - 2.0) * _arr(inner.pdf(y / (1.0 - y))))
    return Dist(f"prop511(alpha={alpha:g}, theta={theta:g}, {H.name})", (0.0, 1.0), pdf_fn=pdf,
                sampler=_stick(shape, lambda_alpha_H(alpha, H, cfg)),
                params={"alpha": alpha, "theta": theta, "H": H.name, "kappa": kappa}, cfg=cfg)


def _prop512(cfg, alpha, theta, H):
    alpha, theta, H = check_alpha(alpha), _check_theta(theta), _as_base(H)
    shape = alpha * theta
    if not shape < 1.0:
        raise DomainError("requires alpha * theta < 1")
    kappa = _tilt_constant(theta, H, cfg)
    base = rho_alpha_H(alpha, H, cfg)

    def pdf(y):
        y = _arr(y)
        x = y / (1.0 - y)
        return _out(kappa / np.pi * np.sin(np.pi * shape * (1.0 - _arr(base.cdf(x))))
                    * np.exp(-shape * _arr(base.phi(x, cfg))) * y ** (shape - 1.0)
                    * (1.0 - y) ** -shape)
    inner = _stick(shape, lambda_alpha_H(alpha, H, cfg))
    return Dist(f"prop512(alpha={alpha:g}, theta={theta:g}, {H.name})", (0.0, 1.0), pdf_fn=pdf,
                sampler=_beta_times(shape, 1.0 - shape, lambda g, n: inner(g, n)),
                params={"alpha": alpha, "theta": theta, "H": H.name, "kappa": kappa}, cfg=cfg)


def _prop513(cfg, alpha, H):
    alpha, H = check_alpha(alpha), _as_base(H)
    base = rho_alpha_H(alpha, H, cfg)

    def pdf(y):
        y = _arr(y)
        x = y / (1.0 - y)
        return _out(np.sin(np.pi * alpha * (1.0 - _arr(base.cdf(x))))
                    * np.exp(-alpha * _arr(base.phi(x, cfg))) * y ** (alpha - 1.0)
                    * (1.0 - y) ** (-alpha - 1.0) / np.pi)
    ratio = _stick(1.0, H)
    lx = _lamperti_x(alpha)

    def draw(rng, n):
        gen = as_generator(rng)
        r = ratio(gen, n) ** (1.0 / alpha) * lx(gen, n)
        with np.errstate(invalid="ignore"):
            return np.where(np.isinf(r), 1.0, r / (1.0 + r))
    return Dist(f"prop513(alpha={alpha:g}, {H.name})", (0.0, 1.0), pdf_fn=pdf, sampler=draw,
                params={"alpha": alpha, "H": H.name}, cfg=cfg)


def _genvar(cfg, alpha, H):
    alpha, H = check_alpha(alpha), _as_base(H)
    base = rho_alpha_H(alpha, H, cfg)
    sampler = None
    if base.sampler is not None:
        sampler = lambda rng, n: base.sample(as_generator(rng), n)
    return Dist(f"genvar(alpha={alpha:g}, {H.name})", (0.0, np.inf), pdf_fn=base.pdf,
                cdf_fn=base.cdf, sampler=sampler, params={"alpha": alpha, "H": H.name}, cfg=cfg)


@dataclass(frozen=True)
class CatalogEntry:
    """A named formula: identifier, descriptive anchor, parameters and builder."""

    id: str
    anchor: str
    params: Tuple[str, ...]
    builder: Callable
    kind: str = "density"


_ENTRIES = [
    CatalogEntry("dpuni", "unit-shape Dirichlet mean of the uniform law", (), _dpuni),
    CatalogEntry("zeta_mean", "unit-shape mean of the exponential-ratio law", (), _zeta_mean),
    CatalogEntry("uni_subordinator", "uniform-base gamma-convolution subordinator at time t",
                 ("t",), _uni_subordinator),
    CatalogEntry("zeta_subordinator", "exponential-ratio subordinator at time t", ("t",),
                 _zeta_subordinator),
    CatalogEntry("obr_mean", "unit-shape mean of the skew Brownian bridge occupation law",
                 ("p",), _obr_mean),
    CatalogEntry("densimple", "unit-shape mean of a base mixed with an atom at zero",
                 ("p", "H"), _densimple),
    CatalogEntry("mden", "beta-scaled Lamperti mean, non-integral density", ("alpha", "theta"),
                 _mden),
    CatalogEntry("thm42", "Lamperti-base mean of shape alpha*theta", ("alpha", "theta"), _thm42),
    CatalogEntry("cor41", "Lamperti-base mean of shape alpha (Bessel bridge)", ("alpha",),
                 _cor41),
    CatalogEntry("cor41_theta_inv", "Lamperti-base mean of unit shape", ("alpha",),
                 _cor41_theta_inv),
    CatalogEntry("gden", "beta-scaled Bessel bridge occupation time", ("alpha", "p"), _gden),
    CatalogEntry("firstA", "occupation time with beta-randomized skewness", ("alpha", "theta", "p"),
                 _first_a),
    CatalogEntry("bden", "beta-scaled generalized Bessel bridge occupation time",
                 ("alpha", "theta", "p"), _bden),
    CatalogEntry("thm51", "mean of shape alpha*theta over the mixed Lamperti base",
                 ("alpha", "theta", "H"), _thm51),
    CatalogEntry("thm52", "beta-scaled mean over the mixed Lamperti base",
                 ("alpha", "theta", "H"), _thm52),
    CatalogEntry("prop511", "occupation mean over the randomized occupation base",
                 ("alpha", "theta", "H"), _prop511),
    CatalogEntry("prop512", "beta-scaled occupation mean over the randomized occupation base",
                 ("alpha", "theta", "H"), _prop512),
    CatalogEntry("prop513", "occupation time with mean-randomized skewness", ("alpha", "H"),
                 _prop513),
    CatalogEntry("genvar", "density of the mixed Lamperti ratio", ("alpha", "H"), _genvar),
    CatalogEntry("upsilon", "cdf of the mixed Lamperti ratio", ("alpha", "H"), _genvar),
    CatalogEntry("s_alpha_H", "log potential of the mixed Lamperti ratio and its derivative",
                 ("alpha", "H"), None, kind="function"),
    CatalogEntry("prop510", "log potential as a gamma-convolution Laplace transform",
                 ("alpha", "H", "theta", "x"), None, kind="function"),
]

CATALOG: Dict[str, CatalogEntry] = {e.id: e for e in _ENTRIES}


def catalog_ids(kind: str = "density"):
    return [e.id for e in _ENTRIES if e.kind == kind]


def _lookup(id: str) -> CatalogEntry:
    try:
        return CATALOG[id]
    except KeyError:
        raise PreconditionError(f"unknown catalog id {id!r}") from None


def _unpack(entry: CatalogEntry, params: dict):
    params = dict(params)
    cfg = params.pop("cfg", DEFAULT_QUAD)
    unknown = set(params) - set(entry.params)
    if unknown:
        raise PreconditionError(f"{entry.id}: unknown parameters {sorted(unknown)}")
    return cfg, params


def catalog_density(id: str, **params) -> Dist:
    """Build the catalog distribution ``id`` with keyword parameters."""
    entry = _lookup(id)
    if entry.kind != "density":
        raise PreconditionError(f"{id} is an identity, build it with catalog_function")
    cfg, params = _unpack(entry, params)
    try:
        return entry.builder(cfg, **params)
    except TypeError as exc:
        raise PreconditionError(f"{id}: {exc}") from None


@dataclass(frozen=True)
class LogPotential:
    """Closed-form log potential of ``R^(1/a) X`` and its derivative."""

    alpha: float
    H: BaseMeasure
    cfg: QuadConfig = DEFAULT_QUAD

    def value(self, x):
        return s_alpha_H(self.alpha, self.H, x, self.cfg)

    def derivative(self, x):
        return sigma_alpha_H(self.alpha, self.H, x, self.cfg)


def _prop510(alpha, H, theta, x, cfg):
    """Both sides of ``exp(-theta a S(x)) = E[exp(-G_{theta/2} M_{theta/2}(W))] x^(-theta a)``.

    ``W = 2 R x^-a cos(pi a) + R^2 x^-2a``; the right side is evaluated as the
    Cauchy-Stieltjes transform ``exp(-(theta/2) E log(1 + W))`` of the mean.
    """
    alpha, theta = check_alpha(alpha), _check_theta(theta)
    x = float(x)
    if not x > 0:
        raise DomainError("x must be positive")
    lhs = math.exp(-theta * alpha * float(s_alpha_H(alpha, H, x, cfg)))
    xa = x**-alpha
    cpa = math.cos(math.pi * alpha)
    w = lambda r: 2.0 * r * xa * cpa + r * r * xa * xa
    rhs = math.exp(-0.5 * theta * H.expect(lambda r: math.log1p(w(r)), cfg)) * x ** (-theta * alpha)
    return lhs, rhs


def catalog_function(id: str, **params):
    """Build an evaluable identity: ``s_alpha_H`` or ``prop510``."""
    entry = _lookup(id)
    cfg, params = _unpack(entry, params)
    if id == "s_alpha_H":
        return LogPotential(check_alpha(params["alpha"]), _as_base(params["H"]), cfg)
    if id == "prop510":
        return _prop510(params["alpha"], _as_base(params["H"]), params["theta"], params["x"], cfg)
    raise PreconditionError(f"{id} is a distribution, build it with catalog_density")
