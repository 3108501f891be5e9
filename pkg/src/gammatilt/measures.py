"""Base (Thorin) measures for Dirichlet mean functionals.

A :class:`BaseMeasure` is a finite measure on the real line made of an
absolutely continuous part and finitely many atoms. Besides density, cdf and
sampler it can carry closed forms for the log potential
``Phi(t) = E log|t - X|`` and its derivative; when no closed form applies the
value is computed by quadrature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, PreconditionError
from .kernels import (DEFAULT_QUAD, QuadConfig, integrate_piecewise, log_kernel_integral,
                      principal_value_integral, quad)
from .lamperti import check_alpha, check_p, occ_cdf, occ_pdf, skew_scale, x_cdf, x_pdf
from .samplers import _stable

__all__ = [
    "BaseMeasure",
    "discrete",
    "uniform01",
    "arcsine",
    "zeta",
    "rho_alpha",
    "lambda_alpha_p",
    "obr_half_p",
    "rho_alpha_H",
    "lambda_alpha_H",
    "q_c",
    "with_zero_atom",
    "base_from_name",
    "BASE_NAMES",
]


def _arr(x):
    return np.asarray(x, dtype=float)


def _out(a):
    return float(a) if np.ndim(a) == 0 else a


def _xlogx(x):
    x = _arr(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(x == 0, 0.0, x * np.log(np.abs(x)))


@dataclass(frozen=True, eq=False)
class BaseMeasure:
    """A finite measure with optional closed-form log potential.

    Parameters
    ----------
    pdf : callable or None
        Density of the continuous part (integrating to ``cont_mass``).
    cdf_fn : callable
        Right-continuous distribution function of the whole measure.
    atoms, weights : ndarray
        Point masses.
    sampler : callable or None
        ``sampler(gen, shape)`` drawing from the normalized measure.
    phi_closed, dphi_closed : callable or None
        Closed forms of ``Phi`` and ``Phi'``; they may return ``nan`` where they
        do not apply, in which case quadrature is used.
    """

    name: str
    support: tuple
    pdf: Optional[Callable] = None
    cdf_fn: Optional[Callable] = None
    atoms: np.ndarray = field(default_factory=lambda: np.empty(0))
    weights: np.ndarray = field(default_factory=lambda: np.empty(0))
    sampler: Optional[Callable] = None
    phi_closed: Optional[Callable] = None
    dphi_closed: Optional[Callable] = None
    cont_mass: float = 1.0
    params: dict = field(default_factory=dict)

    @property
    def family(self) -> str:
        """Constructor name, e.g. ``"rho_alpha"`` for ``rho_alpha(0.5)``."""
        return self.name.split("(")[0]

    @property
    def total_mass(self) -> float:
        return (self.cont_mass if self.pdf is not None else 0.0) + float(np.sum(self.weights))

    @property
    def is_absolutely_continuous(self) -> bool:
        return self.atoms.size == 0 and self.pdf is not None

    @property
    def max_atom(self) -> float:
        return float(self.weights.max()) if self.weights.size else 0.0

    def density(self, t):
        """Density of the continuous part, zero off the support."""
        t = _arr(t)
        a, b = self.support
        if self.pdf is None:
            return _out(np.zeros_like(t))
        inside = (t > a) & (t < b)
        vals = np.zeros_like(t)
        if np.any(inside):
            vals[inside] = self.pdf(t[inside]) if t.ndim else self.pdf(float(t))
        return _out(vals)

    def cdf(self, t):
        return self.cdf_fn(t)

    def sample(self, gen, shape):
        if self.sampler is None:
            raise PreconditionError(f"base measure {self.name} has no sampler")
        return self.sampler(gen, shape)

    def expect(self, g: Callable[[float], float], cfg: QuadConfig = DEFAULT_QUAD,
               points=()) -> float:
        """``integral g dH`` over the continuous part plus the atoms.

        ``points`` marks interior locations where ``g`` changes quickly; the
        continuous part is then integrated piecewise between them.
        """
        total = []
        if self.atoms.size:
            total.append(float(sum(w * g(a) for a, w in zip(self.atoms, self.weights))))
        if self.pdf is not None:
            a, b = self.support
            f = lambda x: g(x) * float(self.pdf(x))
            inner = [p for p in points if a < p < b]
            if inner:
                total.append(integrate_piecewise(f, a, b, cfg, points=inner))
            elif np.isfinite(b):
                total.append(quad(f, a, b, cfg))
            else:
                total.append(quad(f, a, a + 1.0, cfg) + quad(f, a + 1.0, np.inf, cfg))
        return math.fsum(total)

    def phi(self, t, cfg: QuadConfig = DEFAULT_QUAD, closed: bool = True):
        """Log potential ``E log|t - X|`` (atoms at ``t`` excluded)."""
        return self._eval(t, self.phi_closed if closed else None,
                          lambda v: log_kernel_integral(self, v, cfg))

    def dphi(self, t, cfg: QuadConfig = DEFAULT_QUAD, closed: bool = True):
        """Derivative of the log potential, the principal value ``E 1/(t - X)``."""
        return self._eval(t, self.dphi_closed if closed else None,
                          lambda v: principal_value_integral(self, v, cfg))

    @staticmethod
    def _eval(t, closed_fn, fallback):
        t = _arr(t)
        vals = np.full(t.shape, np.nan)
        if closed_fn is not None:
            with np.errstate(all="ignore"):
                vals = _arr(closed_fn(t)) * np.ones(t.shape)
        bad = ~np.isfinite(vals)
        if np.any(bad):
            flat = vals.reshape(-1)
            tt = t.reshape(-1)
            for i in np.flatnonzero(bad.reshape(-1)):
                flat[i] = fallback(float(tt[i]))
            vals = flat.reshape(t.shape)
        return _out(vals)


def _step_cdf(atoms, weights):
    order = np.argsort(atoms)
    a, cw = atoms[order], np.cumsum(weights[order])

    def cdf(t):
        t = _arr(t)
        idx = np.searchsorted(a, t, side="right")
        return _out(np.where(idx > 0, cw[np.maximum(idx - 1, 0)], 0.0))
    return cdf


def discrete(atoms, weights) -> BaseMeasure:
    """Finite discrete measure; weights need not sum to one."""
    atoms = np.asarray(atoms, dtype=float).ravel()
    weights = np.asarray(weights, dtype=float).ravel()
    if atoms.shape != weights.shape or atoms.size == 0:
        raise PreconditionError("atoms and weights must be non-empty and of equal length")
    if np.any(weights <= 0) or not np.all(np.isfinite(atoms)):
        raise DomainError("weights must be positive and atoms finite")
    total = weights.sum()
    probs = weights / total

    def sampler(gen, shape):
        return atoms[gen.choice(atoms.size, size=shape, p=probs)]

    def phi(t):
        t = _arr(t)
        diff = np.abs(t[..., None] - atoms)
        with np.errstate(divide="ignore"):
            logs = np.where(diff > 0, np.log(np.where(diff > 0, diff, 1.0)), 0.0)
        return _out(np.sum(weights * logs, axis=-1))

    def dphi(t):
        t = _arr(t)
        diff = t[..., None] - atoms
        with np.errstate(divide="ignore"):
            terms = np.where(diff != 0, 1.0 / np.where(diff != 0, diff, 1.0), 0.0)
        return _out(np.sum(weights * terms, axis=-1))

    return BaseMeasure(
        name="discrete", support=(float(atoms.min()), float(atoms.max())),
        cdf_fn=_step_cdf(atoms, weights), atoms=atoms, weights=weights,
        sampler=sampler if abs(total - 1.0) < 1e-12 else None,
        phi_closed=phi, dphi_closed=dphi, cont_mass=0.0,
        params={"atoms": atoms.tolist(), "weights": weights.tolist()})


def uniform01() -> BaseMeasure:
    """Uniform law on ``[0, 1]``."""
    def pdf(x):
        return _out(np.ones_like(_arr(x)))

    def phi(t):
        t = _arr(t)
        return _out(_xlogx(t) + _xlogx(1.0 - t) - 1.0)

    def dphi(t):
        t = _arr(t)
        return _out(np.log(np.abs(t)) - np.log(np.abs(1.0 - t)))

    return BaseMeasure("uniform01", (0.0, 1.0), pdf=pdf,
                       cdf_fn=lambda t: _out(np.clip(_arr(t), 0.0, 1.0)),
                       sampler=lambda g, s: g.random(s), phi_closed=phi, dphi_closed=dphi)


def arcsine() -> BaseMeasure:
    """Arcsine law, Beta(1/2, 1/2) on ``[0, 1]``."""
    def pdf(x):
        x = _arr(x)
        return _out(1.0 / (np.pi * np.sqrt(x * (1.0 - x))))

    def cdf(t):
        t = np.clip(_arr(t), 0.0, 1.0)
        return _out(2.0 / np.pi * np.arcsin(np.sqrt(t)))

    def phi(t):
        t = _arr(t)
        s = np.where(t < 0, 1.0 - t, t)  # reflect about 1/2
        outside = s > 1
        with np.errstate(invalid="ignore"):
            far = 2.0 * np.log((np.sqrt(s) + np.sqrt(s - 1.0)) / 2.0)
        return _out(np.where(outside, far, -2.0 * np.log(2.0)))

    def dphi(t):
        t = _arr(t)
        with np.errstate(invalid="ignore", divide="ignore"):
            far = np.sign(t - 0.5) / np.sqrt(t * (t - 1.0))
        return _out(np.where((t > 1) | (t < 0), far, np.where((t > 0) & (t < 1), 0.0, np.nan)))

    return BaseMeasure("arcsine", (0.0, 1.0), pdf=pdf, cdf_fn=cdf,
                       sampler=lambda g, s: g.beta(0.5, 0.5, s), phi_closed=phi,
                       dphi_closed=dphi)


def _zeta_phi(t):
    t = _arr(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        pos = t / (1.0 + t) * np.log(np.where(t > 0, t, 1.0))
        s = -t
        neg = np.where(np.abs(s - 1.0) < 1e-8, 1.0 + (s - 1.0) / 2.0,
                       _xlogx(s) / (s - 1.0))
    return _out(np.where(t > 0, pos, np.where(t < 0, neg, 0.0)))


def _zeta_dphi(t):
    t = _arr(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        pos = (np.log(np.where(t > 0, t, 1.0)) + 1.0 + t) / (1.0 + t) ** 2
        s = -t
        neg = np.where(np.abs(s - 1.0) < 1e-6, -0.5 + (s - 1.0) / 3.0,
                       -(s - 1.0 - np.log(np.where(s > 0, s, 1.0))) / (s - 1.0) ** 2)
    return _out(np.where(t > 0, pos, np.where(t < 0, neg, np.nan)))


def zeta() -> BaseMeasure:
    """Law of the ratio ``G/E`` of two independent unit exponentials."""
    return BaseMeasure(
        "zeta", (0.0, np.inf), pdf=lambda x: _out((1.0 + _arr(x)) ** -2),
        cdf_fn=lambda t: _out(np.where(_arr(t) > 0, _arr(t) / (1.0 + np.abs(_arr(t))), 0.0)),
        sampler=lambda g, s: g.standard_exponential(s) / g.standard_exponential(s),
        phi_closed=_zeta_phi, dphi_closed=_zeta_dphi)


def _lamperti_log_potential(alpha):
    def phi(t):
        t = _arr(t)
        with np.errstate(divide="ignore", invalid="ignore"):
            ta = np.abs(t) ** alpha
            pos = np.log(ta * ta + 2.0 * ta * np.cos(np.pi * alpha) + 1.0) / (2.0 * alpha)
            neg = np.log(ta + 1.0) / alpha
        return _out(np.where(t >= 0, pos, neg))

    def dphi(t):
        t = _arr(t)
        with np.errstate(divide="ignore", invalid="ignore"):
            a = np.abs(t)
            ta = a**alpha
            pos = (ta * ta / a + ta / a * np.cos(np.pi * alpha)) / (
                ta * ta + 2.0 * ta * np.cos(np.pi * alpha) + 1.0)
            neg = -(ta / a) / (ta + 1.0)
        return _out(np.where(t > 0, pos, np.where(t < 0, neg, np.nan)))
    return phi, dphi


def rho_alpha(alpha) -> BaseMeasure:
    """Lamperti ratio law of index ``alpha`` as a base measure."""
    alpha = check_alpha(alpha)
    phi, dphi = _lamperti_log_potential(alpha)

    def sampler(g, s):
        return _stable(alpha, g, s) / _stable(alpha, g, s)

    return BaseMeasure(f"rho_alpha({alpha:g})", (0.0, np.inf),
                       pdf=lambda x: x_pdf(alpha, x),
                       cdf_fn=lambda t: x_cdf(alpha, np.maximum(_arr(t), 0.0)),
                       sampler=sampler, phi_closed=phi, dphi_closed=dphi,
                       params={"alpha": alpha})


def _pushforward_potential(base: BaseMeasure, c: float, log_shift: float, cfg=DEFAULT_QUAD):
    """Log potential of the law of ``cR/(cR+1)`` from that of ``R``.

    ``log_shift`` must equal ``E log(1 + cR)``.
    """
    def phi(t):
        t = _arr(t)
        out = np.empty(t.shape)
        flat_t, flat = t.reshape(-1), out.reshape(-1)
        for i, v in enumerate(flat_t):
            if v == 1.0:
                flat[i] = -log_shift
            else:
                u = v / (c * (1.0 - v))
                flat[i] = math.log(c * abs(1.0 - v)) + float(base.phi(u, cfg)) - log_shift
        return _out(out)

    def dphi(t):
        t = _arr(t)
        out = np.empty(t.shape)
        flat_t, flat = t.reshape(-1), out.reshape(-1)
        for i, v in enumerate(flat_t):
            if v == 1.0:
                flat[i] = np.nan
                continue
            u = v / (c * (1.0 - v))
            flat[i] = -1.0 / (1.0 - v) + float(base.dphi(u, cfg)) / (c * (1.0 - v) ** 2)
        return _out(out)
    return phi, dphi


def q_c(c: float, base: BaseMeasure, log_shift: Optional[float] = None,
        cfg: QuadConfig = DEFAULT_QUAD) -> BaseMeasure:
    """Pushforward of ``base`` under ``r -> c r / (c r + 1)``.

    Total mass is preserved. Atoms are mapped individually.
    """
    if not c > 0:
        raise DomainError("c must be positive")
    if base.support[0] < 0:
        raise PreconditionError("pushforward requires a base on the positive half-line")
    fwd = lambda r: c * r / (c * r + 1.0)
    atoms = np.array([fwd(a) for a in base.atoms])
    lo = fwd(base.support[0])
    hi = 1.0 if not np.isfinite(base.support[1]) else fwd(base.support[1])
    pdf = None
    if base.pdf is not None:
        def pdf(y):
            y = _arr(y)
            return _out(base.pdf(y / (c * (1.0 - y))) / (c * (1.0 - y) ** 2))

    def cdf(t):
        t = _arr(t)
        with np.errstate(divide="ignore", invalid="ignore"):
            r = np.where(t >= 1.0, np.inf, t / (c * (1.0 - t)))
        inside = np.where(np.isinf(r), base.total_mass, 0.0)
        fin = np.isfinite(r) & (t > 0)
        res = inside.astype(float)
        if np.any(fin):
            res[fin] = base.cdf(r[fin])
        res = np.where(t <= 0, base.cdf(np.zeros_like(t)) * (t >= 0), res)
        return _out(res)

    sampler = None
    if base.sampler is not None:
        def sampler(g, s):
            r = c * base.sample(g, s)
            with np.errstate(invalid="ignore"):
                return np.where(np.isinf(r), 1.0, r / (1.0 + r))

    if log_shift is None:
        shift = base.expect(lambda r: math.log1p(c * r), cfg) / max(base.total_mass, 1e-300)
        shift *= base.total_mass
    else:
        shift = log_shift
    phi, dphi = _pushforward_potential(base, c, shift, cfg)
    return BaseMeasure(f"q_c({c:g}, {base.name})", (lo, hi), pdf=pdf, cdf_fn=cdf, atoms=atoms,
                       weights=base.weights.copy(), sampler=sampler, phi_closed=phi,
                       dphi_closed=dphi, cont_mass=base.cont_mass,
                       params={"c": c, "base": base.name, "log_shift": shift})


def lambda_alpha_p(alpha, p) -> BaseMeasure:
    """Lamperti occupation-time law as a base measure."""
    alpha, p = check_alpha(alpha), check_p(p)
    c = skew_scale(alpha, p)
    # E log(1 + cX) = log(1 + c^alpha) / alpha for the Lamperti ratio
    shift = -math.log1p(-p) / alpha
    pushed = q_c(c, rho_alpha(alpha), log_shift=shift)

    def pdf(y):
        return occ_pdf(alpha, p, y)

    def cdf(t):
        return occ_cdf(alpha, p, np.clip(_arr(t), 0.0, 1.0))

    return BaseMeasure(f"lambda_alpha_p({alpha:g}, {p:g})", (0.0, 1.0), pdf=pdf, cdf_fn=cdf,
                       sampler=pushed.sampler, phi_closed=pushed.phi_closed,
                       dphi_closed=pushed.dphi_closed, params={"alpha": alpha, "p": p})


def obr_kappa(p: float, cfg: QuadConfig = DEFAULT_QUAD) -> float:
    """Constant with ``1/kappa = c exp(-integral log(1+cx)/(1+x)^2 dx)``, ``c = p^2/q^2``."""
    p = check_p(p)
    c = (p / (1.0 - p)) ** 2
    f = lambda x: math.log1p(c * x) / (1.0 + x) ** 2
    integral = quad(f, 0.0, 1.0, cfg) + quad(f, 1.0, np.inf, cfg)
    return math.exp(integral) / c


def obr_half_p(p) -> BaseMeasure:
    """Occupation law of a p-skewed Brownian bridge, ``p^2 G / (p^2 G + q^2 E)``."""
    p = check_p(p)
    q = 1.0 - p
    c = (p / q) ** 2
    kappa = obr_kappa(p)

    def pdf(y):
        y = _arr(y)
        return _out(p * p * q * q / (p * p * (1.0 - y) + q * q * y) ** 2)

    def cdf(t):
        t = np.clip(_arr(t), 0.0, 1.0)
        return _out(q * q * t / (p * p * (1.0 - t) + q * q * t))

    pushed = q_c(c, zeta(), log_shift=math.log(c * kappa))
    return BaseMeasure(f"obr_half_p({p:g})", (0.0, 1.0), pdf=pdf, cdf_fn=cdf,
                       sampler=pushed.sampler, phi_closed=pushed.phi_closed,
                       dphi_closed=pushed.dphi_closed, params={"p": p, "kappa": kappa})


def with_zero_atom(base: BaseMeasure, p: float) -> BaseMeasure:
    """Mixture ``p H + (1 - p) delta_0``; ``p = 1`` returns ``base`` itself."""
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise DomainError("mixing weight p must lie in (0, 1]")
    if p == 1.0:
        return base
    if base.support[0] < 0:
        raise PreconditionError("zero-atom mixing expects a base on the positive half-line")
    pdf = None
    if base.pdf is not None:
        pdf = lambda x: _out(p * _arr(base.pdf(x)))

    def cdf(t):
        t = _arr(t)
        return _out(p * _arr(base.cdf(t)) + (1.0 - p) * (t >= 0))

    def phi(t):
        t = _arr(t)
        with np.errstate(divide="ignore"):
            lg = np.where(t != 0, np.log(np.abs(np.where(t != 0, t, 1.0))), 0.0)
        return _out(p * _arr(base.phi(t)) + (1.0 - p) * lg)

    def dphi(t):
        t = _arr(t)
        with np.errstate(divide="ignore"):
            inv = np.where(t != 0, 1.0 / np.where(t != 0, t, 1.0), np.nan)
        return _out(p * _arr(base.dphi(t)) + (1.0 - p) * inv)

    sampler = None
    if base.sampler is not None:
        def sampler(g, s):
            keep = g.random(s) < p
            return np.where(keep, base.sample(g, s), 0.0)

    atoms = np.concatenate([base.atoms, [0.0]])
    weights = np.concatenate([p * base.weights, [1.0 - p]])
    return BaseMeasure(f"{base.name}^({p:g})", (0.0, base.support[1]), pdf=pdf, cdf_fn=cdf,
                       atoms=atoms, weights=weights, sampler=sampler, phi_closed=phi,
                       dphi_closed=dphi, cont_mass=p * base.cont_mass,
                       params={"p": p, "base": base.name})


def rho_alpha_H(alpha, H: BaseMeasure, cfg: QuadConfig = DEFAULT_QUAD,
                closed: bool = True) -> BaseMeasure:
    """Law of ``R^(1/alpha) X`` with ``R ~ H`` independent of the Lamperti ratio ``X``.

    Density, cdf and log potential are expectations over ``H`` of the
    corresponding Lamperti closed forms; for discrete ``H`` these are finite sums.
    A Lamperti base of index ``beta`` gives the Lamperti law of index
    ``alpha * beta``, returned directly unless ``closed`` is false.
    """
    alpha = check_alpha(alpha)
    if closed and H.family == "rho_alpha":
        return rho_alpha(alpha * H.params["alpha"])
    if H.support[0] < 0 or (H.atoms.size and np.any(H.atoms <= 0)):
        raise PreconditionError("the mixing measure must live on the positive half-line")
    spa, cpa = math.sin(math.pi * alpha), math.cos(math.pi * alpha)

    def mix(kernel):
        def f(x):
            x = _arr(x)
            out = np.empty(x.shape)
            flat_x, flat = x.reshape(-1), out.reshape(-1)
            for i, v in enumerate(flat_x):
                # the kernels switch over where r is comparable to |x|^alpha
                scale = abs(float(v)) ** alpha
                pts = (0.5 * scale, scale, 2.0 * scale) if scale > 0 else ()
                flat[i] = H.expect(lambda r: kernel(v, r), cfg, points=pts)
            return _out(out)
        return f

    def k_pdf(x, r):
        xa = x**alpha
        return spa / math.pi * xa / x * r / (xa * xa + 2.0 * xa * r * cpa + r * r)

    def k_cdf(x, r):
        if x <= 0:
            return 0.0
        with np.errstate(over="ignore", divide="ignore"):
            z = x / np.float64(r) ** (1.0 / alpha)
        return float(x_cdf(alpha, z)) if np.isfinite(z) else 1.0

    def k_phi(x, r):
        if x >= 0:
            # factor out the larger of x^alpha and r so that r^2 cannot overflow
            xa = x**alpha
            big, small = (r, xa) if r >= xa else (xa, r)
            u = small / big
            return (math.log(big) + 0.5 * math.log1p(2.0 * u * cpa + u * u)) / alpha
        return math.log(abs(x) ** alpha + r) / alpha

    def k_dphi(x, r):
        if x > 0:
            xa = x**alpha
            return (xa * xa / x + xa / x * r * cpa) / (xa * xa + 2.0 * xa * r * cpa + r * r)
        a = abs(x)
        return -(a**alpha / a) / (a**alpha + r)

    sampler = None
    if H.sampler is not None:
        def sampler(g, s):
            r = H.sample(g, s)
            return r ** (1.0 / alpha) * _stable(alpha, g, s) / _stable(alpha, g, s)

    return BaseMeasure(f"rho_alpha_H({alpha:g}, {H.name})", (0.0, np.inf), pdf=mix(k_pdf),
                       cdf_fn=mix(k_cdf), sampler=sampler, phi_closed=mix(k_phi),
                       dphi_closed=mix(k_dphi), cont_mass=H.total_mass,
                       params={"alpha": alpha, "H": H.name})


def lambda_alpha_H(alpha, H: BaseMeasure, cfg: QuadConfig = DEFAULT_QUAD) -> BaseMeasure:
    """Law of ``A = Y / (1 + Y)`` with ``Y = R^(1/alpha) X``, a randomized occupation law."""
    inner = rho_alpha_H(alpha, H, cfg)
    alpha = float(alpha)

    def shift_kernel(r):
        # E log(1 + r^(1/a) X) = log(1 + r) / a
        return math.log1p(r) / alpha

    shift = H.expect(shift_kernel, cfg)
    out = q_c(1.0, inner, log_shift=shift, cfg=cfg)
    return BaseMeasure(f"lambda_alpha_H({alpha:g}, {H.name})", (0.0, 1.0), pdf=out.pdf,
                       cdf_fn=out.cdf_fn, sampler=out.sampler, phi_closed=out.phi_closed,
                       dphi_closed=out.dphi_closed, cont_mass=out.cont_mass,
                       params={"alpha": alpha, "H": H.name})


BASE_NAMES = ("uniform01", "arcsine", "zeta", "rho_alpha", "lambda_alpha_p", "obr_half_p",
              "discrete")


def base_from_name(name: str, **params) -> BaseMeasure:
    """Build a named base measure from keyword parameters."""
    if name in ("uniform", "uniform01", "U"):
        return uniform01()
    if name == "arcsine":
        return arcsine()
    if name == "zeta":
        return zeta()
    if name == "rho_alpha":
        return rho_alpha(params["alpha"])
    if name == "lambda_alpha_p":
        return lambda_alpha_p(params["alpha"], params["p"])
    if name == "obr_half_p":
        return obr_half_p(params["p"])
    if name == "discrete":
        return discrete(params["atoms"], params["weights"])
    raise PreconditionError(f"unknown base measure {name!r}")
