"""Distribution of Dirichlet process mean functionals by Cifarelli-Regazzini inversion.

For a probability measure ``H`` and ``theta > 0`` the mean ``M_theta(H)`` of a
Dirichlet process with shape ``theta H`` has cdf

    F(x) = integral_a^x (x - t)^(theta - 1) Delta_theta(t) dt,
    Delta_theta(t) = sin(pi theta H(t)) exp(-theta Phi(t)) / pi,

where ``Phi`` is the log potential of ``H`` and ``a`` the left end of its
support. The density follows by differentiating under the integral; at
``theta = 1`` it is ``Delta_1`` itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dist import Dist, vectorize_scalar
from .errors import DomainError, PreconditionError
from .kernels import DEFAULT_QUAD, QuadConfig, integrate_from, quad
from .lamperti import x_cdf
from .measures import BaseMeasure

__all__ = ["MeanFunctional", "phi", "delta", "delta_derivative", "cr_cdf", "cr_pdf",
           "check_atom_condition", "lamperti_delta", "lamperti_delta_derivative"]


def _out(a):
    return float(a) if np.ndim(a) == 0 else a


def _check_theta(theta) -> float:
    theta = float(theta)
    if not (theta > 0 and math.isfinite(theta)):
        raise DomainError(f"theta must be positive and finite, got {theta}")
    return theta


def check_atom_condition(theta: float, base: BaseMeasure) -> None:
    """Raise if ``theta H`` has an atom of mass at least one."""
    if theta * base.max_atom >= 1.0:
        raise PreconditionError(
            f"theta * H has an atom of mass {theta * base.max_atom:.6g} >= 1; "
            "the inversion formula does not apply")


def phi(base: BaseMeasure, t, cfg: QuadConfig = DEFAULT_QUAD):
    """Log potential ``E log|t - X|`` of ``base`` (closed form when known)."""
    return base.phi(t, cfg)


def delta(theta, base: BaseMeasure, t, cfg: QuadConfig = DEFAULT_QUAD):
    """``sin(pi theta H(t)) exp(-theta Phi(t)) / pi``; zero left of the support."""
    theta = _check_theta(theta)
    check_atom_condition(theta, base)
    t = np.asarray(t, dtype=float)
    mass = np.asarray(base.cdf(t), dtype=float)
    out = np.zeros(t.shape)
    live = mass > 0
    if np.any(live):
        tl = t[live]
        out[live] = np.sin(np.pi * theta * mass[live]) * np.exp(
            -theta * np.asarray(base.phi(tl, cfg))) / np.pi
    return _out(out)


def delta_derivative(theta, base: BaseMeasure, t, cfg: QuadConfig = DEFAULT_QUAD):
    """Derivative in ``t`` of ``delta``, for bases with a density and no atoms.

    ``theta h cos(pi theta H) e^{-theta Phi} - (theta/pi) Phi' sin(pi theta H) e^{-theta Phi}``.
    """
    theta = _check_theta(theta)
    if base.atoms.size:
        raise PreconditionError("the analytic derivative needs an atomless base")
    t = np.asarray(t, dtype=float)
    a, b = base.support
    out = np.zeros(t.shape)
    inside = (t > a) & (t < b)
    if np.any(inside):
        ti = t[inside]
        mass = np.asarray(base.cdf(ti), dtype=float)
        h = np.asarray(base.density(ti), dtype=float)
        damp = np.exp(-theta * np.asarray(base.phi(ti, cfg)))
        grad = np.asarray(base.dphi(ti, cfg))
        arg = np.pi * theta * mass
        out[inside] = theta * damp * (h * np.cos(arg) - grad * np.sin(arg) / np.pi)
    if np.isfinite(b):
        # right of a bounded support Delta vanishes through sin(pi theta) only
        right = t >= b
        if np.any(right):
            tr = t[right]
            grad = np.asarray(base.dphi(tr, cfg))
            out[right] = -theta / np.pi * grad * math.sin(math.pi * theta) * np.exp(
                -theta * np.asarray(base.phi(tr, cfg)))
    return _out(out)


_TINY_WIDTH = 1e-8


def _kernel_integral(theta, integrand, a, x, points, cfg):
    """``integral_a^x (x - t)^(theta - 1) g(t) dt`` with the endpoint singularity removed."""
    width = x - a
    if 0.0 < width < _TINY_WIDTH:
        # on very short ranges kernel and integrand can each be huge; map to [0, 1]
        # and factor out width^theta so their product stays representable
        scaled = lambda v: integrand(a + width * v)
        vpts = [(p - a) / width for p in points if a < p < x]
        return width**theta * _kernel_integral(theta, scaled, 0.0, 1.0, vpts, cfg)
    if theta == 1.0:
        return integrate_from(integrand, a, x, cfg, points=points)
    if theta > 1.0:
        f = lambda t: (x - t) ** (theta - 1.0) * integrand(t)
        return integrate_from(f, a, x, cfg, points=points)
    # lower half in t, where the kernel is smooth; upper half in u = (x - t)^theta,
    # which turns (x - t)^(theta-1) dt into du / theta and removes the singularity
    mid = a + 0.5 * (x - a)
    inv = 1.0 / theta
    lower = integrate_from(lambda t: (x - t) ** (theta - 1.0) * integrand(t), a, mid, cfg,
                           points=[p for p in points if a < p < mid])
    top = (x - mid) ** theta
    upts = sorted((x - p) ** theta for p in points if mid < p < x)
    upper = quad(lambda u: integrand(x - u**inv), 0.0, top, cfg, points=upts) * inv
    return lower + upper


def _support_points(base: BaseMeasure, x: float):
    a = base.support[0]
    pts = [float(v) for v in base.atoms if a < v < x]
    return sorted(set(pts))


def cr_cdf(mean: "MeanFunctional", x, cfg: QuadConfig = DEFAULT_QUAD):
    """Cdf of ``M_theta(H)`` by Cifarelli-Regazzini inversion."""
    theta, base = mean.theta, mean.base
    check_atom_condition(theta, base)

    def one(v):
        a, b = base.support
        if v <= a:
            return 0.0
        if v >= b:
            return 1.0
        pts = _support_points(base, v)
        val = _kernel_integral(theta, lambda t: float(delta(theta, base, t, cfg)), a, v, pts, cfg)
        return min(1.0, max(0.0, val))
    return vectorize_scalar(one)(x)


def cr_pdf(mean: "MeanFunctional", x, cfg: QuadConfig = DEFAULT_QUAD, fd_step: float = 1e-5):
    """Density of ``M_theta(H)``.

    ``theta = 1`` uses ``Delta_1``; Lamperti bases use their closed form;
    atomless bases integrate the analytic derivative of ``Delta_theta`` against
    the kernel; bases with atoms fall back to a central difference of the cdf.
    """
    theta, base = mean.theta, mean.base
    check_atom_condition(theta, base)
    a, b = base.support

    def one(v):
        if v <= a or v >= b:
            return 0.0
        if theta == 1.0:
            return float(delta(1.0, base, v, cfg))
        if base.atoms.size:
            h = fd_step * max(1.0, abs(v))
            lo, hi = max(a, v - h), min(b, v + h)
            return max(0.0, (float(cr_cdf(mean, hi, cfg)) - float(cr_cdf(mean, lo, cfg))) / (hi - lo))
        if base.family == "rho_alpha":
            alpha = base.params["alpha"]
            grad = lambda t: float(lamperti_delta_derivative(alpha, theta, t))
        else:
            grad = lambda t: float(delta_derivative(theta, base, t, cfg))
        return max(0.0, _kernel_integral(theta, grad, a, v, [], cfg))
    return vectorize_scalar(one)(x)


def lamperti_delta(alpha, shape, x):
    """Closed form of ``Delta_shape`` for the Lamperti ratio base.

    ``sin(pi shape F(x)) / (pi D(x)^(shape / (2 alpha)))`` with
    ``D(x) = x^(2 alpha) + 2 x^alpha cos(pi alpha) + 1`` and ``F`` the ratio cdf.
    """
    x = np.asarray(x, dtype=float)
    xp = np.maximum(x, 0.0)
    F = np.asarray(x_cdf(alpha, xp))
    xa = xp**alpha
    den = xa * xa + 2.0 * xa * math.cos(math.pi * alpha) + 1.0
    return _out(np.where(x > 0, np.sin(np.pi * shape * F) / np.pi * den ** (-shape / (2 * alpha)), 0.0))


def lamperti_delta_derivative(alpha, shape, x):
    """Closed-form derivative of :func:`lamperti_delta` in ``x > 0``.

    With ``theta = shape / alpha``: ``(shape x^(alpha-1) / pi)
    [sin(pi alpha (1 - theta F)) - x^alpha sin(pi shape F)] / D^(theta/2 + 1)``.
    """
    x = np.asarray(x, dtype=float)
    xp = np.where(x > 0, x, 1.0)
    theta = shape / alpha
    F = np.asarray(x_cdf(alpha, xp))
    xa = xp**alpha
    den = xa * xa + 2.0 * xa * math.cos(math.pi * alpha) + 1.0
    num = np.sin(np.pi * alpha * (1.0 - theta * F)) - xa * np.sin(np.pi * shape * F)
    val = shape * xa / xp / np.pi * num / den ** (theta / 2.0 + 1.0)
    return _out(np.where(x > 0, val, 0.0))


@dataclass(frozen=True, eq=False)
class MeanFunctional:
    """The Dirichlet mean ``M_theta(H)`` with shape ``theta`` and base ``H``."""

    theta: float
    base: BaseMeasure
    cfg: QuadConfig = DEFAULT_QUAD

    def __post_init__(self):
        object.__setattr__(self, "theta", _check_theta(self.theta))
        if abs(self.base.total_mass - 1.0) > 1e-9:
            raise PreconditionError("the base of a Dirichlet mean must be a probability measure")

    def phi(self, t):
        return phi(self.base, t, self.cfg)

    def delta(self, t):
        return delta(self.theta, self.base, t, self.cfg)

    def cdf(self, x):
        return cr_cdf(self, x, self.cfg)

    def pdf(self, x):
        return cr_pdf(self, x, self.cfg)

    def expected_value(self) -> float:
        """``E M_theta(H)``, the mean of ``H``."""
        return self.base.expect(lambda r: r, self.cfg)

    def rvs(self, rng, size=None, sb_cfg=None):
        from .samplers import sample_mean_stickbreak
        return sample_mean_stickbreak(self, rng, size, sb_cfg)

    def laplace_moment(self, lam: float) -> float:
        """``E[(1 + lam M)^(-theta)] = exp(-theta E log(1 + lam X))`` for ``X ~ H``."""
        if lam < 0:
            raise DomainError("lam must be nonnegative")
        base = self.base
        if base.support[0] < 0:
            raise PreconditionError("needs a base on the positive half-line")
        if lam == 0:
            return 1.0
        # E log(1 + lam X) = log(lam) + Phi(-1/lam)
        return math.exp(-self.theta * (math.log(lam) + float(base.phi(-1.0 / lam, self.cfg))))

    def to_dist(self) -> Dist:
        base = self.base
        sampler = None
        if base.sampler is not None:
            sampler = lambda rng, n: self.rvs(rng, n)
        return Dist(f"mean(theta={self.theta:g}, {base.name})", base.support,
                    pdf_fn=self.pdf, cdf_fn=self.cdf, sampler=sampler,
                    laplace_fn=None, params={"theta": self.theta, "base": base.name},
                    cfg=self.cfg)
