"""Closed-form laws of the Lamperti ratio and of Bessel occupation times.

The Lamperti ratio ``X = S / S'`` of two independent positive alpha-stable
variables has an elementary density, cdf and quantile. The time ``A`` spent
positive by a p-skewed Bessel process of dimension ``2 - 2 alpha`` is
``c X / (1 + c X)`` with ``c**alpha = p / q``, so its law inherits the same
closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import arccot_principal

__all__ = [
    "LampertiRatio",
    "OccupationLaw",
    "check_alpha",
    "check_p",
    "skew_scale",
    "x_pdf",
    "x_cdf",
    "x_quantile",
    "sin_identity_check",
    "occ_pdf",
    "occ_cdf",
    "occ_quantile",
    "randomized_occ_sample",
]


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    return alpha


def check_p(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"skewness p must lie in (0, 1), got {p}")
    return p


def skew_scale(alpha: float, p: float) -> float:
    """Scale ``c`` with ``c**alpha = p / (1 - p)``."""
    return (p / (1.0 - p)) ** (1.0 / alpha)


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def _positive(y, name="y"):
    y = np.asarray(y, dtype=float)
    if np.any(np.isnan(y)) or np.any(y <= 0):
        raise DomainError(f"{name} must be strictly positive")
    return y


def _nonneg(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise DomainError("x must be nonnegative")
    return x


def _unit_open(u, name="u"):
    u = np.asarray(u, dtype=float)
    if np.any(np.isnan(u)) or np.any(u <= 0) or np.any(u >= 1):
        raise DomainError(f"{name} must lie in the open interval (0, 1)")
    return u


def x_pdf(alpha, y):
    """Density of the Lamperti ratio at ``y > 0``."""
    alpha = check_alpha(alpha)
    y = _positive(y)
    ya = y**alpha
    with np.errstate(over="ignore"):
        # an infinite denominator far in the tail correctly yields density 0
        den = ya * ya + 2.0 * ya * np.cos(np.pi * alpha) + 1.0
    return _out(np.sin(np.pi * alpha) / np.pi * ya / y / den)


def x_cdf(alpha, x):
    """Distribution function of the Lamperti ratio; ``x_cdf(a, 0) = 0``.

    For ``x**alpha < 1`` the equivalent form
    ``atan2(x^a sin(pi a), 1 + x^a cos(pi a)) / (pi a)`` is used, which keeps
    full relative precision in the left tail where ``1 - arccot(...)`` cancels.
    """
    alpha = check_alpha(alpha)
    x = _nonneg(x)
    spa, cpa = np.sin(np.pi * alpha), np.cos(np.pi * alpha)
    with np.errstate(over="ignore"):
        xa = x**alpha
        arg = cpa / spa + xa / spa
    finite = np.isfinite(arg)
    angle = np.where(finite, arccot_principal(np.where(finite, arg, 0.0)), 0.0)
    upper = 1.0 - angle / (np.pi * alpha)
    small = xa < 1.0
    lower = np.arctan2(np.where(small, xa, 0.0) * spa, 1.0 + np.where(small, xa, 0.0) * cpa)
    return _out(np.where(small, lower / (np.pi * alpha), upper))


def x_quantile(alpha, u):
    """Quantile of the Lamperti ratio for ``u`` in ``(0, 1)``."""
    alpha = check_alpha(alpha)
    u = _unit_open(u)
    ratio = np.sin(np.pi * alpha * u) / np.sin(np.pi * alpha * (1.0 - u))
    return _out(ratio ** (1.0 / alpha))


def sin_identity_check(alpha, y):
    """Return the three expressions that the ratio's cdf makes equal.

    ``sin(pi a (1 - F(y)))``, ``y**-a sin(pi a F(y))`` and
    ``sin(pi a) / sqrt(y**2a + 2 y**a cos(pi a) + 1)``.
    """
    alpha = check_alpha(alpha)
    y = _positive(y)
    F = np.asarray(x_cdf(alpha, y))
    ya = y**alpha
    first = np.sin(np.pi * alpha * (1.0 - F))
    second = np.sin(np.pi * alpha * F) / ya
    third = np.sin(np.pi * alpha) / np.sqrt(ya * ya + 2.0 * ya * np.cos(np.pi * alpha) + 1.0)
    return _out(first), _out(second), _out(third)


def occ_pdf(alpha, p, x):
    """Lamperti's occupation-time density on the open interval ``(0, 1)``."""
    alpha, p = check_alpha(alpha), check_p(p)
    q = 1.0 - p
    x = _unit_open(x, "x")
    xa, ya = x**alpha, (1.0 - x) ** alpha
    den = q * q * xa * xa + p * p * ya * ya + 2.0 * p * q * xa * ya * np.cos(alpha * np.pi)
    num = p * q * np.sin(alpha * np.pi) * xa / x * ya / (1.0 - x)
    return _out(num / (np.pi * den))


def occ_cdf(alpha, p, y):
    """Occupation-time cdf; accepts ``y`` in ``[0, 1]``."""
    alpha, p = check_alpha(alpha), check_p(p)
    y = np.asarray(y, dtype=float)
    if np.any(np.isnan(y)) or np.any(y < 0) or np.any(y > 1):
        raise DomainError("y must lie in [0, 1]")
    inner = np.clip(y, 0.0, 1.0)
    with np.errstate(divide="ignore"):
        r = inner / (1.0 - inner)
    out = np.where(inner >= 1.0, 1.0,
                   x_cdf(alpha, np.where(inner >= 1.0, 0.0, r) / skew_scale(alpha, p)))
    return _out(out)


def occ_quantile(alpha, p, u):
    """Occupation-time quantile ``c F_X^{-1}(u) / (1 + c F_X^{-1}(u))``."""
    alpha, p = check_alpha(alpha), check_p(p)
    r = skew_scale(alpha, p) * np.asarray(x_quantile(alpha, u))
    return _out(r / (1.0 + r))


def randomized_occ_sample(alpha, xi, rng, size=None):
    """Draw the occupation time of a process with random skewness ``xi``.

    ``xi`` may be a number in ``(0, 1)`` (fixed skewness), an object with an
    ``rvs(rng, size)`` method, or a callable ``xi(rng, size)``. The draw is
    ``xi^(1/a) X / (xi^(1/a) X + (1 - xi)^(1/a))`` with an independent ratio.
    """
    from .samplers import sample_lamperti_x

    alpha = check_alpha(alpha)
    n = 1 if size is None else int(size)
    if np.isscalar(xi):
        w = np.full(n, check_p(xi))
    elif hasattr(xi, "rvs"):
        w = np.asarray(xi.rvs(rng, n), dtype=float)
    else:
        w = np.asarray(xi(rng, n), dtype=float)
    if np.any((w < 0) | (w > 1)):
        raise DomainError("randomizer must take values in [0, 1]")
    x = sample_lamperti_x(alpha, rng, n)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = (w / (1.0 - w)) ** (1.0 / alpha) * x
        out = np.where(np.isinf(r), 1.0, r / (1.0 + r))
    return float(out[0]) if size is None else out


@dataclass(frozen=True)
class LampertiRatio:
    """Law of ``S / S'`` for independent positive alpha-stable variables."""

    alpha: float

    def __post_init__(self):
        check_alpha(self.alpha)

    def pdf(self, y):
        return x_pdf(self.alpha, y)

    def cdf(self, x):
        return x_cdf(self.alpha, x)

    def ppf(self, u):
        return x_quantile(self.alpha, u)

    def to_dist(self):
        from .dist import Dist
        from .samplers import sample_lamperti_x

        a = self.alpha
        return Dist(f"lamperti_x(alpha={a:g})", (0.0, np.inf), pdf_fn=self.pdf,
                    cdf_fn=self.cdf, ppf_fn=self.ppf,
                    sampler=lambda rng, n: sample_lamperti_x(a, rng, n),
                    params={"alpha": a})


@dataclass(frozen=True)
class OccupationLaw:
    """Law of the time spent positive by a p-skewed Bessel process."""

    alpha: float
    p: float

    def __post_init__(self):
        check_alpha(self.alpha)
        check_p(self.p)

    @property
    def scale(self) -> float:
        return skew_scale(self.alpha, self.p)

    def pdf(self, x):
        return occ_pdf(self.alpha, self.p, x)

    def cdf(self, y):
        return occ_cdf(self.alpha, self.p, y)

    def ppf(self, u):
        return occ_quantile(self.alpha, self.p, u)

    def to_dist(self):
        from .dist import Dist
        from .samplers import sample_occupation

        a, p = self.alpha, self.p
        return Dist(f"lamperti_occ(alpha={a:g}, p={p:g})", (0.0, 1.0), pdf_fn=self.pdf,
                    cdf_fn=self.cdf, ppf_fn=self.ppf,
                    sampler=lambda rng, n: sample_occupation(a, p, rng, n),
                    params={"alpha": a, "p": p})
