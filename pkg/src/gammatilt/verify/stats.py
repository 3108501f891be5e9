"""Goodness-of-fit statistics used by the identity suite."""
from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np
from scipy import interpolate, stats

from ..errors import PreconditionError
from ..kernels import DEFAULT_QUAD, QuadConfig, integrate_piecewise, quad

__all__ = [
    "MIN_SAMPLES",
    "LAMBDA_GRID",
    "ks_vs_cdf",
    "ks_two_sample",
    "transform_match",
    "interpolated_cdf",
    "cumulative_cdf",
]

MIN_SAMPLES = 10_000
LAMBDA_GRID = (0.25, 0.5, 1.0, 2.0, 4.0)


def _check_n(x, name="samples"):
    x = np.asarray(x, dtype=float).ravel()
    if x.size < MIN_SAMPLES:
        raise PreconditionError(f"{name}: need at least {MIN_SAMPLES} draws, got {x.size}")
    if not np.all(np.isfinite(x)):
        raise PreconditionError(f"{name}: draws must be finite")
    return x


def ks_vs_cdf(samples, cdf: Callable) -> float:
    """One-sample Kolmogorov-Smirnov distance to a vectorized cdf."""
    x = _check_n(samples)
    return float(stats.kstest(x, cdf).statistic)


def ks_two_sample(a, b) -> float:
    """Two-sample Kolmogorov-Smirnov distance."""
    return float(stats.ks_2samp(_check_n(a, "a"), _check_n(b, "b")).statistic)


def transform_match(samples, closed_form: Callable[[float], float],
                    lambdas: Sequence[float] = LAMBDA_GRID, kind: str = "laplace",
                    order: float = 1.0) -> float:
    """Worst standardized gap between an empirical transform and its closed form.

    ``kind="laplace"`` uses ``exp(-lam x)``; ``kind="cauchy"`` uses
    ``(1 + lam x)^-order``. The gap at each ``lam`` is divided by the standard
    error of the empirical mean.
    """
    x = _check_n(samples)
    worst = 0.0
    for lam in lambdas:
        if kind == "laplace":
            v = np.exp(-lam * x)
        elif kind == "cauchy":
            v = (1.0 + lam * x) ** -order
        else:
            raise PreconditionError(f"unknown transform kind {kind!r}")
        mean = v.mean()
        # the mean itself is only known to rounding, so the error floor is a few ulps
        se = max(v.std(ddof=1) / math.sqrt(v.size), 4.0 * np.finfo(float).eps * abs(mean))
        gap = abs(mean - float(closed_form(lam)))
        worst = max(worst, gap / se if se > 0 else (0.0 if gap == 0 else math.inf))
    return worst


def _nodes(samples, n_nodes, support, lo_q=2e-4, hi_q=1 - 2e-4):
    lo, hi = np.quantile(np.asarray(samples, dtype=float), [lo_q, hi_q])
    a, b = support
    if np.isfinite(a) and np.isfinite(b):
        # keep nodes where float spacing still resolves the distance to the edges
        lo, hi = max(lo, a + 1e-12 * (b - a)), min(hi, b - 1e-12 * (b - a))
        # logit spacing concentrates nodes near both ends of a bounded support
        za = math.log((lo - a) / (b - lo)) if a < lo < b else -12.0
        zb = math.log((hi - a) / (b - hi)) if a < hi < b else 12.0
        z = np.linspace(za, zb, n_nodes)
        nodes = a + (b - a) / (1.0 + np.exp(-z))
    elif lo > 0:
        nodes = np.geomspace(lo, hi, n_nodes)
    else:
        nodes = np.linspace(lo, hi, n_nodes)
    return np.unique(nodes)


def cumulative_cdf(pdf: Callable, nodes, support, cfg: QuadConfig = DEFAULT_QUAD):
    """Cdf at increasing ``nodes`` by integrating ``pdf`` between consecutive nodes.

    Only the first piece, which touches the support edge, needs the singular
    endpoint treatment; interior pieces are smooth and use plain quadrature.
    """
    nodes = np.asarray(nodes, dtype=float)
    a = support[0]
    f = lambda t: float(pdf(t))
    pieces = [integrate_piecewise(f, a, nodes[0], cfg)]
    for lo, hi in zip(nodes[:-1], nodes[1:]):
        pieces.append(quad(f, lo, hi, cfg))
    return np.clip(np.cumsum(pieces), 0.0, 1.0)


def interpolated_cdf(cdf_at_nodes: Callable, samples, support, n_nodes: int = 400):
    """Monotone (PCHIP) interpolant of an expensive cdf over the sample range.

    ``cdf_at_nodes(nodes)`` returns the cdf on an increasing array. Outside the
    node range the interpolant is clamped to 0 and 1; the KS distance there is
    bounded by the tail masses, which are at most ``2e-4`` empirically. On a
    bounded support the exact end values 0 and 1 are added as extra nodes.
    """
    inner = _nodes(samples, n_nodes, support)
    values = np.asarray(cdf_at_nodes(inner), dtype=float)
    nodes = inner
    a, b = support
    if np.isfinite(a) and np.isfinite(b):
        nodes = np.concatenate([[a], inner, [b]])
        values = np.concatenate([[0.0], values, [1.0]])
    values = np.maximum.accumulate(values)
    spline = interpolate.PchipInterpolator(nodes, values, extrapolate=False)

    def cdf(x):
        x = np.asarray(x, dtype=float)
        out = spline(x)
        out = np.where(x < nodes[0], 0.0, out)
        out = np.where(x > nodes[-1], 1.0, out)
        return np.nan_to_num(out, nan=0.0)
    cdf.nodes = nodes
    cdf.values = values
    return cdf
