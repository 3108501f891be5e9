"""Random-variate generators built from distributional representations.

Every sampler takes an explicit generator (or :class:`RngState`) and never
touches global random state. Array sizes follow numpy conventions: ``size=None``
returns a float, an int or tuple returns an array of that shape.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import DomainError, PreconditionError, SamplerError
from .lamperti import check_alpha, check_p, skew_scale

__all__ = [
    "RngState",
    "StickBreakConfig",
    "as_generator",
    "sample_stable",
    "sample_lamperti_x",
    "sample_occupation",
    "sample_linnik",
    "sample_tilted_linnik",
    "sample_gamma_product_tilted_stable",
    "sample_gamma_product_stable",
    "sample_tilted_stable_ratio",
    "sample_mean_stickbreak",
    "stickbreak_mean_from",
    "sample_xi_theta",
]

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngState:
    """Seed and stream of a counter-based Philox generator.

    Distinct ``stream`` values give independent sequences for the same seed,
    so parallel work can be split without coordination.
    """

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        key = np.array([int(self.seed) & _MASK64, int(self.stream) & _MASK64], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    @staticmethod
    def stream_for(label: str) -> int:
        """Stable 64-bit stream id derived from a text label."""
        return int.from_bytes(hashlib.sha256(label.encode("utf-8")).digest()[:8], "little")

    @classmethod
    def for_label(cls, seed: int, label: str) -> "RngState":
        return cls(seed, cls.stream_for(label))


RngLike = Union[np.random.Generator, RngState, int, None]


def as_generator(rng: RngLike) -> np.random.Generator:
    """Coerce a generator, :class:`RngState` or integer seed to a Generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, RngState):
        return rng.generator()
    if rng is None:
        raise PreconditionError("an explicit random generator or seed is required")
    return RngState(int(rng)).generator()


def _shape(size):
    if size is None:
        return (), True
    if np.isscalar(size):
        return (int(size),), False
    return tuple(int(s) for s in size), False


def _finish(arr, scalar):
    return float(arr.reshape(-1)[0]) if scalar else arr


def _open_uniform(gen, shape):
    # uniform on the open interval (0, 1)
    return (gen.random(shape) + 2.0**-54) * (1.0 - 2.0**-53)


def _stable(alpha, gen, shape):
    u = np.pi * _open_uniform(gen, shape)
    e = gen.standard_exponential(shape)
    with np.errstate(over="ignore"):
        a = np.sin(alpha * u) / np.sin(u) ** (1.0 / alpha)
        b = (np.sin((1.0 - alpha) * u) / e) ** ((1.0 - alpha) / alpha)
    return a * b


def sample_stable(alpha, rng, size=None):
    """Positive alpha-stable draws with Laplace transform ``exp(-lam**alpha)``.

    Uses the uniform-exponential (Kanter) transformation, which is exact and
    rejection free.
    """
    alpha = check_alpha(alpha)
    shape, scalar = _shape(size)
    return _finish(_stable(alpha, as_generator(rng), shape), scalar)


def sample_lamperti_x(alpha, rng, size=None):
    """Draws of the ratio ``S / S'`` of two independent positive stables."""
    alpha = check_alpha(alpha)
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    return _finish(_stable(alpha, gen, shape) / _stable(alpha, gen, shape), scalar)


def sample_occupation(alpha, p, rng, size=None):
    """Time spent positive by a p-skewed Bessel process, as ``cX / (1 + cX)``."""
    alpha, p = check_alpha(alpha), check_p(p)
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    r = skew_scale(alpha, p) * _stable(alpha, gen, shape) / _stable(alpha, gen, shape)
    with np.errstate(invalid="ignore"):
        out = np.where(np.isinf(r), 1.0, r / (1.0 + r))
    return _finish(out, scalar)


def sample_linnik(alpha, theta, rng, size=None, b=1.0):
    """Positive Linnik draws ``b G_theta^(1/alpha) S_alpha``."""
    alpha = check_alpha(alpha)
    if not theta > 0 or not b > 0:
        raise DomainError("theta and b must be positive")
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    g = gen.standard_gamma(theta, shape)
    return _finish(b * g ** (1.0 / alpha) * _stable(alpha, gen, shape), scalar)


def sample_tilted_linnik(alpha, theta, b, c, rng, size=None, max_proposals=None,
                         return_acceptance=False):
    """Exponentially tilted positive Linnik draws by rejection.

    Linnik proposals ``L`` are accepted with probability ``exp(-c L)`` and the
    output is ``b L``. The mean acceptance rate is ``(1 + c**alpha)**-theta``.

    Parameters
    ----------
    max_proposals : int, optional
        Proposal budget. Defaults to 50 times the expected requirement.
    return_acceptance : bool
        Also return ``(accepted, proposed)`` counts.
    """
    alpha = check_alpha(alpha)
    if not (theta > 0 and b > 0 and c >= 0):
        raise DomainError("need theta > 0, b > 0 and c >= 0")
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    n = int(np.prod(shape)) if shape else 1
    if c == 0:
        out = b * gen.standard_gamma(theta, n) ** (1.0 / alpha) * _stable(alpha, gen, n)
        res = _finish(out.reshape(shape), scalar)
        return (res, (n, n)) if return_acceptance else res
    rate = (1.0 + c**alpha) ** (-theta)
    budget = int(max_proposals) if max_proposals is not None else int(50 * n / rate) + 1000
    kept, proposed, accepted = [], 0, 0
    while accepted < n:
        if proposed >= budget:
            raise SamplerError(f"tilted Linnik sampler exceeded {budget} proposals")
        m = min(budget - proposed, max(1024, int(1.2 * (n - accepted) / rate) + 64))
        lin = gen.standard_gamma(theta, m) ** (1.0 / alpha) * _stable(alpha, gen, m)
        ok = gen.random(m) < np.exp(-c * lin)
        kept.append(lin[ok])
        proposed += m
        accepted += int(ok.sum())
    out = b * np.concatenate(kept)[:n]
    res = _finish(out.reshape(shape), scalar)
    return (res, (accepted, proposed)) if return_acceptance else res


def _check_k(k):
    if int(k) != k or k < 2:
        raise DomainError("k must be an integer >= 2")
    return int(k)


def _gamma_product(gen, shapes, shape):
    out = np.ones(shape)
    for a in shapes:
        out *= gen.standard_gamma(a, shape)
    return out


def sample_gamma_product_tilted_stable(k, theta, rng, size=None):
    """Polynomially tilted stable ``T`` of index ``1/k`` and tilt ``theta/k``.

    ``1 / T = k**k * prod_{j=1}^{k-1} G_{(theta + j)/k}``.
    """
    k = _check_k(k)
    if not theta > 0:
        raise DomainError("theta must be positive")
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    prod = _gamma_product(gen, [(theta + j) / k for j in range(1, k)], shape)
    return _finish(1.0 / (k**k * prod), scalar)


def sample_gamma_product_stable(k, rng, size=None):
    """Positive stable of index ``1/k`` via ``1/S = k**k prod_{j<k} G_{j/k}``."""
    k = _check_k(k)
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    prod = _gamma_product(gen, [j / k for j in range(1, k)], shape)
    return _finish(1.0 / (k**k * prod), scalar)


def sample_tilted_stable_ratio(k, theta, rng, size=None):
    """Dirichlet mean of the index-``1/k`` Lamperti base with mass ``theta/k``.

    Drawn exactly as ``S / T`` with both factors from gamma products, which
    equals ``k**k S prod_{j<k} G_{(theta + j)/k}``.
    """
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    s = sample_gamma_product_stable(k, gen, shape)
    t = sample_gamma_product_tilted_stable(k, theta, gen, shape)
    return _finish(s / t, scalar)


@dataclass(frozen=True)
class StickBreakConfig:
    """Truncation of the stick-breaking series.

    ``truncation`` sticks are drawn explicitly and the leftover mass is put on
    one further atom. :meth:`for_theta` picks the smallest truncation with
    expected leftover ``(theta / (theta + 1))**N`` at most ``remainder_tol``.
    """

    truncation: int
    remainder_tol: float = 1e-6

    def __post_init__(self):
        if self.truncation < 1:
            raise PreconditionError("truncation must be at least 1")
        if not 0 < self.remainder_tol < 1:
            raise PreconditionError("remainder_tol must lie in (0, 1)")

    @classmethod
    def for_theta(cls, theta: float, remainder_tol: float = 1e-6) -> "StickBreakConfig":
        if not theta > 0:
            raise DomainError("theta must be positive")
        n = math.ceil(math.log(remainder_tol) / math.log(theta / (theta + 1.0)))
        return cls(max(1, n), remainder_tol)

    def covers(self, theta: float) -> bool:
        return (theta / (theta + 1.0)) ** self.truncation <= self.remainder_tol * (1 + 1e-12)


_CHUNK = 1 << 22


def stickbreak_mean_from(theta, draw_atoms, rng, size, cfg: Optional[StickBreakConfig] = None):
    """Truncated stick-breaking mean with a user supplied atom sampler.

    ``draw_atoms(gen, shape, rows)`` must return an array of ``shape`` whose row
    ``i`` holds iid atoms for output ``rows[i]``. This lets the base law vary
    from row to row, as needed for randomized skewness.
    """
    if not theta > 0:
        raise DomainError("theta must be positive")
    cfg = cfg or StickBreakConfig.for_theta(theta)
    gen = as_generator(rng)
    n = int(size)
    width = cfg.truncation + 1
    step = max(1, _CHUNK // width)
    out = np.empty(n)
    for start in range(0, n, step):
        stop = min(n, start + step)
        m = stop - start
        v = gen.beta(1.0, theta, (m, cfg.truncation))
        with np.errstate(divide="ignore"):
            # a stick of length one leaves nothing; log1p(-1) = -inf is intended
            log_left = np.cumsum(np.log1p(-v), axis=1)
        left = np.exp(log_left)
        weights = np.empty((m, width))
        weights[:, 0] = v[:, 0]
        weights[:, 1:-1] = v[:, 1:] * left[:, :-1]
        weights[:, -1] = left[:, -1]
        atoms = np.asarray(draw_atoms(gen, (m, width), np.arange(start, stop)), dtype=float)
        out[start:stop] = np.sum(weights * atoms, axis=1)
    return out


def sample_mean_stickbreak(mean, rng, size=None, cfg: Optional[StickBreakConfig] = None):
    """Draws of the Dirichlet mean ``M_theta(H)`` by truncated stick breaking.

    ``mean`` is a :class:`~gammatilt.dirichlet_mean.MeanFunctional` whose base
    exposes ``sample(gen, shape)``.
    """
    base = mean.base
    shape, scalar = _shape(size)
    n = int(np.prod(shape)) if shape else 1
    out = stickbreak_mean_from(mean.theta, lambda g, shp, rows: base.sample(g, shp),
                               rng, n, cfg)
    return _finish(out.reshape(shape), scalar)


def sample_xi_theta(theta, c, base, rng, size=None, cfg: Optional[StickBreakConfig] = None,
                    alpha: float = 1.0, max_proposals=None, return_acceptance=False):
    """Randomized skewness law with density proportional to ``(1-u)^theta``
    times the law of ``r M / (r M + 1)``, where ``r = c**alpha`` and ``M`` is
    the Dirichlet mean ``M_theta(base)``.

    Proposals from stick breaking are accepted with probability
    ``(1 - u)**theta``; the mean acceptance rate is ``E[(1 + r M)**-theta]``.
    """
    from .dirichlet_mean import MeanFunctional

    if not (theta > 0 and c > 0):
        raise DomainError("theta and c must be positive")
    rate_scale = c**alpha
    gen = as_generator(rng)
    shape, scalar = _shape(size)
    n = int(np.prod(shape)) if shape else 1
    budget = int(max_proposals) if max_proposals is not None else 200 * n + 10000
    mean = MeanFunctional(theta, base)
    kept, proposed, accepted = [], 0, 0
    while accepted < n:
        if proposed >= budget:
            raise SamplerError(f"xi sampler exceeded {budget} proposals")
        m = min(budget - proposed, max(1024, 2 * (n - accepted)))
        mm = rate_scale * sample_mean_stickbreak(mean, gen, m, cfg)
        u = mm / (mm + 1.0)
        ok = gen.random(m) < (1.0 - u) ** theta
        kept.append(u[ok])
        proposed += m
        accepted += int(ok.sum())
    out = np.concatenate(kept)[:n].reshape(shape)
    res = _finish(out, scalar)
    return (res, (accepted, proposed)) if return_acceptance else res
