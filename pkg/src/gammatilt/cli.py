"""Command-line interface: evaluate, sample and verify.

Usage::

    gammatilt pdf --family lamperti_occ --param alpha=0.5 --param p=0.5 --at 0.5
    gammatilt quantile --family lamperti_x --param alpha=0.5 --grid 0.1:0.9:5
    gammatilt sample --family linnik --param alpha=0.5 --param theta=1 --n 3 --seed 7
    gammatilt verify --filter 'thm41_*' --jobs 4

Exit codes: 0 success, 1 verification failure, 2 bad input,
3 numeric failure, 4 unsupported operation (including unknown families).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import catalog
from .dirichlet_mean import MeanFunctional
from .dist import Dist
from .errors import (DomainError, ModelError, PreconditionError, QuadratureError, SamplerError,
                     UnsupportedOperation)
from .lamperti import LampertiRatio, OccupationLaw
from .measures import base_from_name
from .samplers import RngState, sample_linnik, sample_stable, sample_tilted_linnik

__all__ = ["main", "main_exit", "build_dist", "parse_grid", "resolve_seed", "format_value", "CORE_FAMILIES",
           "EXIT_OK", "EXIT_VERIFY", "EXIT_SPEC", "EXIT_NUMERIC", "EXIT_UNSUPPORTED"]

EXIT_OK, EXIT_VERIFY, EXIT_SPEC, EXIT_NUMERIC, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4
SEED_ENV = "GGC_SEED"


class SpecError(ValueError):
    """Malformed command-line or spec-file input."""


class UnknownFamily(LookupError):
    """Family name not recognized."""


def format_value(v: float) -> str:
    """Fixed 15-significant-digit rendering, trailing zeros kept, independent of locale."""
    return format(float(v), "#.15g")


def parse_grid(text: str) -> np.ndarray:
    """``lo:hi:n`` to ``n`` equally spaced points (both ends included)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise SpecError(f"grid must look like lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise SpecError(f"grid must look like lo:hi:n, got {text!r}") from None
    if n < 1 or not (np.isfinite(lo) and np.isfinite(hi)):
        raise SpecError("grid needs finite ends and n >= 1")
    return np.linspace(lo, hi, n)


def _coerce(value):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str):
        try:
            return float(value)
        except ValueError:
            return value
    if isinstance(value, dict):
        return {k: _coerce(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_coerce(v) for v in value]
    raise SpecError(f"unsupported parameter value {value!r}")


def parse_params(pairs: Sequence[str]) -> Dict[str, object]:
    """``k=v`` pairs to a dict; values become floats when they parse as numbers."""
    out: Dict[str, object] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        key = key.strip()
        if not sep or not key:
            raise SpecError(f"parameter must look like key=value, got {pair!r}")
        out[key] = _coerce(value.strip())
    return out


def load_spec_file(path: str) -> Dict[str, object]:
    """Read a JSON document ``{"family": ..., "params": {...}}``."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError("spec file must hold a JSON object")
    unknown = set(doc) - {"family", "params"}
    if unknown:
        raise SpecError(f"spec file has unknown keys {sorted(unknown)}")
    params = doc.get("params", {})
    if not isinstance(params, dict):
        raise SpecError("spec file params must be an object")
    return {"family": doc.get("family"), "params": {k: _coerce(v) for k, v in params.items()}}


def _base_spec(params: Dict[str, object], key: str):
    """Collect ``key`` (a base name) and ``key.<param>`` entries into a base measure."""
    name = params.pop(key, None)
    sub = {k.split(".", 1)[1]: params.pop(k) for k in list(params) if k.startswith(key + ".")}
    if name is None:
        if sub:
            raise SpecError(f"{key}.* parameters given without {key}")
        return None
    if isinstance(name, dict):
        sub = {**{k: v for k, v in name.items() if k != "name"}, **sub}
        name = name.get("name")
    if not isinstance(name, str):
        raise SpecError(f"{key} must name a base measure")
    try:
        return base_from_name(name, **sub)
    except KeyError as exc:
        raise SpecError(f"base {name!r} needs parameter {exc}") from None
    except TypeError as exc:
        raise SpecError(f"base {name!r}: {exc}") from None


def _take(params, name, default=None):
    if name in params:
        v = params.pop(name)
    elif default is not None:
        v = default
    else:
        raise SpecError(f"missing parameter {name!r}")
    if not isinstance(v, float):
        raise SpecError(f"parameter {name!r} must be numeric")
    return v


def _sampler_only(name, draw, params):
    return Dist(name, (0.0, np.inf), sampler=draw, params=params)


def _linnik(p):
    a, t, b = _take(p, "alpha"), _take(p, "theta"), _take(p, "b", 1.0)
    return _sampler_only("linnik", lambda rng, n: sample_linnik(a, t, rng, n, b=b),
                         {"alpha": a, "theta": t, "b": b})


def _tilted_linnik(p):
    a, t = _take(p, "alpha"), _take(p, "theta")
    b, c = _take(p, "b", 1.0), _take(p, "c")
    return _sampler_only("tilted_linnik", lambda rng, n: sample_tilted_linnik(a, t, b, c, rng, n),
                         {"alpha": a, "theta": t, "b": b, "c": c})


def _stable(p):
    a = _take(p, "alpha")
    return _sampler_only("stable", lambda rng, n: sample_stable(a, rng, n), {"alpha": a})


def _mean(p):
    theta = _take(p, "theta")
    base = _base_spec(p, "base")
    if base is None:
        raise SpecError("family mean needs base=<name>")
    return MeanFunctional(theta, base).to_dist()


CORE_FAMILIES = {
    "lamperti_x": lambda p: LampertiRatio(_take(p, "alpha")).to_dist(),
    "lamperti_occ": lambda p: OccupationLaw(_take(p, "alpha"), _take(p, "p")).to_dist(),
    "linnik": _linnik,
    "tilted_linnik": _tilted_linnik,
    "stable": _stable,
    "mean": _mean,
}


def build_dist(family: Optional[str], params: Dict[str, object]) -> Dist:
    """Resolve a family name and parameters to a :class:`Dist`."""
    if not family:
        raise SpecError("no family given")
    params = dict(params)
    if family in CORE_FAMILIES:
        dist = CORE_FAMILIES[family](params)
        if params:
            raise SpecError(f"{family}: unknown parameters {sorted(params)}")
        return dist
    if family in catalog.catalog_ids("density"):
        H = _base_spec(params, "H")
        if H is not None:
            params["H"] = H
        for k, v in params.items():
            if k != "H" and not isinstance(v, float):
                raise SpecError(f"parameter {k!r} must be numeric")
        return catalog.catalog_density(family, **params)
    raise UnknownFamily(family)


def resolve_seed(flag: Optional[int], env: Optional[Dict[str, str]] = None) -> int:
    """Seed precedence: command-line flag, then ``GGC_SEED``, then 0."""
    if flag is not None:
        return int(flag)
    env = os.environ if env is None else env
    raw = env.get(SEED_ENV)
    if raw is None or raw.strip() == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _points(args) -> np.ndarray:
    pts: List[float] = []
    for a in args.at or []:
        try:
            pts.append(float(a))
        except ValueError:
            raise SpecError(f"--at expects a number, got {a!r}") from None
    if args.grid:
        pts.extend(parse_grid(args.grid).tolist())
    if not pts:
        raise SpecError("give evaluation points with --at or --grid")
    return np.asarray(pts, dtype=float)


def _spec_from_args(args):
    family, params = None, {}
    if args.spec_file:
        doc = load_spec_file(args.spec_file)
        family, params = doc["family"], dict(doc["params"])
    if args.family:
        family = args.family
    params.update(parse_params(args.param or []))
    return family, params


def _write_table(out, header, rows, no_header):
    if not no_header:
        out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(format_value(v) for v in row) + "\n")


def _cmd_eval(args, out):
    family, params = _spec_from_args(args)
    dist = build_dist(family, params)
    pts = _points(args)
    fn = {"pdf": dist.pdf, "cdf": dist.cdf, "quantile": dist.ppf}[args.command]
    values = [float(fn(float(x))) for x in pts]
    label = "u" if args.command == "quantile" else "x"
    _write_table(out, [label, args.command], zip(pts, values), args.no_header)
    return EXIT_OK


def _cmd_sample(args, out):
    family, params = _spec_from_args(args)
    if args.n is None or args.n < 1:
        raise SpecError("--n must be a positive integer")
    dist = build_dist(family, params)
    if not dist.has_sampler:
        raise UnsupportedOperation(f"{family} has no sampler")
    seed = resolve_seed(args.seed)
    gen = RngState(seed, RngState.stream_for(f"sample:{family}")).generator()
    for v in dist.rvs(gen, args.n):
        out.write(format_value(v) + "\n")
    return EXIT_OK


def _cmd_verify(args, out):
    from .verify import run_identity_suite, select_cases

    seed = resolve_seed(args.seed)
    if args.jobs < 1:
        raise SpecError("--jobs must be at least 1")
    if not select_cases(args.filter):
        raise SpecError(f"no identity case matches {args.filter!r}")
    reports = run_identity_suite(seed, pattern=args.filter, jobs=args.jobs, timings=args.timings)
    for rep in reports:
        out.write(rep.to_json() + "\n")
    failed = [r.id for r in reports if not r.passed]
    summary = f"{len(reports) - len(failed)}/{len(reports)} cases passed"
    if failed:
        summary += "; failed: " + ", ".join(failed)
    print(summary, file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def _add_spec_flags(p):
    p.add_argument("--family", help="core family or catalog id")
    p.add_argument("--param", action="append", metavar="K=V",
                   help="family parameter; repeatable; H=<base> and H.<k>=<v> set a base")
    p.add_argument("--spec-file", metavar="PATH",
                   help='JSON {"family": ..., "params": {...}}; flags override it')


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammatilt",
                                     description="Dirichlet means, Lamperti laws and gamma tilting.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("pdf", "cdf", "quantile"):
        p = sub.add_parser(name, help=f"tabulate the {name}")
        _add_spec_flags(p)
        p.add_argument("--at", action="append", metavar="X", help="evaluation point; repeatable")
        p.add_argument("--grid", metavar="LO:HI:N", help="equally spaced evaluation points")
        p.add_argument("--no-header", action="store_true", help="omit the CSV header")
    p = sub.add_parser("sample", help="draw values, one per line")
    _add_spec_flags(p)
    p.add_argument("--n", type=int, default=1, help="number of draws (default 1)")
    p.add_argument("--seed", type=int, help=f"seed; falls back to ${SEED_ENV}, then 0")
    p.add_argument("--no-header", action="store_true", help="accepted for symmetry; no header is written")
    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--filter", metavar="GLOB", help="only cases whose id matches")
    p.add_argument("--seed", type=int, help=f"master seed; falls back to ${SEED_ENV}, then 0")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true",
                   help="record wall-clock seconds (output is then not reproducible)")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Entry point; returns the process exit code."""
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage, matching the bad-input code
        return int(exc.code) if exc.code is not None else EXIT_OK
    handlers = {"pdf": _cmd_eval, "cdf": _cmd_eval, "quantile": _cmd_eval,
                "sample": _cmd_sample, "verify": _cmd_verify}
    try:
        return handlers[args.command](args, out)
    except UnknownFamily as exc:
        print(f"error: unknown family {exc.args[0]!r}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except UnsupportedOperation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (SpecError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (QuadratureError, SamplerError, ModelError, ArithmeticError, ValueError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main_exit() -> None:
    """Console-script wrapper that turns the return code into the process status."""
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
