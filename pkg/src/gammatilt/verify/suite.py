"""Running the identity suite and serializing its reports."""
from __future__ import annotations

import fnmatch
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional

from ..samplers import RngState
from .cases import CASES, IdentityCase, get_case

__all__ = ["VerifyReport", "run_case", "run_identity_suite", "select_cases", "REPORT_FIELDS"]

REPORT_FIELDS = ("id", "anchor", "method", "n", "statistic", "threshold", "pass", "seconds", "seed")


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one identity case. ``passed`` holds exactly when ``statistic <= threshold``."""

    id: str
    anchor: str
    method: str
    n: int
    statistic: float
    threshold: float
    passed: bool
    seconds: float
    seed: int
    error: Optional[str] = None

    def as_record(self) -> dict:
        rec = {"id": self.id, "anchor": self.anchor, "method": self.method, "n": self.n,
               "statistic": self.statistic, "threshold": self.threshold, "pass": self.passed,
               "seconds": self.seconds, "seed": self.seed}
        if self.error is not None:
            rec["error"] = self.error
        return rec

    def to_json(self) -> str:
        # NaN/inf statistics of failed cases serialize as strings to stay valid JSON
        rec = self.as_record()
        if rec["statistic"] != rec["statistic"] or rec["statistic"] in (float("inf"), -float("inf")):
            rec["statistic"] = str(rec["statistic"])
        return json.dumps(rec, allow_nan=False)


def run_case(case: IdentityCase, master_seed: int, timings: bool = False) -> VerifyReport:
    """Run one case on its own stream; any error becomes a failing report."""
    gen = RngState(master_seed, RngState.stream_for(case.id)).generator()
    start = time.perf_counter()
    error = None
    try:
        stat = case.run(gen)
    except Exception as exc:  # recorded, never propagated
        stat = float("nan")
        error = f"{type(exc).__name__}: {exc}"
    elapsed = round(time.perf_counter() - start, 3) if timings else 0.0
    passed = error is None and stat <= case.threshold
    return VerifyReport(case.id, case.anchor, case.method, case.n, stat, case.threshold,
                        bool(passed), elapsed, int(master_seed), error)


def _run_by_id(args):
    case_id, seed, timings = args
    return run_case(get_case(case_id), seed, timings)


def select_cases(pattern: Optional[str] = None) -> List[IdentityCase]:
    """Cases whose id matches the glob ``pattern`` (all when ``None``)."""
    if pattern is None:
        return list(CASES)
    return [c for c in CASES if fnmatch.fnmatchcase(c.id, pattern)]


def run_identity_suite(master_seed: int = 0, pattern: Optional[str] = None, jobs: int = 1,
                       timings: bool = False, cases: Optional[Iterable[IdentityCase]] = None
                       ) -> List[VerifyReport]:
    """Run the selected cases and return their reports sorted by case id.

    Every case draws from ``RngState(master_seed, stream_for(id))`` so the
    reports do not depend on ``jobs`` or on scheduling order. Wall-clock
    ``seconds`` are recorded only when ``timings`` is set, which keeps the
    default output byte-identical across runs.
    """
    chosen = list(cases) if cases is not None else select_cases(pattern)
    if jobs <= 1 or len(chosen) <= 1:
        reports = [run_case(c, master_seed, timings) for c in chosen]
    else:
        ids = [c.id for c in chosen]
        # workers rebuild cases from the registry, so only registered ids run in parallel
        with ProcessPoolExecutor(max_workers=min(jobs, len(ids))) as pool:
            reports = list(pool.map(_run_by_id, [(i, master_seed, timings) for i in ids]))
    return sorted(reports, key=lambda r: r.id)
