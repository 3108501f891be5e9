"""Statistical verification of the distributional identities."""
from .cases import CASES, KS_THRESHOLD, SE_THRESHOLD, IdentityCase, case_ids, get_case
from .manifest import MANIFEST, OUT_OF_SCOPE, check_manifest
from .stats import (LAMBDA_GRID, MIN_SAMPLES, cumulative_cdf, interpolated_cdf, ks_two_sample,
                    ks_vs_cdf, transform_match)
from .suite import REPORT_FIELDS, VerifyReport, run_case, run_identity_suite, select_cases

__all__ = [
    "CASES", "KS_THRESHOLD", "SE_THRESHOLD", "IdentityCase", "case_ids", "get_case",
    "MANIFEST", "OUT_OF_SCOPE", "check_manifest",
    "LAMBDA_GRID", "MIN_SAMPLES", "cumulative_cdf", "interpolated_cdf", "ks_two_sample",
    "ks_vs_cdf", "transform_match",
    "REPORT_FIELDS", "VerifyReport", "run_case", "run_identity_suite", "select_cases",
]
