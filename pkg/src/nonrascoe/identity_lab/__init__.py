"""Verification harness: series identities, finite identities and congruence scans."""

from .finite import (
    FINITE_IDENTITIES,
    PoleError,
    candidate_points,
    check_finite_identity,
    finite_grid,
    finite_ids,
    sample_points,
)
from .report import (
    CSV_COLUMNS,
    SCHEMA_VERSION,
    IdentityReport,
    reports_from_jsonl,
    reports_to_csv,
    reports_to_jsonl,
)
from .scans import (
    PUBLISHED_EXCEPTIONAL_M,
    Conjecture1Scan,
    beck_scan,
    convolution_congruences,
    j5_convolution,
    parity_scan,
    predicted_odd_support,
    scan_conjecture1,
    scan_lcong,
)
from .series_checks import (
    CATALOG,
    ORACLE_ORDER_CAP,
    UnknownIdentityError,
    catalog_ids,
    check_catalog,
    check_series_identity,
)

__all__ = [
    "CATALOG",
    "CSV_COLUMNS",
    "Conjecture1Scan",
    "FINITE_IDENTITIES",
    "IdentityReport",
    "ORACLE_ORDER_CAP",
    "PUBLISHED_EXCEPTIONAL_M",
    "PoleError",
    "SCHEMA_VERSION",
    "UnknownIdentityError",
    "beck_scan",
    "candidate_points",
    "catalog_ids",
    "check_catalog",
    "check_finite_identity",
    "check_series_identity",
    "convolution_congruences",
    "finite_grid",
    "finite_ids",
    "j5_convolution",
    "parity_scan",
    "predicted_odd_support",
    "reports_from_jsonl",
    "reports_to_csv",
    "reports_to_jsonl",
    "sample_points",
    "scan_conjecture1",
    "scan_lcong",
]
