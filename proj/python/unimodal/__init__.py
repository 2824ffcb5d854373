"""Exact q-series expansions, enumerators and identity checks for unimodal sequences."""

from ._core import (
    ENUMERATION_LIMIT,
    UnimodalError,
    count,
    count_by_rank,
    exact_counts,
    expand,
    families,
    identity_keys,
    parity_scan,
    ratio_report,
    rep_count,
    series_keys,
    verify,
    verify_all,
)

__all__ = [
    "ENUMERATION_LIMIT",
    "UnimodalError",
    "count",
    "count_by_rank",
    "exact_counts",
    "expand",
    "families",
    "identity_keys",
    "parity_scan",
    "ratio_report",
    "rep_count",
    "series_keys",
    "verify",
    "verify_all",
]
