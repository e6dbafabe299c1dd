"""Exact missing-integer statistics for partitions and overpartitions."""

from ._core import (
    check_preliminaries,
    crosscheck_missing_tables,
    crosscheck_nu_identity,
    crosscheck_one_double,
    enumerate_overpartitions,
    enumerate_partitions,
    gapfree,
    maex,
    mex,
    missing_count,
    missing_table,
    missing_values,
    nu_d_lt_k,
    one_missing,
    overpartition_count,
    parity_diff,
    partition_count,
    scan_bias,
    scan_bound_vs_distinct,
    stats,
    verify_mod3,
    verify_mod4,
)

__version__ = "0.1.0"

__all__ = [
    "check_preliminaries",
    "crosscheck_missing_tables",
    "crosscheck_nu_identity",
    "crosscheck_one_double",
    "enumerate_overpartitions",
    "enumerate_partitions",
    "gapfree",
    "maex",
    "mex",
    "missing_count",
    "missing_table",
    "missing_values",
    "nu_d_lt_k",
    "one_missing",
    "overpartition_count",
    "parity_diff",
    "partition_count",
    "scan_bias",
    "scan_bound_vs_distinct",
    "stats",
    "verify_mod3",
    "verify_mod4",
]
