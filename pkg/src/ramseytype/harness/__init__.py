"""ramseytype Harness - Exhaustive and Randomized Verification.

    enumeration     isomorphism classes of small graphs
    checks          invariant check registry
    scan            corpus scans
    extremal        extremal tables over family-free graphs
    certify         small Ramsey certificate and shape thresholds
    random_graphs   seeded random instances
    workers         ordered worker pool and progress bars
"""

from .certify import SmallRamseyCertificate, certify_small_ramsey, estimate_n0
from .checks import CHECK_IDS, CHECKS, resolve_checks, run_check
from .enumeration import class_count, enumerate_graphs
from .extremal import ExtremalRow, ExtremalTable, extremal_search
from .scan import CorpusReport, GraphRecord, Violation, scan_corpus

__all__ = [
    "CHECKS",
    "CHECK_IDS",
    "CorpusReport",
    "ExtremalRow",
    "ExtremalTable",
    "GraphRecord",
    "SmallRamseyCertificate",
    "Violation",
    "certify_small_ramsey",
    "class_count",
    "enumerate_graphs",
    "estimate_n0",
    "extremal_search",
    "resolve_checks",
    "run_check",
    "scan_corpus",
]
