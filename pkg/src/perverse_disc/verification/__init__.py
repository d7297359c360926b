"""Seeded verification suite over all certificates."""

from .suite import CHECK_NAMES, CheckResult, SuiteRunner, SuiteSummary, certify_a1_symmetry

__all__ = ["CHECK_NAMES", "CheckResult", "SuiteRunner", "SuiteSummary", "certify_a1_symmetry"]
