"""Exact coefficients of (1 + x + ... + x^(m-1))^n.

The engine reduces m-term coefficients to binomials through the
binomial-splitting recurrence (euler_recurrence); densepoly provides
the brute-force expansion oracle, verifier cross-checks both against
embedded historical fixtures, and cli exposes the command-line surface.
"""

from .densepoly import CoeffRow, all_ones, direct_row, mul, pow_binary, pow_repeated
from .euler_recurrence import CoeffKey, MemoTable, RecurrenceTerm, coeff, row, term_values
from .numeric_core import binom, nat_pow
from .verifier import (
    PaperFixture,
    VerificationReport,
    check_reduced_forms,
    check_row_invariants,
    cross_check,
    run_paper_fixtures,
)

__all__ = [
    "CoeffRow",
    "CoeffKey",
    "MemoTable",
    "PaperFixture",
    "RecurrenceTerm",
    "VerificationReport",
    "all_ones",
    "binom",
    "check_reduced_forms",
    "check_row_invariants",
    "coeff",
    "cross_check",
    "direct_row",
    "mul",
    "nat_pow",
    "pow_binary",
    "pow_repeated",
    "row",
    "run_paper_fixtures",
    "term_values",
]

__version__ = "0.1.0"
