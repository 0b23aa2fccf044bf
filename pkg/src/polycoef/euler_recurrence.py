"""Coefficient engine for (1 + x + ... + x^(m-1))^n.

Writes the m-term power as a binomial in disguise,
[1 + x*(1 + x + ... + x^(m-2))]^n, so the coefficient of x^lam splits
into a finite sum of binomials times (m-1)-term coefficients:

    coeff(m, n, lam) = sum over k of C(n, lam-k) * coeff(m-1, lam-k, k)

with coeff(2, n, lam) = C(n, lam) and coeff(1, n, lam) = 1 iff lam = 0.
Row symmetry coeff(m, n, lam) = coeff(m, n, (m-1)n - lam) lets every
query be canonicalized into the first half of the row, and a shared
memo table makes the recursion cheap across queries.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .densepoly import CoeffRow
from .numeric_core import binom_row

__all__ = [
    "MAX_TERMS",
    "CoeffKey",
    "MemoTable",
    "RecurrenceTerm",
    "canonical_degree",
    "coeff",
    "row",
    "term_values",
]

# Each recursion level drops m by one, so plain recursion is safe up to
# this many terms; beyond it we refuse rather than risk the stack.
MAX_TERMS = 64


class CoeffKey(NamedTuple):
    """Canonical (m, n, lambda) memo key; lambda is in the first half of the row."""

    terms_m: int
    power_n: int
    degree_lambda: int


# Values for a key are always equal, so duplicate inserts are benign;
# a plain dict is the single-threaded memo mode.
MemoTable = dict

MEMO_MODE = "single-threaded"


def canonical_degree(m: int, n: int, lam: int) -> Optional[int]:
    """Mirror lam into [0, (m-1)n/2]; None when the coefficient is zero."""
    top = (m - 1) * n
    if lam < 0 or lam > top:
        return None
    return lam if 2 * lam <= top else top - lam


def _check_args(m: int, n: int, max_terms: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > max_terms:
        raise ValueError(f"m={m} exceeds the recursion ceiling {max_terms}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def coeff(
    m: int,
    n: int,
    lam: int,
    memo: Optional[MemoTable] = None,
    max_terms: int = MAX_TERMS,
) -> int:
    """The coefficient of x^lam in (1 + x + ... + x^(m-1))^n, exactly.

    lam may be any integer; out-of-range degrees give 0. Pass a shared
    memo dict to reuse work across queries.
    """
    _check_args(m, n, max_terms)
    if memo is None:
        memo = {}
    return _coeff(m, n, lam, memo)


def _coeff(m: int, n: int, lam: int, memo: dict) -> int:
    top = (m - 1) * n
    if lam < 0 or lam > top:
        return 0
    if 2 * lam > top:
        lam = top - lam
    if m == 1 or n == 0:
        return 1  # lam is necessarily 0 here
    if m == 2:
        return binom_row(n)[lam]
    key = (m, n, lam)
    cached = memo.get(key)
    if cached is not None:
        return cached
    bn = binom_row(n)
    m1 = m - 1
    m2 = m - 2
    # alpha = lam - k must satisfy 0 <= alpha <= n, and the inner
    # coefficient vanishes once k > (m-2)*alpha, i.e. k > m2*lam/m1;
    # within these bounds every summand is nonzero.
    lo = max(0, lam - n)
    hi = (m2 * lam) // m1
    total = 0
    mget = memo.get
    if m1 == 2:
        for k in range(lo, hi + 1):
            a = lam - k
            ck = k if 2 * k <= a + a else a + a - k
            total += bn[a] * binom_row(a)[ck]
    else:
        for k in range(lo, hi + 1):
            a = lam - k
            ctop = m2 * a
            ck = k if 2 * k <= ctop else ctop - k
            inner = mget((m1, a, ck))
            if inner is None:
                inner = _coeff(m1, a, ck, memo)
            total += bn[a] * inner
    memo[key] = total
    return total


def row(
    m: int,
    n: int,
    memo: Optional[MemoTable] = None,
    max_terms: int = MAX_TERMS,
) -> CoeffRow:
    """The full coefficient row, computing only the first half and mirroring."""
    _check_args(m, n, max_terms)
    if memo is None:
        memo = {}
    top = (m - 1) * n
    half = [_coeff(m, n, lam, memo) for lam in range(top // 2 + 1)]
    mirror = half[: (top + 1) // 2]
    return CoeffRow(terms_m=m, power_n=n, coeffs=tuple(half + mirror[::-1]))


@dataclass(frozen=True)
class RecurrenceTerm:
    """One nonzero summand C(n, alpha) * coeff(m-1, alpha, beta), alpha + beta = lam."""

    alpha: int
    beta: int
    outer: int  # C(n, alpha)
    inner: int  # coeff(m-1, alpha, beta)

    @property
    def value(self) -> int:
        return self.outer * self.inner


def term_values(
    m: int,
    n: int,
    lam: int,
    memo: Optional[MemoTable] = None,
    max_terms: int = MAX_TERMS,
) -> list[RecurrenceTerm]:
    """The nonzero summands of coeff(m, n, lam), alpha descending from lam.

    Inspection/debug surface: the term values always sum to
    coeff(m, n, lam). Requires m >= 3 (below that the sum degenerates).
    """
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    _check_args(m, n, max_terms)
    if lam < 0:
        raise ValueError(f"lam must be >= 0, got {lam}")
    if memo is None:
        memo = {}
    if lam > (m - 1) * n:
        return []
    bn = binom_row(n)
    terms = []
    for k in range(max(0, lam - n), lam + 1):
        a = lam - k
        if k > (m - 2) * a:
            continue
        terms.append(RecurrenceTerm(alpha=a, beta=k, outer=bn[a], inner=_coeff(m - 1, a, k, memo)))
    return terms
