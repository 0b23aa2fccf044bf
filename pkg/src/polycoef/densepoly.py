"""Dense univariate polynomials over nonnegative integers.

A polynomial is a list of int coefficients indexed by degree, e.g.
[1, 2, 1] is 1 + 2x + x^2. The zero polynomial is [0]; otherwise the
last entry is nonzero. Multiplication is schoolbook convolution on
purpose: this module is the brute-force oracle against which the
recurrence engine is checked, so it has to be obviously correct.
"""

from dataclasses import dataclass
from typing import Literal, Optional

__all__ = ["CoeffRow", "all_ones", "mul", "pow_repeated", "pow_binary", "direct_row"]

PowMethod = Literal["repeated", "binary"]


@dataclass(frozen=True)
class CoeffRow:
    """One full expansion of (1 + x + ... + x^(m-1))^n.

    coeffs[lam] is the coefficient of x^lam; the length is always
    (m-1)*n + 1.
    """

    terms_m: int
    power_n: int
    coeffs: tuple[int, ...]

    @property
    def top_degree(self) -> int:
        return (self.terms_m - 1) * self.power_n

    def __post_init__(self) -> None:
        if self.terms_m < 1:
            raise ValueError(f"terms_m must be >= 1, got {self.terms_m}")
        if self.power_n < 0:
            raise ValueError(f"power_n must be >= 0, got {self.power_n}")
        if len(self.coeffs) != self.top_degree + 1:
            raise ValueError(
                f"expected {self.top_degree + 1} coefficients, got {len(self.coeffs)}"
            )


def all_ones(m: int) -> list[int]:
    """The base polynomial 1 + x + ... + x^(m-1): m coefficients, all 1."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return [1] * m


def _is_zero(p: list[int]) -> bool:
    return len(p) == 1 and p[0] == 0


def mul(a: list[int], b: list[int], ops: Optional[dict] = None) -> list[int]:
    """Schoolbook convolution c[k] = sum(a[i] * b[k-i]), exact.

    ops, when given, accumulates an operation count under "mul" for the
    benchmark harness.
    """
    if ops is not None:
        ops["mul"] = ops.get("mul", 0) + 1
    if _is_zero(a) or _is_zero(b):
        return [0]
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    return res


def pow_repeated(p: list[int], n: int, ops: Optional[dict] = None) -> list[int]:
    """p**n by n-1 successive multiplications; p**0 = [1]."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return [1]
    acc = list(p)
    for _ in range(n - 1):
        # base polynomial first: the smaller operand drives the outer loop
        acc = mul(p, acc, ops)
    return acc


def pow_binary(p: list[int], n: int, ops: Optional[dict] = None) -> list[int]:
    """p**n by square-and-multiply; same value as pow_repeated."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    result = [1]
    sq = list(p)
    while n:
        if n & 1:
            result = mul(result, sq, ops)
        n >>= 1
        if n:
            sq = mul(sq, sq, ops)
    return result


def direct_row(
    m: int, n: int, method: PowMethod = "repeated", ops: Optional[dict] = None
) -> CoeffRow:
    """Expand (1 + x + ... + x^(m-1))^n by actual polynomial powering."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    base = all_ones(m)
    if method == "repeated":
        coeffs = pow_repeated(base, n, ops)
    elif method == "binary":
        coeffs = pow_binary(base, n, ops)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CoeffRow(terms_m=m, power_n=n, coeffs=tuple(coeffs))
