"""Exact natural-number arithmetic primitives.

Coefficient values are plain Python ints, which are already
arbitrary-precision; everything here is total and subtraction-free.
A degree index may be any signed integer: out-of-range degrees give 0,
never an error.
"""

__all__ = ["binom", "binom_row", "nat_pow"]


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    Computed by the incremental product result * (n - i) // (i + 1),
    where every intermediate division is exact, so intermediates never
    exceed the final value times (n - i).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


_row_cache: dict[int, list[int]] = {}


def binom_row(n: int) -> list[int]:
    """The full row [C(n,0), ..., C(n,n)], cached.

    Hot path for the recurrence engine; callers must not mutate the
    returned list.
    """
    row = _row_cache.get(n)
    if row is None:
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        row = [1]
        for i in range(n):
            row.append(row[-1] * (n - i) // (i + 1))
        _row_cache[n] = row
    return row


def nat_pow(base: int, exp: int) -> int:
    """Exact base**exp for nonnegative integers; 0**0 = 1 by convention."""
    if base < 0:
        raise ValueError(f"base must be nonnegative, got {base}")
    if exp < 0:
        raise ValueError(f"exp must be nonnegative, got {exp}")
    return base**exp
