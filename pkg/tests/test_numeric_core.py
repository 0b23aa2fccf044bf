import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycoef.numeric_core import binom, binom_row, nat_pow


def test_binom_examples():
    assert binom(6, 3) == 20
    assert binom(4, 7) == 0
    for n in (0, 1, 5, 40):
        assert binom(n, 0) == 1
        assert binom(n, n) == 1


def test_binom_zero_outside_range():
    assert binom(5, -1) == 0
    assert binom(5, -100) == 0
    assert binom(5, 6) == 0
    assert binom(0, 1) == 0


def test_binom_rejects_negative_n():
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_binom_matches_stdlib_comb():
    for n in range(65):
        for k in range(n + 1):
            assert binom(n, k) == math.comb(n, k)


def test_pascal_identity():
    for n in range(1, 65):
        for k in range(n + 1):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


def test_symmetry_and_row_sum():
    for n in range(65):
        assert sum(binom(n, k) for k in range(n + 1)) == 2**n
        for k in range(n + 1):
            assert binom(n, k) == binom(n, n - k)


def test_binom_row_matches_binom():
    for n in range(40):
        assert binom_row(n) == [binom(n, k) for k in range(n + 1)]


def test_decimal_round_trip():
    for v in (0, 1, 7, binom(200, 100), nat_pow(3, 500)):
        assert int(str(v)) == v
        assert "e" not in str(v) and "," not in str(v)


def _double_decimal(s: str) -> str:
    # schoolbook doubling of a decimal string, digit by digit
    carry = 0
    out = []
    for d in reversed(s):
        t = int(d) * 2 + carry
        out.append(str(t % 10))
        carry = t // 10
    if carry:
        out.append(str(carry))
    return "".join(reversed(out))


def test_nat_pow_examples():
    assert nat_pow(3, 6) == 729
    assert nat_pow(5, 0) == 1
    assert nat_pow(0, 0) == 1
    assert nat_pow(0, 5) == 0
    expected = "1"
    for _ in range(64):
        expected = _double_decimal(expected)
    assert expected == "18446744073709551616"
    assert nat_pow(2, 64) == int(expected)


def test_nat_pow_rejects_negative():
    with pytest.raises(ValueError):
        nat_pow(-2, 3)
    with pytest.raises(ValueError):
        nat_pow(2, -3)


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=-10, max_value=210))
def test_binom_total_and_exact(n, k):
    v = binom(n, k)
    assert v >= 0
    if 0 <= k <= n:
        assert v == math.comb(n, k)
    else:
        assert v == 0
