"""Compare the three row strategies on growing inputs.

Run: python3 demos/strategy_benchmark.py

All three must agree entrywise; the interesting part is how the costs
diverge. The recurrence engine shines for single-coefficient queries,
binary powering for big full rows.
"""

import time

from polycoef import coeff, direct_row, row

CASES = [(3, 50), (5, 40), (8, 30), (10, 60)]

print(f"{'m':>3} {'n':>4} {'euler':>10} {'repeated':>10} {'binary':>10}  (full row, ms)")
for m, n in CASES:
    t0 = time.perf_counter()
    a = row(m, n).coeffs
    t1 = time.perf_counter()
    b = direct_row(m, n, "repeated").coeffs
    t2 = time.perf_counter()
    c = direct_row(m, n, "binary").coeffs
    t3 = time.perf_counter()
    assert a == b == c
    print(f"{m:>3} {n:>4} {1e3*(t1-t0):>10.2f} {1e3*(t2-t1):>10.2f} {1e3*(t3-t2):>10.2f}")

# Single central coefficient: the recurrence touches only the
# subproblems it needs, the polynomial strategies must build the row.
m, n = 3, 600
central = (m - 1) * n // 2
t0 = time.perf_counter()
v = coeff(m, n, central)
t1 = time.perf_counter()
w = direct_row(m, n, "binary").coeffs[central]
t2 = time.perf_counter()
assert v == w
print(f"\nsingle coeff({m},{n},{central}): recurrence {1e3*(t1-t0):.2f} ms,"
      f" binary row {1e3*(t2-t1):.2f} ms")
