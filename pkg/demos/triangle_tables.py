"""Walk through the coefficient triangles and the recurrence breakdown.

Run: python3 demos/triangle_tables.py
"""

from polycoef import coeff, row, term_values

# The trinomial triangle: row n holds the coefficients of (1 + x + x^2)^n.
print("trinomial triangle, n = 0..6")
for n in range(7):
    print(" ", " ".join(str(c) for c in row(3, n).coeffs))

# Each m-term coefficient splits into binomials times (m-1)-term
# coefficients. The classic worked case: the central coefficient of
# (1 + x + x^2)^6 is 141 = 1*1 + 6*5 + 15*6 + 20*1.
print("\nsplitting coeff(3, 6, 6):")
for t in term_values(3, 6, 6):
    print(f"  C(6,{t.alpha}) * coeff(2,{t.alpha},{t.beta}) = {t.outer} * {t.inner} = {t.value}")
print("  sum =", coeff(3, 6, 6))

# The same engine handles any number of terms; degrees outside
# [0, (m-1)n] are simply zero.
print("\nquintinomial row n=3:", list(row(5, 3).coeffs))
print("coeff(5, 3, -2) =", coeff(5, 3, -2))
print("coeff(5, 3, 99) =", coeff(5, 3, 99))

# Values grow fast but stay exact.
print("\ncentral coefficient of (1+...+x^9)^50 has",
      coeff(10, 50, 225).bit_length(), "bits:")
print(coeff(10, 50, 225))
