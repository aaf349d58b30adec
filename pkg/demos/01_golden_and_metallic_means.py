"""
Golden means, generalized golden means, and the metallic family
===============================================================

The classic golden mean is the positive root of x^2 + x = 1.  Allowing
any right-hand side m/2 gives a whole family whose roots are
(-1 ± sqrt(2m+1))/2, one "golden mean per square root" of each odd
integer.  Everything below is computed exactly and only rendered to
decimals at the end.
"""

from fractions import Fraction

from goldmean import (
    continued_fraction_of,
    generalized_gm,
    integer_metallic,
    metallic_mean,
    to_decimal,
)

print("Generalized golden means: x^2 + x = m/2")
print(f"{'m':>3} {'x1 (exact)':>16} {'x1 (decimal)':>14} {'x2 (decimal)':>14} {'r':>4}")
for m in range(0, 8):
    pair = generalized_gm(m)
    r = 2 * m + 1
    print(f"{m:>3} {str(pair.x1):>16} {to_decimal(pair.x1, 10):>14}"
          f" {to_decimal(pair.x2, 10):>14} {r:>4}")

print()
print("m = 2 is the golden mean itself:")
golden = generalized_gm(2).x1
print(f"  x1 = {golden} = {to_decimal(golden, 30)}")

# The metallic family comes from the sign flip x^2 - p*x - q = 0.  Its
# members have beautifully regular continued fractions: [p; p, p, ...]
# whenever q = 1.
print()
print("Metallic means: positive root of x^2 - p*x - q = 0")
named = {(1, 1): "golden", (2, 1): "silver", (3, 1): "bronze",
         (1, 2): "copper", (1, 3): "nickel"}
for (p, q), name in named.items():
    mean = metallic_mean(p, q)
    cf = continued_fraction_of(mean, 50)
    print(f"  p={p} q={q} ({name:>6}): {str(mean):>12} = {to_decimal(mean, 12)}  cf {cf}")

print()
print("Integer metallic means appear exactly at q = k(k+1):")
for q in range(0, 31):
    pair = integer_metallic(q)
    if pair is not None:
        print(f"  q={q:>2}: root magnitudes {pair}, mean = {metallic_mean(1, q)}")

# Rational q values work too; q = 1/2 gives the sqrt(3) flavor.
print()
half = metallic_mean(1, Fraction(1, 2))
print(f"q = 1/2: {half} = {to_decimal(half, 12)}")
