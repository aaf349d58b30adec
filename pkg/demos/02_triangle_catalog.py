"""
The triangle catalog behind the generalized golden means
========================================================

For every row of the solution table, (sqrt(r), m, h) is a right triangle:
h^2 = m^2 + r.  On the left side those triangles are genuine Pythagorean
triples with odd first cathetus; on the right side they carry the
irrational roots.  The two sides are linked by the "+4k" recurrence.
"""

from goldmean import (
    classify_triplet,
    diophantus_triple,
    four_k_sequence,
    left_to_right_index,
    table_one,
)

print("Diophantus triples (odd cathetus, second cathetus, hypotenuse):")
for n in range(0, 7):
    t = diophantus_triple(n)
    print(f"  N={n}:  {t.c}^2 = {t.b}^2 + {t.a}^2"
          f"   ({t.c * t.c} = {t.b * t.b} + {t.a * t.a})")

print()
print("Second catheti follow m_N = m_(N-1) + 4N:")
seq = four_k_sequence(8)
steps = " -> ".join(str(v) for v in seq)
print(f"  {steps}")

print()
print("Solution table, both sides (m, h, r):")
print(f"{'N':>3} | {'left m':>7} {'left h':>7} {'left r':>7} | {'right m':>8} {'right h':>8} {'right r':>8}")
rows = table_one(7, "both")
for n in range(7):
    left, right = rows[2 * n], rows[2 * n + 1]
    print(f"{n:>3} | {left.m:>7} {left.h:>7} {left.r:>7} |"
          f" {right.m:>8} {right.h:>8} {right.r:>8}")

print()
print("Left row N reappears on the right at index 2N(N+1):")
for n in range(0, 5):
    print(f"  left {n} -> right {left_to_right_index(n)}")

print()
print("Right-side (m, h, r) triples against Fibonacci/Lucas:")
for row in table_one(6, "right"):
    triple = (row.m, row.h, row.r)
    result = classify_triplet(triple)
    where = f" at indices {result.member_indices}" if result.member_indices else ""
    print(f"  {triple} -> {result.tag}{where}")
