"""
Trinomial generalizations and the "divine equation"
===================================================

Raising the exponent gives x^n + x = m/2; adding a coefficient gives
x^n ± p*x = m/2, which unifies the exponent ladder with the metallic
family.  The solver isolates every real root from the derivative's sign
pattern and refines with bracketed Newton steps, so each root comes with
a bracket and a certified residual.
"""

from fractions import Fraction

from goldmean import (
    TrinomialSpec,
    isolate_real_roots,
    solve_euler,
    solve_gm_general,
    solve_stakhov,
    solve_trinomial,
)

print("x^n + x = 1 for growing n (the positive roots creep toward 1):")
for n in range(1, 8):
    print(f"  n={n}: x = {solve_stakhov(n, 'a'):.15f}")

print()
print("x^n + x^(n-1) = 1, the sister family:")
for n in range(1, 8):
    print(f"  n={n}: x = {solve_stakhov(n, 'b'):.15f}")

print()
spec = TrinomialSpec(n=3, p=3, p_sign="minus", m=1)
print(f"All real roots of x^3 - 3x = 1/2, with isolation brackets:")
for (lo, hi), record in zip(isolate_real_roots(spec), solve_trinomial(spec).roots):
    print(f"  bracket [{lo:+.4f}, {hi:+.4f}] -> x = {record.value:+.15f}"
          f"  residual {record.residual:.2e} after {record.iterations} iterations")

print()
print("A double root sits exactly on a critical point and is found exactly:")
spec = TrinomialSpec(n=3, p=3, p_sign="minus", m=4)  # x^3 - 3x - 2 = (x+1)^2 (x-2)
for record in solve_trinomial(spec).roots:
    print(f"  x = {record.value:+g}  residual {record.residual:g}")

print()
print('Euler\'s riddle "(a + b^n)/n = x" in both readings:')
roots = solve_euler(0, 2, Fraction(1, 2), "constrained")
print(f"  constrained (a = b), n=2, x=1/2: b = {roots.roots[-1].value:.15f}"
      "  <- the golden mean again")
roots = solve_euler(1, 2, 1, "direct")
print(f"  direct, a=1, n=2, x=1: b in {roots.values}")
roots = solve_euler(2, 3, 1, "direct")
print(f"  direct, a=2, n=3, x=1: b in {roots.values}")

print()
print("Cross-check: the n=2 member agrees with the closed form:")
numeric = solve_gm_general(2, 2).roots[-1].value
print(f"  numeric {numeric:.15f} vs (sqrt(5)-1)/2 = {(5 ** 0.5 - 1) / 2:.15f}")
