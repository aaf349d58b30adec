"""Certified real-root finding for the trinomial families x**n ± p*x**e = m/2.

The derivative of ``f(x) = x**n + s*p*x**e - m/2`` (e = 1 or n-1) is a
binomial, so its real zeros are known in closed form.  Between consecutive
critical points f is strictly monotone; each sign change there brackets
exactly one root, and every real root is either such a sign change or an
exact zero at a critical point.  Brackets are refined by bisection with a
Newton step that is accepted only while it stays inside the bracket, which
keeps convergence unconditional.

Roots are binary64 floats; exact closed forms live in :mod:`goldmean.quadratics`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional

from .errors import DegenerateIdentity, NoConvergence, NoRealRoot
from .quadratics import Sign, sign_value
from .surds import _as_fraction

LowerExponent = Literal["one", "n_minus_one"]


@dataclass(frozen=True)
class TrinomialSpec:
    """The equation ``x**n + s*p*x**e = m/2``.

    ``lower_exponent`` selects e: ``"one"`` for the linear term family,
    ``"n_minus_one"`` for the x**(n-1) family.
    """

    n: int
    p: int = 1
    p_sign: Sign = "plus"
    m: int = 0
    lower_exponent: LowerExponent = "one"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if self.m < 0:
            raise ValueError("m must be >= 0")
        sign_value(self.p_sign)
        if self.lower_exponent not in ("one", "n_minus_one"):
            raise ValueError(
                f"lower_exponent must be 'one' or 'n_minus_one', got {self.lower_exponent!r}"
            )

    @property
    def signed_p(self) -> int:
        return sign_value(self.p_sign) * self.p

    @property
    def exponent(self) -> int:
        return 1 if self.lower_exponent == "one" else self.n - 1

    @property
    def rhs(self) -> Fraction:
        return Fraction(self.m, 2)


@dataclass(frozen=True)
class SolverConfig:
    """Refinement knobs.

    ``tolerance`` bounds the scaled residual |f(x)| / (1 + |x|**n);
    ``bracket_growth`` is the geometric factor for outward bracket search.
    """

    tolerance: float = 1e-12
    max_iterations: int = 200
    bracket_growth: float = 2.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.bracket_growth > 1:
            raise ValueError("bracket_growth must be > 1")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class RootRecord:
    """One certified root: value, enclosing bracket, |f(value)|, iterations.

    Roots known in closed form carry the degenerate bracket (value, value)
    and zero iterations.
    """

    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int


@dataclass(frozen=True)
class RootSet:
    """All real roots, ascending.  ``exhaustive`` asserts completeness."""

    roots: tuple[RootRecord, ...]
    exhaustive: bool = True

    @property
    def values(self) -> list[float]:
        return [r.value for r in self.roots]


class _Poly:
    """f(x) = x**n + c*x**e - rhs with float and exact evaluation."""

    __slots__ = ("n", "c", "e", "rhs", "_rhs_f")

    def __init__(self, n: int, c: int, e: int, rhs: Fraction):
        self.n = n
        self.c = c
        self.e = e
        self.rhs = rhs
        self._rhs_f = float(rhs)

    def __call__(self, x: float) -> float:
        return x ** self.n + self.c * x ** self.e - self._rhs_f

    def exact(self, x: Fraction) -> Fraction:
        return x ** self.n + self.c * x ** self.e - self.rhs

    def deriv(self, x: float) -> float:
        if self.e == 0:
            return self.n * x ** (self.n - 1)
        return self.n * x ** (self.n - 1) + self.c * self.e * x ** (self.e - 1)


def _sgn_f(value: float) -> int:
    return (value > 0.0) - (value < 0.0)


def _int_kth_root(m: int, k: int) -> Optional[int]:
    """Exact integer k-th root of m >= 0, or None."""
    if m < 2:
        return m
    r = round(m ** (1.0 / k))
    while r ** k > m:
        r -= 1
    while (r + 1) ** k <= m:
        r += 1
    return r if r ** k == m else None


def _fraction_kth_root(value: Fraction, k: int) -> Optional[Fraction]:
    """Exact k-th root of a non-negative Fraction, or None."""
    num = _int_kth_root(value.numerator, k)
    if num is None:
        return None
    den = _int_kth_root(value.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def _kth_root(value: Fraction, k: int) -> tuple[float, Optional[Fraction]]:
    """Real k-th root as (float, exact-if-rational).  Odd k accepts any sign."""
    negative = value < 0
    mag = -value if negative else value
    exact = _fraction_kth_root(mag, k)
    if exact is not None:
        exact = -exact if negative else exact
        return float(exact), exact
    approx = float(mag) ** (1.0 / k)
    return (-approx if negative else approx), None


def _critical_points(n: int, c: int, e: int) -> list[tuple[float, Optional[Fraction]]]:
    """Real zeros of f', ascending, with exact values where rational.

    f'(x) = n*x**(n-1) + c*e*x**(e-1) has at most two real zeros for these
    families, so f has at most three monotone pieces.
    """
    if e == 1:
        k = n - 1
        target = Fraction(-c, n)  # x**k = target
        if k % 2 == 1:
            return [_kth_root(target, k)]
        if target <= 0:
            return []
        pos_f, pos_x = _kth_root(target, k)
        neg_x = -pos_x if pos_x is not None else None
        return [(-pos_f, neg_x), (pos_f, pos_x)]
    # e = n - 1 >= 2: f' = x**(n-2) * (n*x + c*(n-1))
    star = Fraction(-c * (n - 1), n)
    points = [(float(star), star)]
    if n >= 3:
        points.append((0.0, Fraction(0)))
    points.sort(key=lambda pair: pair[0])
    return points


def _expand(poly: _Poly, anchor: float, direction: int, inner_sign: int,
            cfg: SolverConfig) -> float:
    """Walk outward geometrically until f changes sign (or hits zero)."""
    step = 1.0
    for _ in range(600):
        x = anchor + direction * step
        if _sgn_f(poly(x)) != inner_sign:
            return x
        step *= cfg.bracket_growth
    raise NoConvergence("outward bracket search failed")


def _pull_off(poly: _Poly, lo: float, hi: float) -> float:
    """Point strictly inside (lo, hi) where f keeps the sign of f(lo)."""
    s_lo = _sgn_f(poly(lo))
    width = hi - lo
    shrink = 0.5
    for _ in range(60):
        x = lo + width * shrink
        if _sgn_f(poly(x)) == s_lo:
            return x
        shrink *= 0.5
    return lo


def _seeds(n: int, c: int, e: int, rhs: Fraction,
           cfg: SolverConfig) -> tuple[list, list[tuple[float, float]]]:
    """Complete root isolation: (exact roots, sign-change brackets)."""
    if n == 1:
        if e == 1:
            coefficient = 1 + c
            if coefficient == 0:
                if rhs == 0:
                    raise DegenerateIdentity("0 = 0: every x solves the equation")
                raise DegenerateIdentity(f"0 = {rhs}: no x solves the equation")
            return [Fraction(rhs, coefficient)], []
        return [rhs - c], []

    poly = _Poly(n, c, e, rhs)
    exact_roots: list = []
    marks: list[tuple[float, int]] = []
    for fval, exact in _critical_points(n, c, e):
        if exact is not None:
            value = poly.exact(exact)
            s = (value > 0) - (value < 0)
            if s == 0:
                exact_roots.append(exact)
        else:
            value = poly(fval)
            if abs(value) <= cfg.tolerance * (1.0 + abs(fval) ** n):
                s = 0
                exact_roots.append(fval)
            else:
                s = _sgn_f(value)
        marks.append((fval, s))

    brackets: list[tuple[float, float]] = []
    if not marks:
        # no critical points: strictly increasing (n odd, c > 0, e = 1)
        at_zero = poly.exact(Fraction(0))
        if at_zero == 0:
            exact_roots.append(Fraction(0))
        elif at_zero < 0:
            brackets.append((0.0, _expand(poly, 0.0, +1, -1, cfg)))
        else:
            brackets.append((_expand(poly, 0.0, -1, +1, cfg), 0.0))
    else:
        left_infinity = 1 if n % 2 == 0 else -1
        first_x, first_s = marks[0]
        if first_s not in (0, left_infinity):
            brackets.append((_expand(poly, first_x, -1, first_s, cfg), first_x))
        for (xa, sa), (xb, sb) in zip(marks, marks[1:]):
            if sa != 0 and sb != 0 and sa != sb:
                brackets.append((xa, xb))
        last_x, last_s = marks[-1]
        if last_s not in (0, 1):
            brackets.append((last_x, _expand(poly, last_x, +1, last_s, cfg)))

    # roots are interior, so shared endpoints can be pulled apart
    for i in range(1, len(brackets)):
        lo, hi = brackets[i]
        if lo == brackets[i - 1][1]:
            brackets[i] = (_pull_off(poly, lo, hi), hi)
    return exact_roots, brackets


def _refine(poly: _Poly, lo: float, hi: float, cfg: SolverConfig) -> tuple[float, float, int]:
    """Hybrid bisection/Newton inside a sign-change bracket."""
    f_lo = poly(lo)
    if f_lo == 0.0:
        return lo, 0.0, 0
    if poly(hi) == 0.0:
        return hi, 0.0, 0
    negative_left = f_lo < 0.0
    x = 0.5 * (lo + hi)
    for iteration in range(1, cfg.max_iterations + 1):
        fx = poly(x)
        if abs(fx) <= cfg.tolerance * (1.0 + abs(x) ** poly.n):
            return x, abs(fx), iteration
        if (fx < 0.0) == negative_left:
            lo = x
        else:
            hi = x
        slope = poly.deriv(x)
        if slope != 0.0:
            candidate = x - fx / slope
            if lo < candidate < hi:
                x = candidate
                continue
        x = 0.5 * (lo + hi)
    raise NoConvergence(
        f"no root to tolerance {cfg.tolerance} within {cfg.max_iterations} iterations"
    )


def _solve(n: int, c: int, e: int, rhs: Fraction, cfg: SolverConfig) -> RootSet:
    exact_roots, brackets = _seeds(n, c, e, rhs, cfg)
    poly = _Poly(n, c, e, rhs)
    records = []
    for root in exact_roots:
        fv = float(root)
        records.append(RootRecord(fv, (fv, fv), abs(poly(fv)), 0))
    for lo, hi in brackets:
        value, residual, iterations = _refine(poly, lo, hi, cfg)
        records.append(RootRecord(value, (lo, hi), residual, iterations))
    records.sort(key=lambda record: record.value)
    for record in records:
        if record.residual > cfg.tolerance * (1.0 + abs(record.value) ** n):
            raise NoConvergence(f"residual contract violated at x = {record.value}")
    return RootSet(tuple(records), exhaustive=True)


def isolate_real_roots(spec: TrinomialSpec,
                       cfg: SolverConfig = DEFAULT_CONFIG) -> list[tuple[float, float]]:
    """Disjoint brackets, one per real root, covering every real root.

    Exactly-known roots (at critical points, or from the linear cases)
    appear as degenerate (value, value) brackets.
    """
    exact_roots, brackets = _seeds(spec.n, spec.signed_p, spec.exponent, spec.rhs, cfg)
    out = [(float(r), float(r)) for r in exact_roots] + brackets
    out.sort()
    return out


def solve_trinomial(spec: TrinomialSpec, cfg: SolverConfig = DEFAULT_CONFIG) -> RootSet:
    """Every real root of ``x**n + s*p*x**e = m/2``, certified.

    Raises :class:`DegenerateIdentity` when the x terms cancel (n = 1,
    minus sign, p = 1), since silence there would mask a modeling mistake.
    """
    return _solve(spec.n, spec.signed_p, spec.exponent, spec.rhs, cfg)


def solve_gm_general(n: int, m: int, cfg: SolverConfig = DEFAULT_CONFIG) -> RootSet:
    """Every real root of the generalized golden-mean equation ``x**n + x = m/2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    return solve_trinomial(TrinomialSpec(n=n, p=1, p_sign="plus", m=m), cfg)


def solve_stakhov(n: int, variant: str = "a", cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Unique non-negative root of ``x**n + x = 1`` (a) or ``x**n + x**(n-1) = 1`` (b).

    Both left sides are strictly increasing for x >= 0, so the root is
    unique; variant b at n = 1 degenerates to x + 1 = 1 with root 0.
    """
    if variant not in ("a", "b"):
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    lower: LowerExponent = "one" if variant == "a" else "n_minus_one"
    roots = solve_trinomial(
        TrinomialSpec(n=n, p=1, p_sign="plus", m=2, lower_exponent=lower), cfg
    )
    value = roots.roots[-1].value
    if value < 0:
        raise NoConvergence("expected a non-negative root")
    return value


def solve_euler(a, n: int, x, mode: str = "constrained",
                cfg: SolverConfig = DEFAULT_CONFIG) -> RootSet:
    """Solve ``(a + b**n)/n = x`` for b.

    direct mode: all real b with ``b**n = n*x - a`` (one or two values by
    parity; raises :class:`NoRealRoot` for an even n and negative target).

    constrained mode: sets a = b and solves ``b**n + b = n*x`` with the
    trinomial machinery; at n = 2, x = 1/2 this is exactly the golden-mean
    equation ``b**2 + b = 1``.
    """
    a = _as_fraction(a)
    x = _as_fraction(x)
    if n < 1:
        raise ValueError("n must be >= 1")
    if mode == "constrained":
        return _solve(n, 1, 1, n * x, cfg)
    if mode != "direct":
        raise ValueError(f"mode must be 'direct' or 'constrained', got {mode!r}")

    target = n * x - a
    if n % 2 == 0 and target < 0:
        raise NoRealRoot(f"b**{n} = {target} has no real solution")
    if target == 0:
        return RootSet((RootRecord(0.0, (0.0, 0.0), 0.0, 0),), exhaustive=True)

    magnitude = -target if target < 0 else target
    exact = _fraction_kth_root(magnitude, n)
    if exact is not None:
        root_f = float(exact)
        iterations = 0
    else:
        root_f, iterations = _float_kth_root(float(magnitude), n)
    target_f = float(target)

    def record(value: float) -> RootRecord:
        residual = abs(value ** n - target_f)
        return RootRecord(value, (value, value), residual, iterations)

    if n % 2 == 1:
        roots = (record(root_f if target > 0 else -root_f),)
    else:
        roots = (record(-root_f), record(root_f))
    return RootSet(roots, exhaustive=True)


def _float_kth_root(t: float, k: int) -> tuple[float, int]:
    """Newton-polished positive k-th root of t > 0."""
    r = t ** (1.0 / k)
    iterations = 0
    for _ in range(8):
        err = r ** k - t
        if err == 0.0:
            break
        step = err / (k * r ** (k - 1))
        nxt = r - step
        iterations += 1
        if nxt == r:
            break
        r = nxt
    return r, iterations
