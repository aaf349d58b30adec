"""Closed-form exact solutions of x**2 + s*p*x - q = 0.

Covers the golden-mean branch (``s = +1``, roots ``(-p ± sqrt(p^2+4q))/2``),
its generalization to ``q = m/2``, the metallic-means branch (``s = -1``),
and detection of the integer metallic means ``q = k(k+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Literal, Optional

from .errors import NoRealRoots
from .surds import QuadraticSurd, _as_fraction

Sign = Literal["plus", "minus"]

_SIGN_VALUES = {"plus": 1, "minus": -1}


def sign_value(p_sign: str) -> int:
    """Map 'plus'/'minus' to +1/-1."""
    try:
        return _SIGN_VALUES[p_sign]
    except KeyError:
        raise ValueError(f"p_sign must be 'plus' or 'minus', got {p_sign!r}") from None


@dataclass(frozen=True)
class QuadraticSpec:
    """The equation ``x**2 + s*p*x - q = 0`` with s = +1 ('plus') or -1 ('minus')."""

    p: int
    q: Fraction
    p_sign: Sign = "plus"

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be a positive integer")
        object.__setattr__(self, "q", _as_fraction(self.q))
        sign_value(self.p_sign)

    @property
    def sign(self) -> int:
        return sign_value(self.p_sign)


@dataclass(frozen=True)
class RootPair:
    """Both real roots, exact; ``x1`` is the algebraically larger one.

    ``discriminant`` is ``p^2 + 4q``.  For the generalized golden mean
    (p = 1, q = m/2) it equals the odd radicand 2m + 1 under the root.
    """

    x1: QuadraticSurd
    x2: QuadraticSurd
    discriminant: Fraction


def solve_quadratic(spec: QuadraticSpec) -> RootPair:
    """Exact roots ``(-s*p ± sqrt(p^2 + 4q)) / 2``.

    Raises :class:`NoRealRoots` when the discriminant is negative; equal
    roots are returned twice when it is zero.
    """
    s = spec.sign
    disc = Fraction(spec.p * spec.p) + 4 * spec.q
    if disc < 0:
        raise NoRealRoots(f"discriminant p^2 + 4q = {disc} is negative")
    half_root = QuadraticSurd.sqrt(disc) * Fraction(1, 2)
    base = QuadraticSurd(Fraction(-s * spec.p, 2))
    return RootPair(base + half_root, base - half_root, disc)


def generalized_gm(m: int) -> RootPair:
    """Roots of ``x**2 + x = m/2``, i.e. ``(-1 ± sqrt(2m+1)) / 2``.

    The pair's discriminant is exactly the odd integer ``2m + 1``.
    """
    if m < 0:
        raise ValueError("m must be a non-negative integer")
    return solve_quadratic(QuadraticSpec(1, Fraction(m, 2), "plus"))


def metallic_mean(p: int, q) -> QuadraticSurd:
    """Positive root of ``x**2 - p*x - q = 0``: ``(p + sqrt(p^2 + 4q)) / 2``.

    p = q = 1 gives the golden mean, (2, 1) the silver mean, (3, 1) the
    bronze mean, (1, 2) the copper mean, (1, 3) the nickel mean.
    """
    q = _as_fraction(q)
    if q < 0:
        raise ValueError("the metallic family takes q >= 0")
    return solve_quadratic(QuadraticSpec(p, q, "minus")).x1


def integer_metallic(q: int) -> Optional[tuple[int, int]]:
    """Detect an integer metallic mean.

    Returns ``(k, k+1)`` when ``q = k(k+1)`` -- the absolute values of the
    two roots of ``x**2 - x - q = 0`` -- and ``None`` otherwise.  The test
    is whether ``1 + 4q`` is a perfect (necessarily odd) square.
    """
    if q < 0:
        raise ValueError("q must be a non-negative integer")
    disc = 1 + 4 * q
    root = isqrt(disc)
    if root * root != disc:
        return None
    k = (root - 1) // 2
    return (k, k + 1)
