"""Integer triangle catalog.

Generates the Pythagorean triples with odd first cathetus (the Diophantus
triangles), the two-sided table of integer and non-integer golden-mean
solutions, the ``m += 4k`` recurrence connecting them, and classification
of value triples against the Fibonacci and Lucas sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .quadratics import generalized_gm

Side = Literal["left", "right"]


@dataclass(frozen=True)
class PythagoreanTriple:
    """Right triangle with odd first cathetus ``a`` and hypotenuse ``c = b + 1``."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.a % 2 == 0:
            raise ValueError("first cathetus must be a positive odd integer")
        if self.b < 0:
            raise ValueError("second cathetus must be non-negative")
        if self.c != self.b + 1:
            raise ValueError("hypotenuse must exceed the second cathetus by one")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(f"{self.a}^2 + {self.b}^2 != {self.c}^2")


def diophantus_triple(index: int) -> PythagoreanTriple:
    """Triple ``(2N+1, 2N(N+1), 2N(N+1)+1)`` for N = index.

    The first few are (1, 0, 1), (3, 4, 5), (5, 12, 13), ..., (13, 84, 85).
    """
    if index < 0:
        raise ValueError("index must be non-negative")
    b = 2 * index * (index + 1)
    return PythagoreanTriple(2 * index + 1, b, b + 1)


def four_k_sequence(count: int) -> list[int]:
    """The second-cathetus sequence 0, 4, 12, 24, 40, ...

    Built by the recurrence ``m_N = m_(N-1) + 4N`` and cross-checked
    against the closed form ``2N(N+1)`` term by term.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [0]
    for k in range(1, count):
        nxt = out[-1] + 4 * k
        assert nxt == 2 * k * (k + 1), "recurrence and closed form disagree"
        out.append(nxt)
    return out


@dataclass(frozen=True)
class TableOneRow:
    """One row of the two-sided solution table.

    left side:  m = 2N(N+1), h = m + 1, r = (2N+1)^2  (integer solutions)
    right side: m = N, h = N + 1, r = 2N + 1           (roots of x^2 + x = m/2)

    Both sides satisfy the triangle identity h^2 = m^2 + r, i.e.
    (sqrt(r), m, h) is a right triangle.
    """

    side: Side
    index: int
    m: int
    h: int
    r: int

    def __post_init__(self):
        if self.h * self.h != self.m * self.m + self.r:
            raise ValueError(f"h^2 != m^2 + r for row {self.index} ({self.side})")


def _left_row(index: int) -> TableOneRow:
    m = 2 * index * (index + 1)
    return TableOneRow("left", index, m, m + 1, (2 * index + 1) ** 2)


def _right_row(index: int) -> TableOneRow:
    row = TableOneRow("right", index, index, index + 1, 2 * index + 1)
    # the roots of x^2 + x = m/2 must reproduce the h and r columns exactly
    pair = generalized_gm(index)
    assert pair.x1 ** 2 + pair.x2 ** 2 == row.h, "x1^2 + x2^2 != h"
    assert (abs(pair.x1) + abs(pair.x2)) ** 2 == row.r, "(|x1| + |x2|)^2 != r"
    return row


def table_one(rows: int, side: str = "both") -> list[TableOneRow]:
    """Rows 0..rows-1 of the solution table for the requested side(s).

    With ``side="both"`` the left and right rows are interleaved per index,
    matching the side-by-side layout of the printed table.
    """
    if rows < 1:
        raise ValueError("rows must be >= 1")
    if side not in ("left", "right", "both"):
        raise ValueError(f"side must be 'left', 'right' or 'both', got {side!r}")
    out: list[TableOneRow] = []
    for index in range(rows):
        if side in ("left", "both"):
            out.append(_left_row(index))
        if side in ("right", "both"):
            out.append(_right_row(index))
    return out


def left_to_right_index(index: int) -> int:
    """Right-side row M = 2N(N+1) carrying the same triangle as left row N.

    Checked on the spot: the mapped right row agrees with the left row in
    (m, h) and in r, and the left r is the square of the right r at the
    *same* index N (left sqrt(r) ranges over odd integers' squares while
    the right one ranges over all odd integers).
    """
    if index < 0:
        raise ValueError("index must be non-negative")
    mapped = 2 * index * (index + 1)
    left = _left_row(index)
    right_at = _right_row(mapped)
    assert (right_at.m, right_at.h) == (left.m, left.h), "4k mapping broke m/h"
    assert right_at.r == left.r, "4k mapping broke r"
    assert left.r == _right_row(index).r ** 2, "left r is not the squared right r"
    return mapped


@dataclass(frozen=True)
class TripletClass:
    """Whether a value triple is three consecutive Fibonacci or Lucas numbers.

    ``member_indices`` gives the starting positions in the matched sequence
    (F0 = 0, F1 = 1; L0 = 2, L1 = 1).  Triples matching both sequences
    classify as fibonacci.
    """

    tag: Literal["fibonacci", "lucas", "neither"]
    member_indices: Optional[tuple[int, int, int]] = None


def _sequence_up_to(first: int, second: int, cap: int) -> list[int]:
    out = [first, second]
    while out[-1] <= cap:
        out.append(out[-1] + out[-2])
    return out


def _find_window(triple: tuple[int, int, int], seq: list[int]) -> Optional[int]:
    for i in range(len(seq) - 2):
        if (seq[i], seq[i + 1], seq[i + 2]) == triple:
            return i
    return None


def classify_triplet(triple) -> TripletClass:
    """Classify a triple of non-negative integers (taken in the given order)."""
    t = tuple(int(v) for v in triple)
    if len(t) != 3:
        raise ValueError("expected exactly three values")
    if any(v < 0 or v > 10 ** 18 for v in t):
        raise ValueError("values must be in 0..10^18")
    cap = max(t)
    at = _find_window(t, _sequence_up_to(0, 1, cap))
    if at is not None:
        return TripletClass("fibonacci", (at, at + 1, at + 2))
    at = _find_window(t, _sequence_up_to(2, 1, cap))
    if at is not None:
        return TripletClass("lucas", (at, at + 1, at + 2))
    return TripletClass("neither")
