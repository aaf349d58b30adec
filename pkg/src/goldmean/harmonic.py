"""The harmonic multiplication table and its diagonal doublets.

The size x size grid of products i*j repeats each value q = k(k+1) at the
two cells (k, k+1) and (k+1, k) flanking the main diagonal.  Those q are
exactly the integer metallic means, which :func:`cross_check_integer_means`
verifies against the quadratic solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CrossCheckFailed
from .quadratics import integer_metallic


@dataclass(frozen=True)
class HarmonicTable:
    """Multiplication grid: ``cells[i][j] == i * j``."""

    size: int
    cells: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DoubletReport:
    """One diagonal doublet: value q = k(k+1) at (k, k+1) and (k+1, k)."""

    k: int
    q: int
    positions: tuple[tuple[int, int], tuple[int, int]]


def build_table(size: int) -> HarmonicTable:
    if size < 1:
        raise ValueError("size must be >= 1")
    cells = tuple(tuple(i * j for j in range(size)) for i in range(size))
    return HarmonicTable(size, cells)


def find_doublets(table: HarmonicTable) -> list[DoubletReport]:
    """All diagonal doublets, ascending in q (one per k in 0..size-2).

    For k = 0 the doublet is the diagonal-adjacent pair (0,1)/(1,0) only,
    even though zero fills the whole first row and column.
    """
    out = []
    for k in range(table.size - 1):
        q = table.cells[k][k + 1]
        assert q == table.cells[k + 1][k] == k * (k + 1), "grid is not i*j"
        out.append(DoubletReport(k, q, ((k, k + 1), (k + 1, k))))
    return out


def key_rows(k_max: int) -> list[tuple[int, int, int]]:
    """Rows (k, k^2 + k, k*(k+1)) with the two expressions computed independently."""
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    out = []
    for k in range(k_max + 1):
        square_plus = k * k + k
        product = k * (k + 1)
        if square_plus != product:
            raise CrossCheckFailed(f"k^2 + k != k(k+1) at k = {k}")
        out.append((k, square_plus, product))
    return out


def cross_check_integer_means(table: HarmonicTable) -> list[tuple[int, tuple[int, int]]]:
    """Associate every doublet q with its integer metallic mean pair (k, k+1).

    Raises :class:`CrossCheckFailed` if the quadratic-side detection ever
    disagrees with the grid -- that would be an implementation bug, not a
    data condition.
    """
    out = []
    for report in find_doublets(table):
        pair = integer_metallic(report.q)
        if pair != (report.k, report.k + 1):
            raise CrossCheckFailed(
                f"doublet q = {report.q} maps to {pair}, expected {(report.k, report.k + 1)}"
            )
        out.append((report.q, pair))
    return out
