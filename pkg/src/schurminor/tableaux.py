"""Schur polynomials from semistandard Young tableaux.

This is the independent oracle: no determinants anywhere, just exhaustive
enumeration of fillings and their content monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition
from .poly import MultiPoly

MAX_CELLS = 12
MAX_VARS = 5


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    entries: tuple[tuple[int, ...], ...]

    def content(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for row in self.entries:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for row in self.entries:
            if any(b < a for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(self.entries, self.entries[1:]):
            if any(b <= a for a, b in zip(upper, lower)):
                return False
        return True


def _check_caps(shape: Partition, n: int, max_cells: int) -> None:
    if shape.size() > max_cells:
        raise OracleCapError(f"|shape| = {shape.size()} exceeds the {max_cells}-cell cap")
    if n > MAX_VARS:
        raise OracleCapError(f"n = {n} exceeds the {MAX_VARS}-variable cap")


def enumerate_ssyt(shape: Partition, n: int, max_cells: int = MAX_CELLS) -> Iterator[Tableau]:
    """Every semistandard filling of ``shape`` with values 1..n, each once.

    Cells are filled in row-major order.  Nothing is yielded when the shape
    has more than ``n`` rows.
    """
    _check_caps(shape, n, max_cells)
    parts = shape.parts
    if len(parts) > n:
        return
    cells = [(i, j) for i, length in enumerate(parts) for j in range(length)]
    grid = [[0] * length for length in parts]

    def fill(idx: int):
        if idx == len(cells):
            yield Tableau(shape, tuple(tuple(row) for row in grid))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # leave room for the strictly increasing cells below in this column
        below = sum(1 for length in parts[i + 1:] if length > j)
        for v in range(lo, n - below + 1):
            grid[i][j] = v
            yield from fill(idx + 1)
        grid[i][j] = 0

    yield from fill(0)


def schur_tableaux(shape: Partition, n: int, max_cells: int = MAX_CELLS) -> MultiPoly:
    """Sum of x^content(T) over all semistandard tableaux T of ``shape``."""
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(shape, n, max_cells):
        c = t.content(n)
        terms[c] = terms.get(c, 0) + 1
    return MultiPoly(n, terms)
