"""Dense matrices of polynomials and three exact determinant engines.

The engines are written against ring elements that support ``+ - *``; the
fraction-free engine also needs an exact-division callable.  That lets the
same code compute symbolic determinants over :class:`MultiPoly` and integer
determinants of evaluated matrices in numeric verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .poly import MultiPoly, from_json_obj, poly_exact_div, to_json_obj

DEFAULT_COFACTOR_CAP = 8


class DeterminantCapError(ValueError):
    """The cofactor engine was asked for a matrix larger than its cap."""


@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[MultiPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match declared shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[MultiPoly]]) -> "PolyMatrix":
        grid = tuple(tuple(r) for r in rows)
        ncols = len(grid[0]) if grid else 0
        return cls(len(grid), ncols, grid)

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], num_vars: int = 1) -> "PolyMatrix":
        return cls.from_rows([[MultiPoly.const(num_vars, v) for v in r] for r in rows])

    def __getitem__(self, rc: tuple[int, int]) -> MultiPoly:
        """1-based ``(row, col)`` access."""
        r, c = rc
        if not (1 <= r <= self.rows and 1 <= c <= self.cols):
            raise IndexError(f"({r}, {c}) outside {self.rows}x{self.cols}")
        return self.entries[r - 1][c - 1]

    def column(self, c: int) -> tuple[MultiPoly, ...]:
        return tuple(row[c - 1] for row in self.entries)

    def select_columns(self, cols: Sequence[int]) -> "PolyMatrix":
        for c in cols:
            if not 1 <= c <= self.cols:
                raise IndexError(f"column {c} outside 1..{self.cols}")
        return PolyMatrix.from_rows([[row[c - 1] for c in cols] for row in self.entries])

    def select_rows(self, rows: Sequence[int]) -> "PolyMatrix":
        for r in rows:
            if not 1 <= r <= self.rows:
                raise IndexError(f"row {r} outside 1..{self.rows}")
        return PolyMatrix(len(rows), self.cols, tuple(self.entries[r - 1] for r in rows))

    def map(self, fn: Callable[[MultiPoly], object]) -> list[list]:
        return [[fn(p) for p in row] for row in self.entries]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_json_obj(self) -> list:
        return [[to_json_obj(p) for p in row] for row in self.entries]

    @classmethod
    def from_json_obj(cls, obj: list) -> "PolyMatrix":
        return cls.from_rows([[from_json_obj(p) for p in row] for row in obj])

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(p) for p in row) + "]" for row in self.entries)


def _num_vars(A: PolyMatrix) -> int:
    for row in A.entries:
        for p in row:
            return p.num_vars
    return 0


def _require_square(A: PolyMatrix) -> None:
    if not A.is_square():
        raise ValueError(f"determinant of non-square {A.rows}x{A.cols} matrix")


def laplace_det(grid: Sequence[Sequence], zero, one):
    """Laplace expansion along successive rows.

    Minors are memoised on the set of remaining columns, so each distinct
    complementary minor is expanded once.
    """
    size = len(grid)
    if size == 0:
        return one
    memo: dict[int, object] = {}

    def minor(row: int, mask: int):
        # det of rows row.. and columns whose bit is set in mask
        if row == size:
            return one
        if mask in memo:
            return memo[mask]
        total = zero
        sign = 1
        for c in range(size):
            bit = 1 << c
            if not mask & bit:
                continue
            a = grid[row][c]
            if a:
                term = a * minor(row + 1, mask & ~bit)
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return minor(0, (1 << size) - 1)


def det_cofactor(A: PolyMatrix, cap: int = DEFAULT_COFACTOR_CAP) -> MultiPoly:
    """Reference determinant by cofactor expansion; refuses sizes above ``cap``."""
    _require_square(A)
    if A.rows > cap:
        raise DeterminantCapError(f"cofactor engine capped at {cap}x{cap}, got {A.rows}x{A.rows}")
    nv = _num_vars(A)
    return laplace_det(A.entries, MultiPoly.zero(nv), MultiPoly.const(nv, 1))


def bareiss_det(grid: Sequence[Sequence], exact_div: Callable, zero, one):
    """Fraction-free Gaussian elimination (Bareiss) over an integral domain.

    Rows are swapped to bring a nonzero pivot into place; a pivot column that
    is entirely zero means the determinant is zero.
    """
    m = [list(r) for r in grid]
    size = len(m)
    if size == 0:
        return one
    sign = 1
    prev = one
    for k in range(size - 1):
        if not m[k][k]:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, size):
                num = row_i[j] * pivot - mik * row_k[j]
                row_i[j] = exact_div(num, prev)
            row_i[k] = zero
        prev = pivot
    d = m[size - 1][size - 1]
    return d if sign > 0 else -d


def int_exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def det_bareiss(A: PolyMatrix) -> MultiPoly:
    """Determinant by fraction-free elimination with exact polynomial division."""
    _require_square(A)
    nv = _num_vars(A)
    return bareiss_det(A.entries, poly_exact_div, MultiPoly.zero(nv), MultiPoly.const(nv, 1))


def det_int(grid: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix."""
    return bareiss_det(grid, int_exact_div, 0, 1)
