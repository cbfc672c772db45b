"""Extended Vandermonde matrices and their maximal minors.

The extended matrix has ``n`` rows and ``n + r`` columns, entry ``(k, c)``
equal to ``x_k^(c-1)``.  A :class:`ColumnSelection` picks ``n - 1`` of the
first ``n + r - 1`` columns (the *i-set*) and always keeps the last column;
the unpicked columns form the *j-set*.  All column indices are 1-based
because the sign formulas sum them directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .matrix import PolyMatrix, det_cofactor
from .poly import MultiPoly
from .symmetric import signed_elementary


class SelectionError(ValueError):
    pass


@dataclass(frozen=True)
class ColumnSelection:
    n: int
    r: int
    i_set: tuple[int, ...]
    j_set: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n, r = self.n, self.r
        if n < 1:
            raise SelectionError(f"n must be >= 1, got {n}")
        if r < 1:
            raise SelectionError(f"r must be >= 1, got {r}")
        i_set = tuple(int(i) for i in self.i_set)
        if len(i_set) != n - 1:
            raise SelectionError(f"i_set must have {n - 1} elements, got {len(i_set)}")
        if any(b <= a for a, b in zip(i_set, i_set[1:])):
            raise SelectionError(f"i_set must be strictly increasing: {i_set}")
        if i_set and not (1 <= i_set[0] and i_set[-1] <= n + r - 1):
            raise SelectionError(f"i_set {i_set} leaves the range 1..{n + r - 1}")
        chosen = set(i_set)
        object.__setattr__(self, "i_set", i_set)
        object.__setattr__(
            self, "j_set", tuple(j for j in range(1, n + r) if j not in chosen)
        )

    @classmethod
    def from_j_set(cls, n: int, r: int, j_set: Sequence[int]) -> "ColumnSelection":
        js = set(j_set)
        if len(js) != r or not js <= set(range(1, n + r)):
            raise SelectionError(f"j_set {tuple(j_set)} is not an r={r} subset of 1..{n + r - 1}")
        return cls(n, r, tuple(i for i in range(1, n + r) if i not in js))

    @property
    def columns(self) -> tuple[int, ...]:
        return self.i_set + (self.n + self.r,)

    def sort_key(self) -> tuple:
        return (self.n, self.r, self.i_set)


def all_selections(n: int, r: int) -> Iterator[ColumnSelection]:
    """Every selection for (n, r), in lexicographic order of i-sets."""
    for i_set in combinations(range(1, n + r), n - 1):
        yield ColumnSelection(n, r, i_set)


def build_extended(n: int, r: int) -> PolyMatrix:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    xs = [MultiPoly.var(n, k) for k in range(1, n + 1)]
    return PolyMatrix.from_rows([[x ** (c - 1) for c in range(1, n + r + 1)] for x in xs])


def minor_matrix(sel: ColumnSelection) -> PolyMatrix:
    """The n x n matrix on columns i_1, ..., i_{n-1}, n + r."""
    return build_extended(sel.n, sel.r).select_columns(sel.columns)


def sgn_from_i(sel: ColumnSelection) -> int:
    """(-1)^(n(n-1)/2 + i_1 + ... + i_{n-1})."""
    e = sel.n * (sel.n - 1) // 2 + sum(sel.i_set)
    return -1 if e % 2 else 1


def sgn_from_j(sel: ColumnSelection) -> int:
    """(-1)^(n r + r(r-1)/2 + j_1 + ... + j_r)."""
    e = sel.n * sel.r + sel.r * (sel.r - 1) // 2 + sum(sel.j_set)
    return -1 if e % 2 else 1


def vandermonde_det(n: int) -> MultiPoly:
    """prod_{1 <= i < j <= n} (x_j - x_i)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    xs = [MultiPoly.var(n, k) for k in range(1, n + 1)]
    out = MultiPoly.const(n, 1)
    for j in range(n):
        for i in range(j):
            out = out * (xs[j] - xs[i])
    return out


def vandermonde_det_checked(n: int) -> MultiPoly:
    closed = vandermonde_det(n)
    if closed != det_cofactor(build_extended(n, 0)):
        raise AssertionError(f"closed-form Vandermonde determinant disagrees at n={n}")
    return closed


def verify_column_relation(n: int, r: int, p: int) -> bool:
    """Check K_{n+p} == sum_{i=1..n} e_{n-i+1} K_{i+p-1} entry by entry.

    The sum is taken over *all* preceding columns, with zero coefficient on
    those the relation does not mention.
    """
    if not 1 <= p <= r:
        raise ValueError(f"p={p} out of range 1..{r}")
    V = build_extended(n, r)
    target = n + p
    coeffs = [MultiPoly.zero(n) for _ in range(target - 1)]
    for i in range(1, n + 1):
        coeffs[i + p - 2] = signed_elementary(n, n - i + 1)
    for k in range(1, n + 1):
        combo = MultiPoly.zero(n)
        for c, coef in enumerate(coeffs, start=1):
            if coef:
                combo = combo + coef * V[k, c]
        if combo != V[k, target]:
            return False
    return True
