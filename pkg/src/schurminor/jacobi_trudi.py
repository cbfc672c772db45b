"""The banded matrix of signed elementary polynomials and its row minors.

``build_P(n, r)`` is the ``(n + r - 1) x r`` matrix with entry
``P[k, l] = e_{n-k+l}`` where ``e_0 = -1`` and ``e_m = 0`` outside ``0..n``.
Its first column reads ``e_n, e_{n-1}, ..., e_1, -1, 0, ...`` top to bottom
and every later column is the previous one shifted down a row.
"""

from __future__ import annotations

from typing import Sequence

from .matrix import (
    DEFAULT_COFACTOR_CAP,
    DeterminantCapError,
    PolyMatrix,
    det_bareiss,
    det_cofactor,
)
from .poly import MultiPoly
from .symmetric import banded_entry

__all__ = [
    "DEFAULT_COFACTOR_CAP",
    "DeterminantCapError",
    "build_P",
    "det_bareiss",
    "det_cofactor",
    "det_hessenberg",
    "hessenberg_rows",
    "minor_rows",
    "row_zero_pattern_check",
]


def build_P(n: int, r: int) -> PolyMatrix:
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    return PolyMatrix.from_rows(
        [[banded_entry(n, n - k + l) for l in range(1, r + 1)] for k in range(1, n + r)]
    )


def minor_rows(P: PolyMatrix, j_set: Sequence[int]) -> PolyMatrix:
    """The square minor of ``P`` on rows ``j_set`` (1-based, increasing)."""
    j_set = tuple(j_set)
    if len(j_set) != P.cols:
        raise ValueError(f"need {P.cols} rows for a square minor, got {len(j_set)}")
    if any(b <= a for a, b in zip(j_set, j_set[1:])):
        raise ValueError(f"row indices must be strictly increasing: {j_set}")
    return P.select_rows(j_set)


def hessenberg_rows(n: int, r: int) -> tuple[int, ...]:
    """Rows n..n+r-1: the minor with e_1 on the diagonal and -1 below it."""
    return tuple(range(n, n + r))


def det_hessenberg(n: int, r: int) -> MultiPoly:
    """Determinant of the Hessenberg-Toeplitz minor by its linear recurrence.

    D_0 = 1 and D_r = sum_{k=1}^{min(r, n)} e_k D_{r-k}.  For r > n every term
    is present; for r <= n the sum simply stops at k = r.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    D = [MultiPoly.const(n, 1)]
    es = [banded_entry(n, k) for k in range(n + 1)]
    for s in range(1, r + 1):
        acc = MultiPoly.zero(n)
        for k in range(1, min(s, n) + 1):
            acc = acc + es[k] * D[s - k]
        D.append(acc)
    return D[r]


def row_zero_pattern_check(n: int, r: int, j_set: Sequence[int]) -> bool:
    """True iff every entry of Q_r(j_set) matches the band rule.

    Entries with band index outside 0..n must vanish; entries on the e_0 band
    must be exactly -1; the rest must equal the signed elementary polynomial.
    """
    Q = minor_rows(build_P(n, r), j_set)
    minus_one = MultiPoly.const(n, -1)
    for a, j in enumerate(j_set, start=1):
        for l in range(1, r + 1):
            m = n - j + l
            entry = Q[a, l]
            if m < 0 or m > n:
                if not entry.is_zero():
                    return False
            elif m == 0:
                if entry != minus_one:
                    return False
            elif entry != banded_entry(n, m) or entry.is_zero():
                return False
    return True
