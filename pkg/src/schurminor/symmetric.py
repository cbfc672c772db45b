"""Elementary symmetric polynomials and the characteristic-polynomial expansion.

Two conventions live here.  ``elementary(n, k)`` is the usual
e-bar_k = sum of all k-fold products of distinct variables.  The signed
variant ``signed_elementary(n, k) = (-1)**(k-1) * elementary(n, k)`` is the
coefficient that appears when x_k**n is rewritten through lower powers
using prod(x - x_i) = 0; it is the entry type of the banded matrix in
:mod:`schurminor.jacobi_trudi`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly import MultiPoly


@dataclass(frozen=True)
class VariableSet:
    """The variable set x1..xn."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")


def _as_n(X) -> int:
    n = X.n if isinstance(X, VariableSet) else int(X)
    if n < 1:
        raise ValueError(f"need at least one variable, got n={n}")
    return n


@lru_cache(maxsize=None)
def _elementary_table(n: int) -> tuple[MultiPoly, ...]:
    # coefficients of t^k in prod_i (1 + x_i t), built one factor at a time
    table = [MultiPoly.const(n, 1)]
    for i in range(1, n + 1):
        xi = MultiPoly.var(n, i)
        nxt = list(table) + [MultiPoly.zero(n)]
        for k in range(1, len(nxt)):
            nxt[k] = nxt[k] + xi * table[k - 1]
        table = nxt
    return tuple(table)


def elementary(X, k: int) -> MultiPoly:
    """e-bar_k over x1..xn; zero for k > n."""
    n = _as_n(X)
    if k < 0:
        raise ValueError(f"negative degree k={k}")
    if k > n:
        return MultiPoly.zero(n)
    return _elementary_table(n)[k]


def signed_elementary(X, k: int) -> MultiPoly:
    """The signed elementary polynomial (-1)**(k-1) * e-bar_k, for 0 <= k <= n.

    At k = 0 this gives -1, which is exactly the sub-diagonal entry of the
    banded matrix.
    """
    n = _as_n(X)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    e = elementary(n, k)
    return e if k % 2 == 1 else -e


def banded_entry(n: int, m: int) -> MultiPoly:
    """Entry e_m of the banded matrix: signed e_m for 0 <= m <= n, else zero."""
    if 0 <= m <= n:
        return signed_elementary(n, m)
    return MultiPoly.zero(n)


def char_poly_coeffs(X) -> list[MultiPoly]:
    """Coefficients of prod_{i}(x - x_i) in ascending powers of x.

    The coefficient of x**i is (-1)**(n-i) * e-bar_{n-i}.
    """
    n = _as_n(X)
    out = []
    for i in range(n + 1):
        e = elementary(n, n - i)
        out.append(e if (n - i) % 2 == 0 else -e)
    return out


def verify_root_relation(X, k: int) -> bool:
    """Check x_k**n == sum_{i=1..n} (-1)**(n-i) e-bar_{n-i+1} x_k**(i-1) exactly."""
    n = _as_n(X)
    if not 1 <= k <= n:
        raise ValueError(f"variable index k={k} out of range 1..{n}")
    xk = MultiPoly.var(n, k)
    rhs = MultiPoly.zero(n)
    for i in range(1, n + 1):
        e = elementary(n, n - i + 1)
        term = e * xk ** (i - 1)
        rhs = rhs + (term if (n - i) % 2 == 0 else -term)
    return xk ** n == rhs
