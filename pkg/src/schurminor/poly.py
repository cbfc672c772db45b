"""Exact sparse multivariate polynomials with integer coefficients.

A :class:`MultiPoly` maps exponent vectors (tuples of length ``num_vars``)
to nonzero Python integers.  Variables are named ``x1 .. x{num_vars}``.
The zero polynomial is the empty term map; ``num_vars`` is kept anyway so
that arithmetic between polynomials of different arity fails loudly.

Terms are always displayed and serialized in graded lexicographic order,
descending: total degree first, then lexicographic on the exponent vector.
"""

from __future__ import annotations

import json
import re
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def _grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("_nvars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, int] | None = None):
        if num_vars < 0:
            raise ValueError(f"num_vars must be non-negative, got {num_vars}")
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(a) for a in exp)
                if len(exp) != num_vars:
                    raise ValueError(
                        f"exponent {exp} has length {len(exp)}, expected {num_vars}"
                    )
                if any(a < 0 for a in exp):
                    raise ValueError(f"negative exponent in {exp}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
                c = clean.get(exp, 0) + c
                if c:
                    clean[exp] = c
                else:
                    clean.pop(exp, None)
        self._nvars = num_vars
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, num_vars: int, terms: dict[Exponent, int]) -> "MultiPoly":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._nvars = num_vars
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls._raw(num_vars, {})

    @classmethod
    def const(cls, num_vars: int, value: int) -> "MultiPoly":
        if value == 0:
            return cls._raw(num_vars, {})
        return cls._raw(num_vars, {(0,) * num_vars: int(value)})

    @classmethod
    def var(cls, num_vars: int, index: int) -> "MultiPoly":
        """The variable ``x{index}`` (1-based)."""
        if not 1 <= index <= num_vars:
            raise ValueError(f"variable index {index} out of range 1..{num_vars}")
        exp = [0] * num_vars
        exp[index - 1] = 1
        return cls._raw(num_vars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): coeff})

    # read-only views

    @property
    def num_vars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and (0,) * self._nvars in self._terms
        )

    def constant_value(self) -> int:
        return self._terms.get((0,) * self._nvars, 0)

    def total_degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def degree_in(self, index: int) -> int:
        """Degree in ``x{index}``; -1 for the zero polynomial."""
        return max((e[index - 1] for e in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic

    def _check(self, other: "MultiPoly") -> None:
        if self._nvars != other._nvars:
            raise ValueError(
                f"variable-count mismatch: {self._nvars} vs {other._nvars}"
            )

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return MultiPoly.const(self._nvars, other)
        return NotImplemented

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                del out[exp]
        return MultiPoly._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self._nvars)
            return MultiPoly._raw(self._nvars, {e: c * other for e, c in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return MultiPoly.zero(self._nvars)
        out: dict[Exponent, int] = {}
        right = list(other._terms.items())
        for ea, ca in self._terms.items():
            for eb, cb in right:
                e = tuple(a + b for a, b in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly._raw(self._nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.const(self._nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._nvars == other._nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __call__(self, *point: int) -> int:
        return poly_eval(self, point)

    def permute_vars(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename variables: ``x{i+1}`` becomes ``x{perm[i]+1}`` (0-based perm)."""
        if sorted(perm) != list(range(self._nvars)):
            raise ValueError(f"not a permutation of {self._nvars} variables: {perm}")
        out = {}
        for e, c in self._terms.items():
            ne = [0] * self._nvars
            for i, a in enumerate(e):
                ne[perm[i]] = a
            out[tuple(ne)] = c
        return MultiPoly._raw(self._nvars, out)

    def substitute_zero(self, index: int) -> "MultiPoly":
        """Set ``x{index}`` to zero and drop that variable."""
        k = index - 1
        out = {e[:k] + e[k + 1:]: c for e, c in self._terms.items() if e[k] == 0}
        return MultiPoly._raw(self._nvars - 1, out)

    def extend_vars(self, extra: int) -> "MultiPoly":
        """Embed into a ring with ``extra`` more trailing variables."""
        pad = (0,) * extra
        return MultiPoly._raw(self._nvars + extra, {e + pad: c for e, c in self._terms.items()})

    def __str__(self) -> str:
        return render_text(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {render_text(self)!r})"


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    a._check(b)
    return a + b


def poly_sub(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    a._check(b)
    return a - b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    a._check(b)
    return a * b


def poly_eval(p: MultiPoly, point: Sequence[int]) -> int:
    """Exact integer value of ``p`` at ``point``."""
    if len(point) != p.num_vars:
        raise ValueError(f"point has {len(point)} coordinates, expected {p.num_vars}")
    total = 0
    for exp, c in p.terms.items():
        v = c
        for t, a in zip(point, exp):
            if a:
                v *= t ** a
        total += v
    return total


def _split_main(p: MultiPoly, k: int) -> dict[int, dict[Exponent, int]]:
    """Group terms of ``p`` by the exponent of variable ``k`` (0-based)."""
    groups: dict[int, dict[Exponent, int]] = {}
    for e, c in p.terms.items():
        d = e[k]
        groups.setdefault(d, {})[e[:k] + (0,) + e[k + 1:]] = c
    return groups


def poly_exact_div(dividend: MultiPoly, divisor: MultiPoly) -> MultiPoly:
    """Return ``q`` with ``q * divisor == dividend``.

    Division is recursive in one main variable at a time, the highest-indexed
    variable occurring in the divisor.  Leading coefficients (polynomials in the
    remaining variables) are divided recursively.  Any nonzero remainder raises
    :class:`InexactDivisionError`.
    """
    dividend._check(divisor)
    if divisor.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    nv = dividend.num_vars
    if dividend.is_zero():
        return MultiPoly.zero(nv)

    if divisor.is_constant():
        c = divisor.constant_value()
        out = {}
        for e, a in dividend.terms.items():
            q, rem = divmod(a, c)
            if rem:
                raise InexactDivisionError(f"coefficient {a} not divisible by {c}")
            out[e] = q
        return MultiPoly._raw(nv, out)

    k = max(i for e in divisor.terms for i, a in enumerate(e) if a)
    dgroups = _split_main(divisor, k)
    db = max(dgroups)
    lc_b = MultiPoly._raw(nv, dgroups[db])

    quotient = MultiPoly.zero(nv)
    rem = dividend
    while not rem.is_zero():
        rgroups = _split_main(rem, k)
        da = max(rgroups)
        if da < db:
            raise InexactDivisionError(
                f"nonzero remainder of degree {da} < {db} in x{k + 1}"
            )
        lc_r = MultiPoly._raw(nv, rgroups[da])
        t = poly_exact_div(lc_r, lc_b)
        shift = [0] * nv
        shift[k] = da - db
        t = t * MultiPoly._raw(nv, {tuple(shift): 1})
        quotient = quotient + t
        rem = rem - t * divisor
    return quotient


# text format

def _render_monomial(exp: Exponent) -> str:
    parts = []
    for i, a in enumerate(exp, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def render_text(p: MultiPoly) -> str:
    """Render as e.g. ``x1^2*x2 - 3*x1*x2 + 1``; the zero polynomial is ``0``."""
    if p.is_zero():
        return "0"
    out = []
    for idx, (exp, c) in enumerate(p.sorted_terms()):
        mono = _render_monomial(exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


_TERM_RE = re.compile(r"([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_text(text: str, num_vars: int | None = None) -> MultiPoly:
    """Parse the text format produced by :func:`render_text`.

    ``num_vars`` defaults to the largest variable index mentioned.  Both ASCII
    ``-`` and the minus sign ``−`` are accepted.
    """
    src = text.replace("−", "-").strip()
    if not src:
        raise ValueError("empty polynomial text")
    raw: list[tuple[int, dict[int, int]]] = []
    pos = 0
    src_nospace = re.sub(r"\s+", "", src)
    if src_nospace[0] not in "+-":
        src_nospace = "+" + src_nospace
    for m in _TERM_RE.finditer(src_nospace):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial near {src_nospace[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign
        powers: dict[int, int] = {}
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            i = int(fm.group(1))
            if i < 1:
                raise ValueError(f"variable index must be >= 1: {factor!r}")
            powers[i] = powers.get(i, 0) + int(fm.group(2) or 1)
        raw.append((coeff, powers))
    if pos != len(src_nospace):
        raise ValueError(f"trailing garbage in {text!r}")
    top = max((i for _, pw in raw for i in pw), default=0)
    if num_vars is None:
        num_vars = max(top, 1)
    elif top > num_vars:
        raise ValueError(f"x{top} exceeds num_vars={num_vars}")
    terms: dict[Exponent, int] = {}
    for c, pw in raw:
        e = tuple(pw.get(i, 0) for i in range(1, num_vars + 1))
        terms[e] = terms.get(e, 0) + c
    return MultiPoly(num_vars, terms)


# JSON format

def to_json_obj(p: MultiPoly) -> dict:
    return {
        "vars": p.num_vars,
        "terms": [{"c": str(c), "e": list(e)} for e, c in p.sorted_terms()],
    }


def from_json_obj(obj: Mapping) -> MultiPoly:
    nv = obj["vars"]
    terms: dict[Exponent, int] = {}
    for t in obj["terms"]:
        e = tuple(t["e"])
        if e in terms:
            raise ValueError(f"duplicate exponent {e}")
        c = int(t["c"])
        if c == 0:
            raise ValueError("zero coefficient in serialized polynomial")
        terms[e] = c
    return MultiPoly(nv, terms)


def dumps(p: MultiPoly) -> str:
    return json.dumps(to_json_obj(p))


def loads(s: str) -> MultiPoly:
    return from_json_obj(json.loads(s))


POLY_JSON_SCHEMA = {
    "type": "object",
    "required": ["vars", "terms"],
    "additionalProperties": False,
    "properties": {
        "vars": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["c", "e"],
                "additionalProperties": False,
                "properties": {
                    "c": {"type": "string", "pattern": "^-?[1-9][0-9]*$"},
                    "e": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
            },
        },
    },
}


def variables(num_vars: int) -> list[MultiPoly]:
    """``[x1, ..., x{num_vars}]``."""
    return [MultiPoly.var(num_vars, i) for i in range(1, num_vars + 1)]


def poly_sum(items: Iterable[MultiPoly], num_vars: int) -> MultiPoly:
    total = MultiPoly.zero(num_vars)
    for p in items:
        total = total + p
    return total
