"""Integer partitions in canonical form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing non-negative parts, trailing zeros trimmed.

    The empty partition is valid and indexes the constant Schur polynomial 1.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(p) for p in parts]
        if any(p < 0 for p in ps):
            raise ValueError(f"negative part in {ps}")
        if any(b > a for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be weakly decreasing: {ps}")
        while ps and ps[-1] == 0:
            ps.pop()
        object.__setattr__(self, "parts", tuple(ps))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"a,b,c"``; an empty string or ``"0"`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed partition {text!r}: {exc}") from None

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        if n < self.length():
            raise ValueError(f"partition {self} has more than {n} parts")
        return self.parts + (0,) * (n - self.length())

    def __getitem__(self, k: int) -> int:
        """1-based part lookup; parts beyond the length are zero."""
        if k < 1:
            raise IndexError(k)
        return self.parts[k - 1] if k <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""

    def rec(prefix: list[int], cap: int):
        yield Partition(prefix)
        if len(prefix) == rows:
            return
        for p in range(1, cap + 1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    yield from rec([], cols)
