"""Young diagrams and standard Young tableaux."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterator


@dataclass(frozen=True, order=True)
class YoungDiagram:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("a Young diagram needs at least one row")
        if any(r <= 0 for r in rows):
            raise ValueError(f"rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")

    @classmethod
    def parse(cls, text: str) -> YoungDiagram:
        """Parse ``"[3,3]"``; exponent shorthand ``"[2^3]"`` is accepted too."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"diagram syntax is [r1,r2,...], got {text!r}")
        rows: list[int] = []
        for part in filter(None, (p.strip() for p in body[1:-1].split(","))):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", part)
            if not m:
                raise ValueError(f"bad row entry {part!r} in {text!r}")
            rows.extend([int(m.group(1))] * int(m.group(2) or 1))
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return sum(self.rows)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.rows)) + "]"

    def boxes(self) -> Iterator[tuple[int, int]]:
        """1-based (row, column) pairs in row-reading order."""
        for r, length in enumerate(self.rows, start=1):
            for c in range(1, length + 1):
                yield r, c

    def is_rectangular(self) -> bool:
        return len(set(self.rows)) == 1

    def transpose(self) -> YoungDiagram:
        return YoungDiagram(tuple(sum(1 for r in self.rows if r > c) for c in range(self.rows[0])))

    def hook_length(self, box: tuple[int, int]) -> int:
        r, c = box
        arm = self.rows[r - 1] - c
        leg = sum(1 for rr in self.rows[r:] if rr >= c)
        return arm + leg + 1

    def removable_corners(self) -> list[YoungDiagram]:
        out = []
        for i, length in enumerate(self.rows):
            below = self.rows[i + 1] if i + 1 < len(self.rows) else 0
            if length > below:
                child = list(self.rows)
                child[i] -= 1
                if child[i] == 0:
                    child.pop(i)
                if child:
                    out.append(YoungDiagram(tuple(child)))
        return out


def content(box: tuple[int, int]) -> int:
    r, c = box
    return c - r


def dimension(y: YoungDiagram) -> int:
    """Number of standard tableaux, by the hook-length formula."""
    prod = 1
    for b in y.boxes():
        prod *= y.hook_length(b)
    return factorial(y.n) // prod


def partitions(n: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """All Young diagrams with ``n`` boxes, in reverse lexicographic order."""

    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, cap), 0, -1):
            for tail in rec(rem - k, k):
                yield (k,) + tail

    for rows in rec(n, max_part or n):
        yield YoungDiagram(rows)


@dataclass(frozen=True)
class StandardTableau:
    shape: YoungDiagram
    filling: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.filling) != self.shape.rows:
            raise ValueError("filling does not match shape")
        flat = sorted(x for r in self.filling for x in r)
        if flat != list(range(1, self.shape.n + 1)):
            raise ValueError("filling must use 1..n exactly once")
        for r in self.filling:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for upper, lower in zip(self.filling, self.filling[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError("columns must increase")

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        return {x: (r, c) for r, row in enumerate(self.filling, 1) for c, x in enumerate(row, 1)}

    def row_word(self) -> tuple[int, ...]:
        """Row index of each entry 1..n; the basis sort key."""
        pos = self.positions
        return tuple(pos[k][0] for k in range(1, self.shape.n + 1))

    def swap(self, i: int) -> StandardTableau | None:
        """Exchange ``i`` and ``i + 1``; ``None`` when the result is not standard."""
        f = tuple(tuple(i + 1 if x == i else i if x == i + 1 else x for x in row) for row in self.filling)
        try:
            return StandardTableau(self.shape, f)
        except ValueError:
            return None

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.filling)


def axial(tau: StandardTableau, i: int) -> int:
    """content(i + 1) - content(i)."""
    n = tau.shape.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"axial distance needs 1 <= i <= {n - 1}, got {i}")
    return content(tau.positions[i + 1]) - content(tau.positions[i])


@lru_cache(maxsize=None)
def standard_tableaux(y: YoungDiagram) -> tuple[StandardTableau, ...]:
    """All SYT of shape ``y``, sorted by row word (row of 1, row of 2, ...)."""
    n = y.n
    out: list[StandardTableau] = []

    def rec(fill: list[list[int]], k: int) -> None:
        if k > n:
            out.append(StandardTableau(y, tuple(tuple(r) for r in fill)))
            return
        for r in range(len(y.rows)):
            length = len(fill[r])
            if length == y.rows[r]:
                continue
            if r > 0 and len(fill[r - 1]) <= length:
                continue
            fill[r].append(k)
            rec(fill, k + 1)
            fill[r].pop()

    rec([[] for _ in y.rows], 1)
    out.sort(key=StandardTableau.row_word)
    return tuple(out)


def is_rectangular(y: YoungDiagram) -> bool:
    return y.is_rectangular()


def transpose(y: YoungDiagram) -> YoungDiagram:
    return y.transpose()


def removable_corners(y: YoungDiagram) -> list[YoungDiagram]:
    return y.removable_corners()
