"""Partitions, polygon dissections and the counts that index the strata.

A partition is stored by multiplicities: ``Partition({3: 1, 1: 1})`` is
3 + 1.  Partitions of ``m`` index the dissection types of an
``(m + 2)``-gon, where a part ``i`` stands for a cell with ``i + 2`` sides.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Mapping

__all__ = [
    "Partition",
    "Dissection",
    "partitions",
    "count_P",
    "count_T",
    "iter_dissections",
    "enumerate_dissections",
]


@dataclass(frozen=True, order=False)
class Partition:
    """An integer partition given by its multiplicity vector.

    ``multiplicities`` holds ``(part, count)`` pairs sorted by part, with
    every count positive.  Use :meth:`from_parts` or pass a mapping.
    """

    multiplicities: tuple[tuple[int, int], ...] = ()
    weight: int = field(init=False, compare=False)
    length: int = field(init=False, compare=False)

    def __init__(self, multiplicities: Mapping[int, int] | tuple = ()):
        items = dict(multiplicities)
        for part, count in items.items():
            if part < 1 or count < 0:
                raise ValueError(f"bad partition entry {part}:{count}")
        pairs = tuple(sorted((p, c) for p, c in items.items() if c))
        object.__setattr__(self, "multiplicities", pairs)
        object.__setattr__(self, "weight", sum(p * c for p, c in pairs))
        object.__setattr__(self, "length", sum(c for _, c in pairs))

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        return cls(Counter(parts))

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in non-increasing order."""
        return tuple(p for p, c in reversed(self.multiplicities) for _ in range(c))

    @property
    def polygon_size(self) -> int:
        return self.weight + 2

    def multiplicity(self, i: int) -> int:
        return dict(self.multiplicities).get(i, 0)

    def __str__(self) -> str:
        if not self.multiplicities:
            return "()"
        return " ".join(str(p) if c == 1 else f"{p}^{c}" for p, c in self.multiplicities)

    def __repr__(self) -> str:
        return f"Partition({dict(self.multiplicities)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of ``str``: ``"1^2 2"`` is 2 + 1 + 1."""
        text = text.strip()
        if text == "()":
            return cls()
        counts: Counter = Counter()
        for tok in text.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad partition token {tok!r}")
            counts[int(m.group(1))] += int(m.group(2) or 1)
        return cls(counts)


def partitions(m: int) -> list[Partition]:
    """All partitions of ``m`` in decreasing lexicographic order of part lists.

    >>> [str(p) for p in partitions(4)]
    ['4', '1 3', '2^2', '1^2 2', '1^4']
    """
    if m < 0:
        raise ValueError("cannot partition a negative integer")
    return [Partition.from_parts(parts) for parts in _parts_desc(m, m)]


def _parts_desc(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _parts_desc(m - first, first):
            yield (first,) + rest


def count_P(lam: Partition) -> int:
    """Number of dissections of an ``(m+2)``-gon of type ``lam``, m = weight.

    Closed form ``(m + k)! / ((m + 1)! * prod(lam_i!))`` with k the number of
    parts; the division is checked to be exact.
    """
    if lam.weight < 1:
        raise ValueError("dissection counts need a partition of weight >= 1")
    m = lam.weight
    num = factorial(m + lam.length)
    den = factorial(m + 1) * prod(factorial(c) for _, c in lam.multiplicities)
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"P({lam}) is not an integer")
    return quo


def count_T(lam: Partition) -> int:
    """Number of stable genus-zero dual graphs of type ``lam``.

    ``P(lam) * (n-1)! / prod((i+1)!**lam_i)`` with ``n`` the polygon size.
    """
    n = lam.polygon_size
    num = count_P(lam) * factorial(n - 1)
    den = prod(factorial(i + 1) ** c for i, c in lam.multiplicities)
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"T({lam}) is not an integer")
    return quo


# -- brute-force dissections ---------------------------------------------------


def _crosses(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    # a < b, so "strictly between" is the open interval
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Dissection:
    """Non-crossing chords of a convex ``polygon_size``-gon, vertices 0..n-1."""

    polygon_size: int
    chords: frozenset

    def __post_init__(self):
        n = self.polygon_size
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        for a, b in self.chords:
            if not (0 <= a < b < n) or b - a < 2 or (a == 0 and b == n - 1):
                raise ValueError(f"({a}, {b}) is not a diagonal of the {n}-gon")
        cs = sorted(self.chords)
        for i, c1 in enumerate(cs):
            for c2 in cs[i + 1:]:
                if _crosses(c1, c2):
                    raise ValueError(f"chords {c1} and {c2} cross")

    def cells(self) -> list[tuple[int, ...]]:
        """Vertex cycles of the cells, found by splitting on the least chord."""
        out = []
        stack = [(tuple(range(self.polygon_size)), sorted(self.chords))]
        while stack:
            verts, chords = stack.pop()
            if not chords:
                out.append(verts)
                continue
            a, b = chords[0]
            i, j = sorted((verts.index(a), verts.index(b)))
            inner = verts[i:j + 1]
            outer = verts[j:] + verts[:i + 1]
            inner_set = set(inner)
            left, right = [], []
            for c in chords[1:]:
                (left if c[0] in inner_set and c[1] in inner_set else right).append(c)
            stack.append((inner, left))
            stack.append((outer, right))
        return out

    def type(self) -> Partition:
        return Partition(Counter(len(cell) - 2 for cell in self.cells()))


def _diagonals(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(a + 2, n) if not (a == 0 and b == n - 1)]


def iter_dissections(n: int) -> Iterator[Dissection]:
    """Every non-crossing chord set of the ``n``-gon, the empty one included.

    Depth-first over diagonals in a fixed order; a set is only extended by
    diagonals after its last one, so each set is produced exactly once.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    diags = _diagonals(n)
    compatible = [
        [j for j in range(i + 1, len(diags)) if not _crosses(diags[i], diags[j])]
        for i in range(len(diags))
    ]

    def extend(chosen: list[int], candidates: list[int]):
        yield Dissection(n, frozenset(diags[i] for i in chosen))
        for j in candidates:
            allowed = set(compatible[j])
            chosen.append(j)
            yield from extend(chosen, [k for k in candidates if k in allowed])
            chosen.pop()

    yield from extend([], list(range(len(diags))))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[tuple[Partition, int], ...]:
    counts: Counter = Counter(d.type() for d in iter_dissections(n))
    return tuple(counts.items())


def enumerate_dissections(n: int) -> dict[Partition, int]:
    """Brute-force count of dissections of the ``n``-gon by type.

    Keys come out in the same order as :func:`partitions`; types that do
    not occur are omitted.
    """
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    found = dict(_enumerate_cached(n))
    return {lam: found[lam] for lam in partitions(n - 2) if lam in found}
