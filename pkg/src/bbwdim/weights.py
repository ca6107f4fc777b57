"""Weights, partitions and hook lengths.

Weights are dominant (nonincreasing) integer sequences of a fixed length.
:class:`GeneralWeight` drops the ordering requirement and only exists as
input to the Bott computation. Partitions never carry trailing zeros;
converting between the two is always explicit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MTooSmall, NotNonincreasing, BBWError


def _first_increase(entries: Sequence[int]) -> int | None:
    for i in range(1, len(entries)):
        if entries[i - 1] < entries[i]:
            return i
    return None


@dataclass(frozen=True)
class Weight:
    """Highest weight of a GL_k-module: a nonincreasing tuple of integers."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if not self.entries:
            raise BBWError("a weight needs at least one entry")
        pos = _first_increase(self.entries)
        if pos is not None:
            raise NotNonincreasing(pos)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def lowest(self) -> int:
        return self.entries[-1]

    def __str__(self):
        return format_weight(self.entries)


@dataclass(frozen=True)
class GeneralWeight:
    """Arbitrary integer character of the maximal torus of GL_m."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if not self.entries:
            raise BBWError("a weight needs at least one entry")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def is_dominant(self) -> bool:
        return _first_increase(self.entries) is None

    def __str__(self):
        return format_weight(self.entries)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise BBWError(f"partition parts must be positive: {parts}")
        pos = _first_increase(parts)
        if pos is not None:
            raise NotNonincreasing(pos)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_weight(cls, weight: Weight) -> "Partition":
        """Drop trailing zeros of a weight with nonnegative entries."""
        if weight.lowest < 0:
            raise BBWError(f"weight {weight} has negative entries")
        return cls(tuple(e for e in weight.entries if e > 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def row_count(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def to_weight(self, length: int) -> Weight:
        """Pad with zeros to a weight of the given length."""
        if length < self.row_count:
            raise MTooSmall(length, self.row_count)
        return Weight(self.parts + (0,) * (length - self.row_count))

    def __str__(self):
        return format_weight(self.parts)


def make_weight(raw: Iterable[int]) -> Weight:
    return Weight(tuple(raw))


def parse_weight(text: str) -> Weight:
    """Parse ``"3,1,-2"`` (optionally bracketed, whitespace tolerated)."""
    s = text.strip()
    if s[:1] in "([" and s[-1:] in ")]":
        s = s[1:-1]
    fields = [f.strip() for f in s.split(",")]
    if not fields or any(f == "" for f in fields):
        raise BBWError(f"cannot parse weight {text!r}")
    try:
        values = [int(f) for f in fields]
    except ValueError:
        raise BBWError(f"cannot parse weight {text!r}") from None
    return make_weight(values)


def format_weight(entries: Iterable[int]) -> str:
    return ",".join(str(e) for e in entries)


def extend_with_zeros(weight: Weight, m: int) -> Weight | GeneralWeight:
    """Pad a length-k weight with zeros to length m.

    The result is a dominant :class:`Weight` when the lowest entry is
    nonnegative, and a :class:`GeneralWeight` otherwise.
    """
    k = len(weight)
    if m < k:
        raise MTooSmall(m, k)
    entries = weight.entries + (0,) * (m - k)
    if weight.lowest >= 0:
        return Weight(entries)
    return GeneralWeight(entries)


def twist(weight: Weight, r: int) -> Weight:
    """Tensor with the r-th power of the determinant."""
    return Weight(tuple(e + r for e in weight.entries))


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for part in p.parts if part > j) for j in range(p.parts[0])))


def hook_lengths(p: Partition) -> tuple[int, ...]:
    """Hook lengths of all cells, as a nonincreasing tuple (a multiset)."""
    cols = conjugate(p).parts
    hooks = [
        (row - j - 1) + (cols[j] - i - 1) + 1
        for i, row in enumerate(p.parts)
        for j in range(row)
    ]
    return tuple(sorted(hooks, reverse=True))


def syt_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    q, rem = divmod(math.factorial(p.size), math.prod(hook_lengths(p)))
    assert rem == 0
    return q


def partitions_of(d: int, max_rows: int) -> list[Partition]:
    """Partitions of ``d`` with at most ``max_rows`` parts, lex-decreasing."""
    if d < 0 or max_rows < 0:
        return []
    return [Partition(parts) for parts in _partitions(d, d, max_rows)]


def _partitions(d: int, largest: int, rows: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    if rows == 0:
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions(d - first, first, rows - 1):
            yield (first,) + rest
