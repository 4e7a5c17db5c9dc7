"""Integer partitions, skew shapes and index vectors for Toeplitz minors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value.  Indexing past the end
    yields 0, which matches the habit of writing ``(lam, 0^n)``.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def padded(self, size: int) -> tuple[int, ...]:
        if size < len(self.parts):
            raise ValueError(f"{self} has more than {size} parts")
        return self.parts + (0,) * (size - len(self.parts))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def as_partition(p) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return parse_partition(p)
    return Partition(tuple(p))


def parse_partition(text: str) -> Partition:
    """Parse the CLI form ``"2,1"``; the empty string is the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return Partition()
    return Partition(tuple(int(tok) for tok in text.split(",") if tok.strip()))


def conjugate(p) -> Partition:
    p = as_partition(p)
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in p.parts if x > i) for i in range(p.parts[0])))


def rect(m: int, n: int) -> Partition:
    """The rectangle ``(m^n)``: n parts equal to m."""
    if m < 0 or n < 0:
        raise ValueError("rect needs nonnegative arguments")
    return Partition((m,) * n)


def skew_contains(outer, inner) -> bool:
    outer, inner = as_partition(outer), as_partition(inner)
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@dataclass(frozen=True)
class SkewPartition:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer, inner = as_partition(self.outer), as_partition(self.inner)
        if not skew_contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def weight(self) -> int:
        return self.outer.weight() - self.inner.weight()

    def conjugate(self) -> "SkewPartition":
        return SkewPartition(conjugate(self.outer), conjugate(self.inner))

    def __str__(self) -> str:
        if not self.inner.parts:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def as_skew(shape) -> SkewPartition:
    if isinstance(shape, SkewPartition):
        return shape
    if isinstance(shape, Partition):
        return SkewPartition(shape)
    outer, inner = shape
    return SkewPartition(as_partition(outer), as_partition(inner))


@dataclass(frozen=True)
class IndexVector:
    """Strictly increasing 1-based indices inside ``{1, ..., bound}``."""

    entries: tuple[int, ...]
    bound: int

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if entries and entries[0] < 1:
            raise ValueError(f"indices start at 1: {entries}")
        if any(entries[i] >= entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"indices must be strictly increasing: {entries}")
        if entries and entries[-1] > self.bound:
            raise ValueError(f"index {entries[-1]} exceeds bound {self.bound}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def total(self) -> int:
        return sum(self.entries)

    def complement(self) -> "IndexVector":
        taken = set(self.entries)
        return IndexVector(tuple(i for i in range(1, self.bound + 1) if i not in taken), self.bound)


def rev(seq: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(seq))


def id_vec(d: int) -> tuple[int, ...]:
    return tuple(range(1, d + 1))


def partitions(weight: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of exactly ``weight``, lexicographically decreasing."""
    if max_part is None:
        max_part = weight
    if max_length is None:
        max_length = weight

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(weight, max_part, max_length):
        yield Partition(parts)


def partitions_upto(max_weight: int, max_length: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of weight <= max_weight ordered by (weight, lex)."""
    out = []
    for w in range(max_weight + 1):
        out.extend(sorted(partitions(w, max_length, max_part)))
    return out


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions fitting in a rows x cols rectangle."""
    return partitions_upto(rows * cols, max_length=rows, max_part=cols)
