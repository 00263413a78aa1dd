"""Finite multisets of positive integers, the denominator pools of the search.

Canonical form is a sorted tuple of (value, count) pairs with distinct values
and positive counts; equality, hashing, and textual round-trips all go through
it.  Values are positive: these are denominators of unit fractions.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from gmpy2 import mpq

Pairs = tuple[tuple[int, int], ...]


class Multiset:
    __slots__ = ("pairs", "size")

    pairs: Pairs
    size: int

    def __init__(self, elements: Iterable[int] = ()):
        counts = Counter()
        for v in elements:
            counts[v] += 1
        pairs = tuple(sorted(counts.items()))
        _check_pairs(pairs)
        self.pairs = pairs
        self.size = sum(c for _, c in pairs)

    @classmethod
    def _unsafe(cls, pairs: Pairs, size: int) -> "Multiset":
        """Wrap already-canonical pairs without validation (internal hot path)."""
        ms = cls.__new__(cls)
        ms.pairs = pairs
        ms.size = size
        return ms

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Multiset":
        counts = Counter()
        for v, c in pairs:
            if c < 0:
                raise ValueError(f"negative multiplicity {c} for value {v}")
            if c:
                counts[v] += c
        out = tuple(sorted(counts.items()))
        _check_pairs(out)
        return cls._unsafe(out, sum(c for _, c in out))

    @classmethod
    def from_range(cls, lo: int, hi: int) -> "Multiset":
        """The set {lo..hi}, one copy each; empty when hi < lo."""
        if lo <= 0 and lo <= hi:
            raise ValueError(f"range start must be positive, got {lo}")
        return cls._unsafe(tuple((v, 1) for v in range(lo, hi + 1)), max(0, hi - lo + 1))

    @classmethod
    def parse(cls, text: str) -> "Multiset":
        """Parse comma- or space-separated integers with explicit repeats."""
        tokens = text.replace(",", " ").split()
        try:
            return cls(int(t) for t in tokens)
        except ValueError as exc:
            raise ValueError(f"bad multiset text {text!r}: {exc}") from exc

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.elements())

    def __repr__(self) -> str:
        return f"Multiset({str(self)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Multiset) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __bool__(self) -> bool:
        return self.size > 0

    def __iter__(self) -> Iterator[int]:
        for v, c in self.pairs:
            for _ in range(c):
                yield v

    def elements(self) -> tuple[int, ...]:
        """All elements ascending, with repeats."""
        return tuple(self)

    def count(self, value: int) -> int:
        for v, c in self.pairs:
            if v == value:
                return c
            if v > value:
                break
        return 0

    def min_element(self) -> int:
        if not self.pairs:
            raise ValueError("empty multiset has no minimum")
        return self.pairs[0][0]

    def contains(self, other: "Multiset") -> bool:
        """Submultiset test: every value of other has at least its count here."""
        mine = dict(self.pairs)
        return all(mine.get(v, 0) >= c for v, c in other.pairs)

    def add(self, other: "Multiset") -> "Multiset":
        """Multiset sum (counts add)."""
        return _merge(self, other, 1)

    def subtract(self, other: "Multiset") -> "Multiset":
        """Remove a submultiset; rejects anything not fully contained."""
        return _merge(self, other, -1)

    def reciprocal_sum(self) -> mpq:
        total = mpq(0)
        for v, c in self.pairs:
            total += mpq(c, v)
        return total

    def max_power_of(self, p: int) -> int:
        """Largest s with p**s dividing some element (0 when p divides none)."""
        if p < 2:
            raise ValueError(f"need p >= 2, got {p}")
        best = 0
        for v, _ in self.pairs:
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            if e > best:
                best = e
        return best

    def split_multiples(self, q: int) -> tuple["Multiset", "Multiset"]:
        """Partition into (multiples of q, the rest), both canonical."""
        if q < 1:
            raise ValueError(f"need q >= 1, got {q}")
        hit: list[tuple[int, int]] = []
        miss: list[tuple[int, int]] = []
        nh = nm = 0
        for v, c in self.pairs:
            if v % q == 0:
                hit.append((v, c))
                nh += c
            else:
                miss.append((v, c))
                nm += c
        return Multiset._unsafe(tuple(hit), nh), Multiset._unsafe(tuple(miss), nm)


def _check_pairs(pairs: Pairs) -> None:
    for v, _ in pairs:
        if not isinstance(v, int) or v <= 0:
            raise ValueError(f"multiset values must be positive integers, got {v!r}")


def _merge(a: Multiset, b: Multiset, sign: int) -> Multiset:
    counts = dict(a.pairs)
    for v, c in b.pairs:
        n = counts.get(v, 0) + sign * c
        if n < 0:
            raise ValueError(f"cannot remove {c} x {v}: not a submultiset")
        if n:
            counts[v] = n
        else:
            counts.pop(v, None)
    pairs = tuple(sorted(counts.items()))
    return Multiset._unsafe(pairs, sum(c for _, c in pairs))


EMPTY = Multiset()
