"""Search-tree branches and the transitions that preserve their meaning.

A branch stands for the family of representations obtainable by committing
(`reserve`) or discarding (`remove`) denominators from its pool.  It caches,
and every transition incrementally maintains:

    target = original_target - reciprocal_sum(reserved)
    diff   = reciprocal_sum(pool) - target
    prime_power = greatest prime power dividing denominator(diff), if any

so the expensive quantities are never recomputed from scratch on the hot
path.  Branches are immutable; transitions return new ones.
"""

from __future__ import annotations

from typing import Iterable, Optional, Union

from gmpy2 import mpq

from .multiset import EMPTY, Multiset
from .rationals import (
    PrimePower,
    RationalLike,
    greatest_prime_power,
    to_rational,
)


class Branch:
    __slots__ = ("pool", "reserved", "original_target", "target", "diff", "prime_power")

    pool: Multiset
    reserved: Multiset
    original_target: mpq
    target: mpq
    diff: mpq
    prime_power: Optional[PrimePower]

    def __init__(self, pool, reserved, original_target, target, diff, prime_power):
        self.pool = pool
        self.reserved = reserved
        self.original_target = original_target
        self.target = target
        self.diff = diff
        self.prime_power = prime_power

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Branch)
            and self.pool == other.pool
            and self.reserved == other.reserved
            and self.original_target == other.original_target
            and self.target == other.target
            and self.diff == other.diff
        )

    def __hash__(self) -> int:
        return hash((self.pool, self.reserved, self.original_target, self.target, self.diff))

    def __repr__(self) -> str:
        return (
            f"Branch(pool=[{self.pool}], reserved=[{self.reserved}], "
            f"target={self.target}, diff={self.diff})"
        )

    def representation(self) -> Multiset:
        """The represented multiset of a solved (diff == 0) branch."""
        return self.reserved.add(self.pool)

    def validate(self) -> None:
        """Recompute every cached field from first principles; raise on drift.

        Deliberately O(|pool| + |reserved|): tests wrap transitions with it,
        the search loop does not.
        """
        if self.target != self.original_target - self.reserved.reciprocal_sum():
            raise AssertionError(f"target out of sync: {self!r}")
        if self.diff != self.pool.reciprocal_sum() - self.target:
            raise AssertionError(f"diff out of sync: {self!r}")
        if self.prime_power != greatest_prime_power(self.diff):
            raise AssertionError(f"prime_power out of sync: {self!r}")


def make_branch(denoms: Union[Multiset, Iterable[int]], target: RationalLike) -> Branch:
    """Root branch for searching denoms against a nonnegative target."""
    pool = denoms if isinstance(denoms, Multiset) else Multiset(denoms)
    r = to_rational(target)
    if r < 0:
        raise ValueError(f"target must be nonnegative, got {r}")
    diff = pool.reciprocal_sum() - r
    return Branch(pool, EMPTY, r, r, diff, greatest_prime_power(diff))


def reserve(br: Branch, sub: Multiset) -> Branch:
    """Commit sub: it will appear in every representation below this branch.

    diff is untouched (both reciprocal sums drop by the same amount), so the
    cached prime power carries over.
    """
    return Branch(
        br.pool.subtract(sub),
        br.reserved.add(sub),
        br.original_target,
        br.target - sub.reciprocal_sum(),
        br.diff,
        br.prime_power,
    )


def remove(br: Branch, sub: Multiset) -> Branch:
    """Discard sub: no representation below this branch uses those copies."""
    diff = br.diff - sub.reciprocal_sum()
    return Branch(
        br.pool.subtract(sub),
        br.reserved,
        br.original_target,
        br.target,
        diff,
        greatest_prime_power(diff),
    )


def normalize(br: Branch) -> Branch:
    """Apply the forced moves until none is left.

    Repeatedly: drop every pool element with 1/d > target (it alone would
    overshoot what is still owed), else commit every element with
    1/d > diff (discarding it would leave the pool unable to cover the
    target).  Both comparisons strict.  The result may have target < 0 or
    diff < 0; the expansion step discards such branches.
    """
    return _normalized(
        br.pool, br.reserved, br.original_target, br.target, br.diff, br.prime_power
    )


_UNKNOWN = object()


def _normalized(pool, reserved, original_target, target, diff, prime_power=_UNKNOWN) -> Branch:
    """Reduce raw fields to a fixpoint branch.

    Both rules always fire on a prefix of the ascending pool, so the loop
    slices rather than rebuilding multisets.  prime_power, when supplied,
    must belong to the incoming diff; it is reused unless a removal rebinds
    diff.
    """
    pairs = pool.pairs
    size = pool.size
    diff_in = diff
    committed: list[tuple[int, int]] = []
    while pairs:
        cut, csize, csum = _prefix_reciprocal_gt(pairs, target)
        if cut:
            pairs = pairs[cut:]
            size -= csize
            diff = diff - csum
            continue
        cut, csize, csum = _prefix_reciprocal_gt(pairs, diff)
        if cut:
            committed.extend(pairs[:cut])
            pairs = pairs[cut:]
            size -= csize
            target = target - csum
            continue
        break
    if committed:
        # chunks are consumed left to right, so together they stay canonical
        extra = tuple(committed)
        reserved = reserved.add(Multiset._unsafe(extra, sum(c for _, c in extra)))
    if prime_power is _UNKNOWN or diff is not diff_in:
        prime_power = greatest_prime_power(diff)
    if pairs is not pool.pairs:
        pool = Multiset._unsafe(pairs, size)
    return Branch(pool, reserved, original_target, target, diff, prime_power)


def _prefix_reciprocal_gt(pairs, bound: mpq) -> tuple[int, int, mpq]:
    """Leading pairs with 1/v > bound: how many, their element count and sum.

    Nonpositive bounds qualify everything.
    """
    num = bound.numerator
    csum = mpq(0)
    csize = 0
    if num <= 0:
        for v, c in pairs:
            csize += c
            csum += mpq(c, v)
        return len(pairs), csize, csum
    den = bound.denominator
    cut = 0
    for v, c in pairs:
        if v * num >= den:
            break
        cut += 1
        csize += c
        csum += mpq(c, v)
    return cut, csize, csum
