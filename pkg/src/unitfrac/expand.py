"""One expansion step: turn a branch into solved branches and subbranches.

The step is exhaustive and non-overlapping: the representation families below
the produced branches partition the family below the input, so the search
that drives this never finds a representation twice and never loses one.

The fractional case rests on a congruence argument.  Let p**t be the greatest
prime power dividing denominator(diff) and p**s the greatest power of p
dividing any pool element.  Any submultiset whose removal is ever to lead to
diff == 0 must clear p**s from the denominator, and writing the candidate
multiples of p**s as c * p**s, that happens exactly when the sum of the
inverses of the chosen c's hits a fixed residue mod p.  Elements divisible by
a lower power of p than p**s are untouched bystanders.  If t > s the pool
cannot clear the denominator at all and the branch is hopeless.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from gmpy2 import mpq

from .branch import Branch, _normalized
from .multiset import EMPTY, Multiset
from .rationals import mod_inverse

_ZERO = mpq(0)


class ResidueTarget(NamedTuple):
    """Congruence a removal set must satisfy: inverse sum = residue (mod p)."""

    p: int
    s: int  # greatest power of p dividing any pool element
    t: int  # power of p in denominator(diff)
    residue: int


class Expansion(NamedTuple):
    found: list[Branch]  # solved branches, diff == 0
    pending: list[Branch]  # normalized subbranches still to explore


def removal_residue(br: Branch) -> Optional[ResidueTarget]:
    """The congruence governing br's removal sets, or None when unsolvable.

    Requires a positive non-integer diff.  None means the denominator's top
    prime power outgrows every pool element (t > s, including p absent from
    the pool entirely), so no removal can ever reach diff == 0.
    """
    pp = br.prime_power
    if pp is None or br.diff < 0:
        raise ValueError(f"need a positive fractional diff, got {br.diff}")
    p, t = pp.p, pp.exponent
    s = br.pool.max_power_of(p)
    if t > s:
        return None
    if s == t:
        cof = br.diff.denominator // pp.value
        residue = int(br.diff.numerator % p) * mod_inverse(int(cof % p), p) % p
    else:
        residue = 0  # the p**(s-t) factor kills the product mod p
    return ResidueTarget(p, s, t, residue)


def matching_submultisets(multiples: Multiset, rt: ResidueTarget) -> list[Multiset]:
    """All submultisets of multiples satisfying rt, as distinct count vectors.

    Every element must be divisible by p**s and by no higher power of p.
    Enumeration assigns counts to distinct values from largest to smallest,
    trying smaller counts first and pruning against the residues achievable
    by the remaining values; emission order is therefore an ascending
    mixed-radix counter with the smallest value varying fastest.  The empty
    set appears exactly when the residue is 0.
    """
    return [sub for sub, _ in _admissible_removals(multiples, rt, None, None)]


def _admissible_removals(
    multiples: Multiset,
    rt: ResidueTarget,
    lo: Optional[mpq],
    hi: Optional[mpq],
) -> list[tuple[Multiset, mpq]]:
    """Congruence solutions with reciprocal sum in [lo, hi], plus their sums.

    The bounds prune subsets whose subbranch would start with a negative
    diff (sum > hi) or a negative target (sum < lo); partial sums only grow,
    and the suffix totals say how much mass is still reachable, so both cuts
    are exact and the surviving emission order is unchanged.
    """
    p = rt.p
    residue = rt.residue % p
    ps = rt.p**rt.s
    # (value, count, inverse of cofactor mod p, 1/value); largest value first
    items: list[tuple[int, int, int, mpq]] = []
    for v, c in reversed(multiples.pairs):
        cof, rem = divmod(v, ps)
        if rem or cof % p == 0:
            raise ValueError(f"{v} is not divisible by exactly {p}**{rt.s}")
        items.append((v, c, mod_inverse(cof % p, p), mpq(1, v)))

    n = len(items)
    reachable: list[set[int]] = [set() for _ in range(n)] + [{0}]
    for i in range(n - 1, -1, -1):
        _, c, inv, _ = items[i]
        nxt = reachable[i + 1]
        acc = reachable[i]
        for j in range(c + 1):
            shift = j * inv % p
            acc.update((shift + x) % p for x in nxt)

    remaining: list[mpq] = [_ZERO] * (n + 1)
    for i in range(n - 1, -1, -1):
        v, c, _, rec = items[i]
        remaining[i] = remaining[i + 1] + c * rec

    out: list[tuple[Multiset, mpq]] = []
    chosen: list[tuple[int, int]] = []

    def descend(i: int, need: int, sigma: mpq) -> None:
        if lo is not None and sigma + remaining[i] < lo:
            return
        if i == n:
            if need == 0:
                picked = tuple((v, c) for v, c in reversed(chosen) if c)
                out.append((Multiset._unsafe(picked, sum(c for _, c in picked)), sigma))
            return
        v, c, inv, rec = items[i]
        nxt = reachable[i + 1]
        s = sigma
        for j in range(c + 1):
            if j:
                s = s + rec
                if hi is not None and s > hi:
                    break
            need2 = (need - j * inv) % p
            if need2 in nxt:
                chosen.append((v, j))
                descend(i + 1, need2, s)
                chosen.pop()

    descend(0, residue, _ZERO)
    return out


def expand(br: Branch) -> Expansion:
    """Classify br: solved, hopeless, or split into smaller subbranches."""
    dnum = br.diff.numerator
    if dnum == 0:
        return Expansion([br], [])
    if dnum < 0 or br.target < 0:
        return Expansion([], [])
    if br.diff.denominator == 1:
        return expand_integer_diff(br)
    return expand_fractional_diff(br)


def expand_integer_diff(br: Branch) -> Expansion:
    """Split on the smallest denominator when diff is a positive integer.

    Representations either skip l entirely (drop all copies: removing fewer
    would revisit the same submultisets down separate branches) or commit at
    least one copy (reserve one, keep the rest in play).
    """
    pairs = br.pool.pairs
    l, k = pairs[0]
    inv_l = mpq(1, l)
    drop_all = _normalized(
        Multiset._unsafe(pairs[1:], br.pool.size - k),
        br.reserved,
        br.original_target,
        br.target,
        br.diff - k * inv_l,
    )
    if br.target < inv_l:  # l alone overshoots; no representation keeps it
        return Expansion([], [drop_all])
    if br.target == inv_l:  # committing l finishes a representation outright
        solved = Branch(
            EMPTY,
            br.reserved.add(Multiset._unsafe(((l, 1),), 1)),
            br.original_target,
            _ZERO,
            _ZERO,
            None,
        )
        return Expansion([solved], [drop_all])
    rest = Multiset._unsafe(((l, k - 1),) + pairs[1:] if k > 1 else pairs[1:], br.pool.size - 1)
    keep_one = _normalized(
        rest,
        br.reserved.add(Multiset._unsafe(((l, 1),), 1)),
        br.original_target,
        br.target - inv_l,
        br.diff,
        br.prime_power,
    )
    return Expansion([], [keep_one, drop_all])


def expand_fractional_diff(br: Branch) -> Expansion:
    """Split on the multiples of p**s when diff is a positive non-integer.

    Every admissible removal set is taken out of the pool and the remaining
    multiples are committed; the bystanders (non-multiples) stay in the pool.
    Subbranches are normalized, then solved ones are separated out and
    overshot ones (negative diff or target) dropped.
    """
    rt = removal_residue(br)
    if rt is None:
        return Expansion([], [])
    multiples, rest = br.pool.split_multiples(rt.p**rt.s)
    mult_sum = multiples.reciprocal_sum()
    lo = mult_sum - br.target  # any smaller removal drives the target negative
    found: list[Branch] = []
    pending: list[Branch] = []
    for sub, sub_sum in _admissible_removals(
        multiples, rt, lo if lo > 0 else None, br.diff
    ):
        child = _normalized(
            rest,
            br.reserved.add(multiples.subtract(sub)),
            br.original_target,
            br.target - (mult_sum - sub_sum),
            br.diff - sub_sum,
        )
        if child.target >= 0:
            if child.diff.numerator == 0:
                found.append(child)
            elif child.diff.numerator > 0:
                pending.append(child)
    return Expansion(found, pending)
