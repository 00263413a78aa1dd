"""Drivers built on the search: densest-interval bounds and tail-pair witnesses.

Two questions the exhaustive search answers directly:

* For a target r, what is the smallest n such that some subset of {1..n}
  has reciprocal sum exactly r?  (`smallest_max_denominator`)
* For a denominator d, is there a representation of 1 whose second-largest
  denominator is exactly d?  Writing the largest as c*d, the remaining
  denominators must represent 1 - 1/d - 1/(c*d), so a good c is one that
  keeps that rational's denominator free of large prime powers.
  (`second_largest_witness`, `verify_second_largest_range`)
"""

from __future__ import annotations

import heapq
from typing import Callable, NamedTuple, Optional, Sequence

from gmpy2 import mpq

from .multiset import Multiset
from .rationals import RationalLike, greatest_prime_power, to_rational
from .search import SearchStats, all_representations, first_representation


class DensestResult(NamedTuple):
    n: int
    witnesses: list[Multiset]


class RangeRow(NamedTuple):
    d: int
    c: Optional[int]  # None when no witness was found within the limits
    witness: Optional[Multiset]


def smallest_max_denominator(
    target: RationalLike,
    n_start: int = 1,
    n_max: int = 10_000,
    all_witnesses: bool = True,
    stats: Optional[SearchStats] = None,
    on_progress: Optional[Callable[[SearchStats], None]] = None,
    progress_every: int = 100_000,
) -> Optional[DensestResult]:
    """Smallest n in [n_start, n_max] with a representation of target in {1..n}.

    Scans upward, so when n_start is at most the true minimum the result is
    proved minimal by the failed searches below it.  Returns all witnesses at
    the winning n (canonical order), or just the first found when
    all_witnesses is false.  None when the whole range fails.
    """
    r = to_rational(target)
    if r <= 0:
        raise ValueError(f"target must be positive, got {r}")
    if n_start < 1:
        raise ValueError(f"n_start must be at least 1, got {n_start}")
    for n in range(n_start, n_max + 1):
        pool = Multiset.from_range(1, n)
        hit = first_representation(pool, r, stats, on_progress, progress_every)
        if hit is None:
            continue
        if all_witnesses:
            witnesses = all_representations(pool, r, stats, on_progress, progress_every)
        else:
            witnesses = [hit]
        return DensestResult(n, witnesses)
    return None


def _tail_remainder(d: int, c: int) -> mpq:
    """1 - 1/d - 1/(c*d), what the small denominators must add up to."""
    return mpq(c * d - c - 1, c * d)


def rank_multipliers(d: int, c_max: int, k: Optional[int] = None) -> list[tuple[int, int]]:
    """(score, c) for c in [2, c_max], best first; k truncates the list.

    The score is the largest prime-power factor of the denominator of
    1 - 1/d - 1/(c*d); small scores make the remaining search easy.  Ties
    break toward smaller c.
    """
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if c_max < 2:
        raise ValueError(f"c_max must be at least 2, got {c_max}")
    scored = ((_score(d, c), c) for c in range(2, c_max + 1))
    if k is None:
        return sorted(scored)
    return heapq.nsmallest(k, scored)


def _score(d: int, c: int) -> int:
    pp = greatest_prime_power(_tail_remainder(d, c))
    return pp.value if pp else 1


def choose_multiplier(d: int, c_max: int) -> int:
    """The c in [2, c_max] whose remainder denominator is smoothest."""
    return rank_multipliers(d, c_max, k=1)[0][1]


def second_largest_witness(
    d: int,
    c: int,
    bound: int,
    stats: Optional[SearchStats] = None,
) -> Optional[Multiset]:
    """A representation of 1 with second-largest element d and largest c*d.

    Searches denominators {2..bound} for the remainder 1 - 1/d - 1/(c*d);
    on success the found set plus {d, c*d} is the witness.  The geometry
    must leave d in second place: bound < d < c*d.
    """
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if c * d <= d:
        raise ValueError(f"largest element c*d={c * d} must exceed d={d}")
    if bound >= d:
        raise ValueError(f"bound {bound} would allow elements at or above d={d}")
    rep = first_representation(Multiset.from_range(2, bound), _tail_remainder(d, c), stats)
    if rep is None:
        return None
    witness = rep.add(Multiset((d, c * d)))
    assert witness.elements()[-2] == d, "geometry guarantees d is second largest"
    return witness


def verify_second_largest_range(
    d_lo: int,
    d_hi: int,
    c_max: int = 1000,
    bounds: Sequence[int] = (100,),
    candidates: int = 10,
    stats: Optional[SearchStats] = None,
) -> list[RangeRow]:
    """Hunt a second-largest witness for every d in [d_lo, d_hi].

    For each d the multipliers are tried best-score first (at most
    `candidates` of them), each against the escalating bound schedule
    (clamped below d).  A row with c=None records an honest failure within
    the given limits.  An empty range yields an empty report.
    """
    if d_lo > d_hi:
        return []
    if d_lo < 2:
        raise ValueError(f"d must be at least 2, got {d_lo}")
    if candidates < 1:
        raise ValueError(f"need at least one candidate, got {candidates}")
    if not bounds or any(b < 1 for b in bounds):
        raise ValueError(f"bounds must be positive, got {bounds!r}")
    rows: list[RangeRow] = []
    for d in range(d_lo, d_hi + 1):
        row = RangeRow(d, None, None)
        for _, c in rank_multipliers(d, c_max, candidates):
            found = None
            for b in bounds:
                eff = min(b, d - 1)
                if eff < 2:
                    continue
                found = second_largest_witness(d, c, eff, stats)
                if found is not None:
                    break
            if found is not None:
                row = RangeRow(d, c, found)
                break
        rows.append(row)
    return rows
