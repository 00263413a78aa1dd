"""Depth-first drivers over the expansion step, plus a brute-force oracle.

`iter_representations` streams solutions in a fixed deterministic order (the
expansion step orders its subbranches, and the stack explores them first to
last), so "first representation" is well defined and two runs of the same
search are identical.  `all_representations` exhausts the space and returns
the canonical sorted collection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Union

from gmpy2 import mpq

from .branch import make_branch
from .expand import expand
from .multiset import Multiset
from .rationals import RationalLike, to_rational

Denoms = Union[Multiset, Iterable[int], str]

# An instance this size enumerates fine; anything bigger is a misuse of the
# oracle (use the real search).
BRUTE_FORCE_LIMIT = 2**20


@dataclass
class SearchStats:
    branches_expanded: int = 0
    representations_found: int = 0


def _as_multiset(denoms: Denoms) -> Multiset:
    if isinstance(denoms, Multiset):
        return denoms
    if isinstance(denoms, str):
        return Multiset.parse(denoms)
    return Multiset(denoms)


def iter_representations(
    denoms: Denoms,
    target: RationalLike,
    stats: Optional[SearchStats] = None,
    on_progress: Optional[Callable[[SearchStats], None]] = None,
    progress_every: int = 100_000,
) -> Iterator[Multiset]:
    """Yield every representation of target over denoms, in discovery order.

    The target must be nonnegative.  `stats` is updated in place while the
    search runs; `on_progress` (if given) sees it every `progress_every`
    expansions and must not mutate anything.
    """
    pool = _as_multiset(denoms)
    r = to_rational(target)
    if r < 0:
        raise ValueError(f"target must be nonnegative, got {r}")
    if stats is None:
        stats = SearchStats()
    stack = [make_branch(pool, r)]
    expanded = stats.branches_expanded
    while stack:
        found, pending = expand(stack.pop())
        expanded += 1
        stats.branches_expanded = expanded
        if found:
            stats.representations_found += len(found)
            for br in found:
                yield br.representation()
        if pending:
            stack.extend(reversed(pending))
        if on_progress is not None and expanded % progress_every == 0:
            on_progress(stats)


def all_representations(
    denoms: Denoms,
    target: RationalLike,
    stats: Optional[SearchStats] = None,
    on_progress: Optional[Callable[[SearchStats], None]] = None,
    progress_every: int = 100_000,
) -> list[Multiset]:
    """Every representation, each ascending, collection sorted lexicographically."""
    reps = list(iter_representations(denoms, target, stats, on_progress, progress_every))
    reps.sort(key=Multiset.elements)
    return reps


def first_representation(
    denoms: Denoms,
    target: RationalLike,
    stats: Optional[SearchStats] = None,
    on_progress: Optional[Callable[[SearchStats], None]] = None,
    progress_every: int = 100_000,
) -> Optional[Multiset]:
    """The first representation in search order, or None if there is none."""
    return next(
        iter_representations(denoms, target, stats, on_progress, progress_every), None
    )


def brute_force_representations(
    denoms: Denoms, target: RationalLike, limit: int = BRUTE_FORCE_LIMIT
) -> list[Multiset]:
    """Independent oracle: try every distinct submultiset, no pruning at all.

    Refuses instances with more than `limit` submultisets.  Output matches
    `all_representations` (canonical order) on any instance it accepts.
    """
    pool = _as_multiset(denoms)
    r = to_rational(target)
    if r < 0:
        raise ValueError(f"target must be nonnegative, got {r}")
    total = 1
    for _, c in pool.pairs:
        total *= c + 1
        if total > limit:
            raise ValueError(f"instance has over {limit} submultisets; refusing")
    values = [v for v, _ in pool.pairs]
    recips = [mpq(1, v) for v in values]
    hits: list[Multiset] = []
    for counts in itertools.product(*(range(c + 1) for _, c in pool.pairs)):
        if sum(n * recips[i] for i, n in enumerate(counts)) == r:
            picked = tuple((values[i], n) for i, n in enumerate(counts) if n)
            hits.append(Multiset._unsafe(picked, sum(counts)))
    hits.sort(key=Multiset.elements)
    return hits
