"""Exhaustive search for unit-fraction representations over a fixed pool.

Given a finite multiset of positive integers and a rational target, find
every submultiset whose reciprocals sum exactly to the target.  The search
branches on prime-power divisibility of the shortfall's denominator, which
prunes aggressively enough to handle pools like {1..469} exactly.
"""

from .applications import (
    DensestResult,
    RangeRow,
    choose_multiplier,
    rank_multipliers,
    second_largest_witness,
    smallest_max_denominator,
    verify_second_largest_range,
)
from .branch import Branch, make_branch, normalize, remove, reserve
from .expand import (
    Expansion,
    ResidueTarget,
    expand,
    expand_fractional_diff,
    expand_integer_diff,
    matching_submultisets,
    removal_residue,
)
from .multiset import Multiset
from .rationals import (
    PrimePower,
    factorize,
    greatest_prime_power,
    make_rational,
    mod_inverse,
    reciprocal_excess,
    reciprocal_sum,
    to_rational,
)
from .search import (
    SearchStats,
    all_representations,
    brute_force_representations,
    first_representation,
    iter_representations,
)

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "DensestResult",
    "Expansion",
    "Multiset",
    "PrimePower",
    "RangeRow",
    "ResidueTarget",
    "SearchStats",
    "all_representations",
    "brute_force_representations",
    "choose_multiplier",
    "expand",
    "expand_fractional_diff",
    "expand_integer_diff",
    "factorize",
    "first_representation",
    "greatest_prime_power",
    "iter_representations",
    "make_branch",
    "make_rational",
    "matching_submultisets",
    "mod_inverse",
    "normalize",
    "rank_multipliers",
    "reciprocal_excess",
    "reciprocal_sum",
    "remove",
    "removal_residue",
    "reserve",
    "second_largest_witness",
    "smallest_max_denominator",
    "to_rational",
    "verify_second_largest_range",
]
