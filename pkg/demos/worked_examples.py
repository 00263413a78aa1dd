"""A guided tour of the search on instances small enough to follow by hand.

Run:  python3 demos/worked_examples.py
"""

from unitfrac import SearchStats, all_representations
from unitfrac.branch import make_branch, remove, reserve
from unitfrac.expand import matching_submultisets, removal_residue
from unitfrac.multiset import Multiset

print("=== all submultisets of {2,3,4,12} whose reciprocals sum to 1/3 ===")
for rep in all_representations([2, 3, 4, 12], "1/3"):
    print("  ", rep)

print()
print("=== how one expansion step works: {1,7,14,21,28} against 1 ===")
br = make_branch([1, 7, 14, 21, 28], 1)
print("surplus R(D) - r =", br.diff, "-> attack the prime power", br.prime_power.value)

rt = removal_residue(br)
print(f"inverse sums of removed cofactors must hit {rt.residue} mod {rt.p}")

multiples, rest = br.pool.split_multiples(rt.p**rt.s)
for sub in matching_submultisets(multiples, rt):
    child = reserve(remove(br, sub), multiples.subtract(sub))
    print(
        f"  remove [{sub}] reserve [{child.reserved}]"
        f" -> owes {child.target}, surplus {child.diff}"
    )
print("only the last child survives; the answer is",
      all_representations([1, 7, 14, 21, 28], 1)[0])

print()
print("=== an unsolvable instance: {2,2,4,4} against 9/8 ===")
print("surplus:", make_branch([2, 2, 4, 4], "9/8").diff)
print("its denominator needs 8 = 2**3, but no pool element is a multiple of 8,")
print("so no submultiset can work:", all_representations([2, 2, 4, 4], "9/8"))

print()
print("=== a bigger multiset, with duplicates: target 3/2 ===")
stats = SearchStats()
for rep in all_representations("2 2 3 3 4 5 6 6 7 8 12", "3/2", stats=stats):
    print("  ", rep)
print("found", stats.representations_found, "after expanding",
      stats.branches_expanded, "branches")

print()
print("=== reciprocals of squares: 1/4 + 1/9 + ... = 1/2 ===")
squares = [i * i for i in range(1, 36)]
print("smallest workable square set:", all_representations(squares, "1/2")[0])
print("(with squares only up to 34**2 there is none:",
      all_representations(squares[:-1], "1/2") == [], ")")
