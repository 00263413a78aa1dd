"""Exact rational arithmetic and the number-theoretic helpers the search needs.

Everything here is integer-exact: rationals are GMP-backed `gmpy2.mpq` values
(always in lowest terms, denominator positive), and factorization is trial
division over a cached prime sieve.  No floats anywhere; several search
invariants are congruence statements that floating point would destroy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Union

import gmpy2
from gmpy2 import mpq, mpz

RationalLike = Union[int, str, Fraction, mpq]

# Trial division covers primes up to this bound; larger cofactors are rare
# (nothing the search itself produces ever exceeds it) and go to sympy.
_SIEVE_BOUND = 1_000_000
_primes: Optional[list[int]] = None


class PrimePower(NamedTuple):
    """A prime power p**exponent, compared and reported by its value."""

    p: int
    exponent: int
    value: int


def to_rational(x: RationalLike) -> mpq:
    """Coerce an int, "p/q" string, Fraction, or mpq to an exact rational."""
    if isinstance(x, mpq):
        return x
    if isinstance(x, float):
        # binary floats are inexact stand-ins; make the caller be explicit
        raise ValueError(f"not a rational: {x!r} (use a string or Fraction)")
    try:
        if isinstance(x, str):
            return mpq(x.strip())
        return mpq(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"not a rational: {x!r}") from exc


def make_rational(num: int, den: int = 1) -> mpq:
    """Exact rational num/den in lowest terms; den must be nonzero."""
    if den == 0:
        raise ValueError("zero denominator")
    return mpq(num, den)


def reciprocal_sum(denoms: Iterable[int]) -> mpq:
    """Sum of 1/d over denoms, with multiplicity; denoms must be positive."""
    total = mpq(0)
    for d in denoms:
        if d <= 0:
            raise ValueError(f"denominator must be positive, got {d}")
        total += mpq(1, d)
    return total


def reciprocal_excess(denoms: Iterable[int], target: RationalLike) -> mpq:
    """reciprocal_sum(denoms) - target: zero exactly on a representation."""
    return reciprocal_sum(denoms) - to_rational(target)


def _sieve_primes() -> list[int]:
    global _primes
    if _primes is None:
        flags = bytearray([1]) * (_SIEVE_BOUND + 1)
        flags[0] = flags[1] = 0
        for i in range(2, int(_SIEVE_BOUND**0.5) + 1):
            if flags[i]:
                flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
        _primes = [i for i, f in enumerate(flags) if f]
    return _primes


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of a positive integer as (p, exponent) pairs, p ascending.

    Trial division by the sieve, stopping as soon as the cofactor is 1 or
    provably prime; cofactors with no factor <= 1e6 fall back to sympy.
    """
    if n <= 0:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    n = mpz(n)
    out: list[tuple[int, int]] = []
    if n == 1:
        return out
    for p in _sieve_primes():
        if n % p == 0:
            n, e = gmpy2.remove(n, p)
            out.append((p, int(e)))
            if n == 1:
                return out
        if p * p > n:
            # remaining cofactor is prime
            out.append((int(n), 1))
            return out
    if gmpy2.is_prime(n):
        out.append((int(n), 1))
        return out
    import sympy  # deferred: only giant semiprime-style cofactors land here

    for p, e in sorted(sympy.factorint(int(n)).items()):
        out.append((int(p), int(e)))
    return out


def greatest_prime_power(q: RationalLike) -> Optional[PrimePower]:
    """Largest prime power dividing the denominator of q, by value.

    The comparison is by value, not by prime: for denominator 56 = 2**3 * 7
    the answer is 2**3 = 8.  Integers (denominator 1) have none.
    """
    den = to_rational(q).denominator
    if den == 1:
        return None
    best_p = best_e = best_v = 0
    for p, e in factorize(int(den)):
        v = p**e
        if v > best_v:
            best_p, best_e, best_v = p, e, v
    return PrimePower(best_p, best_e, best_v)


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo a prime p, in [1, p)."""
    if p < 2:
        raise ValueError(f"modulus must be at least 2, got {p}")
    try:
        return int(gmpy2.invert(a, p))
    except ZeroDivisionError as exc:
        raise ValueError(f"{a} is not invertible modulo {p}") from exc
