"""Exact elementary number theory: factorization, mu, phi, divisors, binomials.

Everything here is integer-exact and pure.  Factorization and divisor lists
are memoized in bounded LRU caches because the counting layers query the
same k over and over during sequence sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

DEFAULT_CACHE_SIZE = 1 << 16

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition: value = prod(p**e for p, e in factors).

    Primes are strictly increasing; factorize(1) carries an empty tuple.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"positive integer required, got {self.value}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def prime_power_parts(self) -> tuple[int, ...]:
        """The maximal prime powers p**e dividing the value, ascending in p."""
        return tuple(p**e for p, e in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (witness set valid far beyond 1e7 scope)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize_impl(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    value = n
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    # Trial division over 6k+-1; bail out early once the cofactor is prime.
    f = 5
    while f * f <= n:
        if n % f and n % (f + 2):
            if is_prime(n):
                break
            f += 6
            continue
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                factors.append((p, e))
        f += 6
    if n > 1:
        factors.append((n, 1))
    factors.sort()
    return Factorization(value, tuple(factors))


def _divisors_impl(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


_factorize_cached = lru_cache(maxsize=DEFAULT_CACHE_SIZE)(_factorize_impl)
_divisors_cached = lru_cache(maxsize=DEFAULT_CACHE_SIZE)(_divisors_impl)


def set_cache_capacity(maxsize: int) -> None:
    """Rebuild the factorize/divisors memo caches with a new bound."""
    global _factorize_cached, _divisors_cached
    _factorize_cached = lru_cache(maxsize=maxsize)(_factorize_impl)
    _divisors_cached = lru_cache(maxsize=maxsize)(_divisors_impl)


def factorize(n: int) -> Factorization:
    """Prime-power factorization of n >= 1; factorize(1) has no factors."""
    return _factorize_cached(n)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n >= 1, strictly ascending."""
    return _divisors_cached(n)


def moebius(n: int) -> int:
    """mu(n): 1 at n=1, 0 if a square divides n, else (-1)**(#prime factors)."""
    fac = factorize(n)
    if any(e >= 2 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def totient(n: int) -> int:
    """phi(n) = n * prod(1 - 1/p) over primes p | n, computed exactly."""
    return reduce(lambda acc, pe: acc // pe[0] * (pe[0] - 1), factorize(n).factors, n)


def binomial(n: int, k: int) -> int:
    """C(n, k) exactly, with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
