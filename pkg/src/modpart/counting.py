"""Counting k-subsets of Z/nZ by prescribed element sum.

t_count(n, k, s) is the closed form

    T(n, k, s) = (1/n) * sum over d | gcd(n, k) of
                 (-1)^(k - k/d) * M(k)_{gcd(k,s), d} * C(n/d, k/d)

with M(k) entries supplied by the divisor-matrix closed form.  brute_force
enumerates subsets directly and is the ground-truth oracle for everything
else in this module; the division by n in the closed form is asserted exact,
since a remainder can only mean the formula path is broken.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, gcd

from .divmatrix import entry_closed_form
from .numtheory import binomial, divisors, moebius, totient

DEFAULT_ENUMERATION_BUDGET = 10_000_000


class EnumerationBudgetError(Exception):
    """Raised when a brute-force enumeration would exceed its subset budget."""


@dataclass(frozen=True)
class CountQuery:
    """A (n, k, s) request; s may be any integer and is reduced mod n."""

    n: int
    k: int
    s: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k must satisfy 0 <= k <= n, got k={self.k}, n={self.n}")

    def count(self) -> int:
        return t_count(self.n, self.k, self.s)


def _validate(n: int, k: int, s: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")


@lru_cache(maxsize=1 << 16)
def _t_eval(n: int, k: int, t: int) -> int:
    # t = gcd(k, s mod n); the formula depends on s only through t.
    total = 0
    for d in divisors(gcd(n, k)):
        sign = -1 if (k - k // d) % 2 else 1
        total += sign * entry_closed_form(k, t, d) * binomial(n // d, k // d)
    if total % n:
        raise AssertionError(f"closed form not divisible by n for ({n},{k},t={t})")
    return total // n


def t_count(n: int, k: int, s: int) -> int:
    """Number of k-element subsets of Z/nZ whose elements sum to s mod n.

    k = 0 is the empty set: 1 when s = 0 mod n, else 0.
    """
    _validate(n, k, s)
    if k == 0:
        return 1 if s % n == 0 else 0
    return _t_eval(n, k, gcd(k, s % n))


def t_zero(n: int, k: int) -> int:
    """T(n, k, 0) via the totient-weighted divisor sum, an independent route:

    (1/n) * sum over s | gcd(n, k) of (-1)^(k - k/s) * phi(s) * C(n/s, k/s).
    """
    _validate(n, k, 0)
    if k == 0:
        return 1
    total = 0
    for d in divisors(gcd(n, k)):
        sign = -1 if (k - k // d) % 2 else 1
        total += sign * totient(d) * binomial(n // d, k // d)
    if total % n:
        raise AssertionError(f"zero-sum formula not divisible by n for ({n},{k})")
    return total // n


def brute_force(
    n: int, k: int, s: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """Ground truth: enumerate k-subsets of {0..n-1} and count sums = s mod n."""
    _validate(n, k, s)
    if comb(n, k) > budget:
        raise EnumerationBudgetError(f"C({n},{k}) exceeds budget {budget}")
    target = s % n
    return sum(1 for c in combinations(range(n), k) if sum(c) % n == target)


def brute_force_spectrum(
    n: int, k: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> tuple[int, ...]:
    """Counts for every residue at once: entry s is |{k-subsets with sum = s}|.

    Same enumeration as brute_force, tallied in a single pass; sweeps over all
    s should use this instead of n separate scans.
    """
    _validate(n, k, 0)
    if comb(n, k) > budget:
        raise EnumerationBudgetError(f"C({n},{k}) exceeds budget {budget}")
    counts = [0] * n
    for c in combinations(range(n), k):
        counts[sum(c) % n] += 1
    return tuple(counts)


def canonical_s(n: int, k: int, s: int) -> int:
    """The divisor of k that labels the class of s: reduce s mod gcd(n, k)
    into {1..gcd(n,k)} (zero lifts to the modulus), then take gcd with k."""
    _validate(n, k, s)
    if k == 0:
        return 0
    m = gcd(n, k)
    r = s % m
    if r == 0:
        r = m
    return gcd(k, r)


def complement_transfer(n: int, k: int, s: int) -> CountQuery:
    """Equivalent query on the complementary size n-k.

    Complementing a k-subset preserves the count with s unchanged for odd n
    and with s shifted by n/2 for even n (the total sum of Z/nZ).
    """
    _validate(n, k, s)
    if k == n:
        raise ValueError("complement transfer requires k < n")
    shift = n // 2 if n % 2 == 0 else 0
    return CountQuery(n, n - k, (s + shift) % n)


def hadjicostas_rhs(n: int, k: int, s: int) -> int:
    """For s | k: sum over d | gcd(n, s) of (-1)^(k-k/d) * T(n/d, k/d, 1).

    Equals t_count(n, k, s); implemented independently so the identity can be
    checked rather than assumed.
    """
    _validate(n, k, s)
    if k < 1 or s < 1 or k % s:
        raise ValueError(f"s={s} must be a positive divisor of k={k}")
    total = 0
    for d in divisors(gcd(n, s)):
        sign = -1 if (k - k // d) % 2 else 1
        total += sign * t_count(n // d, k // d, 1)
    return total


def necklaces(n: int, k: int) -> int:
    """Binary necklaces with k black and n-k white beads (Burnside):

    N(n, k) = (1/n) * sum over d | gcd(n, k) of phi(d) * C(n/d, k/d).
    """
    _validate(n, k, 0)
    total = sum(totient(d) * binomial(n // d, k // d) for d in divisors(gcd(n, k)))
    if total % n:
        raise AssertionError(f"necklace count not divisible by n for ({n},{k})")
    return total // n


def lyndon(n: int, k: int) -> int:
    """Aperiodic necklaces (binary Lyndon words) with k black beads:

    L(n, k) = (1/n) * sum over d | gcd(n, k) of mu(d) * C(n/d, k/d).
    """
    _validate(n, k, 0)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    total = sum(moebius(d) * binomial(n // d, k // d) for d in divisors(gcd(n, k)))
    if total % n:
        raise AssertionError(f"Lyndon count not divisible by n for ({n},{k})")
    return total // n


def necklace_identity_check(n: int, k: int) -> bool:
    """True iff N(n,k) matches T(n,k,0) for odd k and T(n,k,k/2) for even k."""
    if not n > k > 0:
        raise ValueError("requires n > k > 0")
    s = 0 if k % 2 else k // 2
    return necklaces(n, k) == t_count(n, k, s)


def lyndon_identity_check(n: int, k: int) -> bool:
    """True iff L(n,k) matches T(n,k,2) for k = 2 mod 4 and T(n,k,1) otherwise."""
    if not n > k > 0:
        raise ValueError("requires n > k > 0")
    s = 2 if k % 4 == 2 else 1
    return lyndon(n, k) == t_count(n, k, s)


def zero_sum_triples(n: int) -> list[frozenset[int]]:
    """All 3-subsets of Z/nZ with zero sum mod n."""
    return [
        frozenset(c) for c in combinations(range(n), 3) if sum(c) % n == 0
    ]


def line_pair_conics(n: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Unordered pairs of disjoint zero-sum 3-subsets of Z/nZ.

    Each pair covers six distinct points; for n < 6 no pair fits and the
    count is 0.  Enumeration over the zero-sum triples.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if comb(n, 3) > budget:
        raise EnumerationBudgetError(f"C({n},3) exceeds budget {budget}")
    masks = [
        sum(1 << x for x in triple) for triple in zero_sum_triples(n)
    ]
    count = 0
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a & b == 0:
                count += 1
    return count


def irreducible_conics(n: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> int:
    """Zero-sum 6-subsets not splitting into two zero-sum triples:
    t_count(n, 6, 0) - line_pair_conics(n), defined for n >= 9."""
    if n < 9:
        raise ValueError(f"n must be >= 9, got {n}")
    return t_count(n, 6, 0) - line_pair_conics(n, budget)
