"""Subset and multiset sum counts over arbitrary finite abelian groups.

A group is presented by invariant factors (m_1, ..., m_c) with m_{i+1} | m_i
(empty list = trivial group); its exponent is n = m_1.  The count of
k-element subsets summing to a given element is an exact divisor-lattice
Fourier inversion

    T(A, k, a) = (1/|A|) * sum over d | n of chi_k(d) *
                 sum over e | d of mu(d/e) * |A_e| * [a in eA]

where chi_k(d) = (-1)^((d-1)k/d) * C(|A|/d, k/d) for d | k (0 otherwise) is
the class-function trace on k-th exterior powers, A_e is the e-torsion
subgroup, and membership in eA is the coordinatewise divisibility test under
the self-dual identification of the group with its character group.  The
multiset variant replaces chi_k by the symmetric-power character chi_k_plus.
Everything stays in exact integer arithmetic; brute-force enumerations
provide the ground truth in tests.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb, gcd, lcm
from typing import Iterator

from .counting import DEFAULT_ENUMERATION_BUDGET, EnumerationBudgetError
from .numtheory import binomial, divisors, factorize, moebius


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group in invariant-factor form, factors >= 2 descending."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(m) for m in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for m in factors:
            if m < 2:
                raise ValueError(f"invariant factors must be >= 2, got {m}")
        for a, b in zip(factors, factors[1:]):
            if a % b:
                raise ValueError(f"divisibility chain broken: {b} does not divide {a}")

    @classmethod
    def from_cyclic_orders(cls, orders) -> "AbelianGroup":
        """Canonicalize an arbitrary product of cyclic groups to invariant factors."""
        return cls(canonical_invariant_factors(orders))

    @property
    def order(self) -> int:
        total = 1
        for m in self.invariant_factors:
            total *= m
        return total

    @property
    def exponent(self) -> int:
        return self.invariant_factors[0] if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, coordinates) -> "GroupElement":
        return GroupElement(self, tuple(coordinates))

    def elements(self) -> Iterator["GroupElement"]:
        for coords in product(*(range(m) for m in self.invariant_factors)):
            yield GroupElement(self, coords)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "Z/1"
        return " x ".join(f"Z/{m}" for m in self.invariant_factors)


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coordinates: tuple[int, ...]

    def __post_init__(self) -> None:
        mods = self.group.invariant_factors
        if len(self.coordinates) != len(mods):
            raise ValueError(
                f"expected {len(mods)} coordinates, got {len(self.coordinates)}"
            )
        reduced = tuple(a % m for a, m in zip(self.coordinates, mods))
        object.__setattr__(self, "coordinates", reduced)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements belong to different groups")
        return GroupElement(
            self.group,
            tuple(a + b for a, b in zip(self.coordinates, other.coordinates)),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-a for a in self.coordinates))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def scale(self, factor: int) -> "GroupElement":
        return GroupElement(self.group, tuple(factor * a for a in self.coordinates))

    def order(self) -> int:
        return lcm(
            *(m // gcd(m, a) for m, a in zip(self.group.invariant_factors, self.coordinates)),
            1,
        )


def canonical_invariant_factors(orders) -> tuple[int, ...]:
    """Invariant factors of the product of cyclic groups of the given orders."""
    by_prime: dict[int, list[int]] = {}
    for m in orders:
        m = int(m)
        if m < 1:
            raise ValueError(f"cyclic orders must be >= 1, got {m}")
        for p, e in factorize(m).factors:
            by_prime.setdefault(p, []).append(p**e)
    for parts in by_prime.values():
        parts.sort(reverse=True)
    depth = max((len(parts) for parts in by_prime.values()), default=0)
    out = []
    for i in range(depth):
        factor = 1
        for parts in by_prime.values():
            if i < len(parts):
                factor *= parts[i]
        out.append(factor)
    return tuple(out)


def canonicalize_with_element(orders, coordinates) -> tuple[AbelianGroup, GroupElement]:
    """Canonicalize a cyclic product and carry an element along the
    isomorphism: split every coordinate into prime-power residues, regroup
    the prime-power cyclic factors into invariant factors, and reassemble
    each new coordinate by the Chinese remainder theorem."""
    orders = [int(o) for o in orders]
    coordinates = [int(a) for a in coordinates]
    if len(orders) != len(coordinates):
        raise ValueError("one coordinate per cyclic order required")
    by_prime: dict[int, list[tuple[int, int]]] = {}
    for o, a in zip(orders, coordinates):
        if o < 1:
            raise ValueError(f"cyclic orders must be >= 1, got {o}")
        for p, e in factorize(o).factors:
            q = p**e
            by_prime.setdefault(p, []).append((q, a % q))
    for parts in by_prime.values():
        parts.sort(key=lambda part: -part[0])
    depth = max((len(parts) for parts in by_prime.values()), default=0)
    factors = []
    coords = []
    for i in range(depth):
        level = [parts[i] for parts in by_prime.values() if i < len(parts)]
        m = 1
        for q, _ in level:
            m *= q
        x = 0
        for q, v in level:
            cofactor = m // q
            x += v * cofactor * pow(cofactor, -1, q)
        factors.append(m)
        coords.append(x % m)
    group = AbelianGroup(tuple(factors))
    if group.invariant_factors != canonical_invariant_factors(orders):
        raise AssertionError("canonicalization paths disagree")
    return group, group.element(coords)


def invariant_factor_chains(order: int) -> Iterator[tuple[int, ...]]:
    """All invariant-factor presentations with the given group order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")

    def rec(remaining: int, bound: int | None) -> Iterator[tuple[int, ...]]:
        if remaining == 1:
            yield ()
            return
        for m in divisors(remaining):
            if m >= 2 and (bound is None or bound % m == 0):
                for rest in rec(remaining // m, m):
                    yield (m,) + rest

    yield from rec(order, None)


def groups_up_to(max_order: int) -> Iterator[AbelianGroup]:
    """Every finite abelian group of order <= max_order, one per isomorphism class."""
    for order in range(1, max_order + 1):
        for chain in invariant_factor_chains(order):
            yield AbelianGroup(chain)


def _signed_binomial(m: int, j: int) -> int:
    # C(m, j) for arbitrary integer m (falling factorial over j!), j >= 0
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= m - i
    den = 1
    for i in range(2, j + 1):
        den *= i
    if num % den:
        raise AssertionError("falling factorial must be divisible by j!")
    return num // den


def chi_k(a_group: AbelianGroup, k: int, d: int) -> int:
    """Trace on the k-th exterior power at elements of order d:
    (-1)^((d-1)(k/d)) * C(|A|/d, k/d) when d | k, else 0."""
    n = a_group.exponent
    if d < 1 or n % d:
        raise ValueError(f"d={d} must divide the exponent {n}")
    if not 0 <= k <= a_group.order:
        raise ValueError(f"k must satisfy 0 <= k <= |A|, got {k}")
    if k % d:
        return 0
    sign = -1 if ((d - 1) * (k // d)) % 2 else 1
    return sign * binomial(a_group.order // d, k // d)


def chi_k_plus(a_group: AbelianGroup, k: int, d: int) -> int:
    """Trace on the k-th symmetric power: C(|A|/d + k/d - 1, k/d) when d | k,
    else 0.  The equivalent negative-binomial form is asserted on the way."""
    n = a_group.exponent
    if d < 1 or n % d:
        raise ValueError(f"d={d} must divide the exponent {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k % d:
        return 0
    j = k // d
    size = a_group.order // d
    value = binomial(size + j - 1, j)
    alt = (-1 if j % 2 else 1) * _signed_binomial(-size, j)
    if value != alt:
        raise AssertionError("the two multiset character forms disagree")
    return value


def subgroup_size(a_group: AbelianGroup, d: int) -> int:
    """|A_d|, the number of elements killed by d: product of gcd(d, m_i)."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    size = 1
    for m in a_group.invariant_factors:
        size *= gcd(d, m)
    return size


def in_d_image(a_group: AbelianGroup, a: GroupElement, d: int) -> bool:
    """Whether a lies in dA: every coordinate divisible by gcd(d, m_i)."""
    if a.group != a_group:
        raise ValueError("element belongs to a different group")
    return all(
        coord % gcd(d, m) == 0
        for coord, m in zip(a.coordinates, a_group.invariant_factors)
    )


def d_star(a_group: AbelianGroup, a: GroupElement) -> int:
    """The largest divisor d of the exponent with a in dA."""
    best = 1
    for d in divisors(a_group.exponent):
        if d > best and in_d_image(a_group, a, d):
            best = d
    return best


def _lattice_inversion(a_group: AbelianGroup, character, a: GroupElement) -> int:
    order = a_group.order
    total = 0
    memberships = {e: in_d_image(a_group, a, e) for e in divisors(a_group.exponent)}
    for d in divisors(a_group.exponent):
        chi = character(d)
        if chi == 0:
            continue
        inner = 0
        for e in divisors(d):
            if memberships[e]:
                inner += moebius(d // e) * subgroup_size(a_group, e)
        total += chi * inner
    if total % order:
        raise AssertionError("Fourier inversion produced a non-integer count")
    return total // order


def t_abelian(a_group: AbelianGroup, k: int, a: GroupElement) -> int:
    """Number of k-element subsets of the group summing to a, exactly."""
    if not 0 <= k <= a_group.order:
        raise ValueError(f"k must satisfy 0 <= k <= |A|, got {k}")
    return _lattice_inversion(a_group, lambda d: chi_k(a_group, k, d), a)


def t_plus_abelian(a_group: AbelianGroup, k: int, a: GroupElement) -> int:
    """Number of size-k multisets of the group summing to a, exactly."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _lattice_inversion(a_group, lambda d: chi_k_plus(a_group, k, d), a)


def brute_force_abelian(
    a_group: AbelianGroup,
    k: int,
    a: GroupElement,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Ground truth by enumerating all k-element subsets."""
    if not 0 <= k <= a_group.order:
        raise ValueError(f"k must satisfy 0 <= k <= |A|, got {k}")
    if comb(a_group.order, k) > budget:
        raise EnumerationBudgetError(f"C({a_group.order},{k}) exceeds budget {budget}")
    if k == 0:
        return 1 if a == a_group.identity() else 0
    mods = a_group.invariant_factors
    target = a.coordinates
    count = 0
    for subset in combinations([e.coordinates for e in a_group.elements()], k):
        if tuple(sum(col) % m for col, m in zip(zip(*subset), mods)) == target:
            count += 1
    return count


def brute_force_multiset(
    a_group: AbelianGroup,
    k: int,
    a: GroupElement,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Ground truth by enumerating all size-k multisets."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if comb(a_group.order + k - 1, k) > budget:
        raise EnumerationBudgetError(
            f"C({a_group.order + k - 1},{k}) exceeds budget {budget}"
        )
    if k == 0:
        return 1 if a == a_group.identity() else 0
    mods = a_group.invariant_factors
    target = a.coordinates
    count = 0
    elems = [e.coordinates for e in a_group.elements()]
    for multiset in combinations_with_replacement(elems, k):
        if tuple(sum(col) % m for col, m in zip(zip(*multiset), mods)) == target:
            count += 1
    return count


def profile_count(
    a_group: AbelianGroup,
    multiplicities,
    a: GroupElement,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """Multisets whose multiset of multiplicities equals the given profile and
    whose weighted sum is a; brute-force enumeration over supports.

    A profile (2, 1) over Z/3, say, asks for distinct b, c with 2b + c = a.
    """
    profile = tuple(sorted((int(v) for v in multiplicities), reverse=True))
    if any(v < 1 for v in profile):
        raise ValueError("multiplicities must be positive")
    classes = sorted(Counter(profile).items(), reverse=True)  # (value, how many)
    work = 1
    remaining = a_group.order
    for value, cnt in classes:
        work *= comb(remaining, cnt)
        remaining -= cnt
        if work > budget:
            raise EnumerationBudgetError(f"profile enumeration exceeds budget {budget}")

    elems = list(a_group.elements())
    zero = a_group.identity()
    target = a.coordinates

    def rec(class_idx: int, used: frozenset, acc: GroupElement) -> int:
        if class_idx == len(classes):
            return 1 if acc.coordinates == target else 0
        value, cnt = classes[class_idx]
        total = 0
        free = [e for e in elems if e.coordinates not in used]
        for chosen in combinations(free, cnt):
            partial = acc
            for e in chosen:
                partial = partial + e.scale(value)
            total += rec(
                class_idx + 1,
                used | {e.coordinates for e in chosen},
                partial,
            )
        return total

    return rec(0, frozenset(), zero)


def fourier_class_function(
    a_group: AbelianGroup, values_by_order: dict[int, Fraction]
) -> dict[int, Fraction]:
    """Fourier transform of a class function given by its values on elements
    of each order d | exponent; the result is constant on d_star classes and
    is returned as a map d_star value -> rational."""
    n = a_group.exponent
    divs = divisors(n)
    if set(values_by_order) != set(divs):
        raise ValueError(f"domain must be exactly the divisors of {n}")
    out: dict[int, Fraction] = {}
    for delta in divs:
        rep = _representative_with_dstar(a_group, delta)
        total = Fraction(0)
        for d in divs:
            chi = Fraction(values_by_order[d])
            if chi == 0:
                continue
            inner = 0
            for e in divisors(d):
                if in_d_image(a_group, rep, e):
                    inner += moebius(d // e) * subgroup_size(a_group, e)
            total += chi * inner
        out[delta] = total / a_group.order
    return out


def _representative_with_dstar(a_group: AbelianGroup, delta: int) -> GroupElement:
    if not a_group.invariant_factors:
        return a_group.identity()
    coords = (delta % a_group.exponent,) + (0,) * (a_group.rank - 1)
    rep = GroupElement(a_group, coords)
    if d_star(a_group, rep) != delta:
        raise AssertionError(f"no canonical representative with d*={delta}")
    return rep
