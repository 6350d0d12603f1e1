"""Recover M(k) empirically from low-order generating-function coefficients.

The first k coefficients of each subset-sum generating function (x^k through
x^(2k-1)) are computable from counts at strictly smaller subset sizes, via
the complement identity T(n, k, s) = T(n, n-k, s + eps_n) with eps_n = n/2
for even n and 0 for odd n.  Writing those prefixes as integer combinations
of the basis series p_series(k, d) yields an overdetermined linear system in
the matrix entries; solving it exactly must reproduce build_m(k), uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .counting import t_count
from .divmatrix import DivisorMatrix, build_m
from .numtheory import divisors
from .series import p_series

DEFAULT_DISCOVERY_CEILING = 24


class DiscoveryError(Exception):
    """Raised when the empirical system is inconsistent, rank-deficient,
    non-integral, or over the configured size ceiling."""


@dataclass(frozen=True)
class EmpiricalSystem:
    """The full stacked system: k^2 equations over the tau(k)^2 unknowns
    M_{t,d}, one equation per residue class s and coefficient slot n."""

    k: int
    labels: tuple[tuple[int, int], ...]
    equations: tuple[tuple[tuple[Fraction, ...], Fraction], ...]


@dataclass(frozen=True)
class DiscoveryResult:
    matrix: DivisorMatrix
    unique: bool
    rank: int
    pivot_columns: tuple[int, ...]
    equation_count: int


def empirical_g_prefix(k: int, s: int) -> list[int]:
    """T(n, k, s) for n = k .. 2k-1, evaluated only through subset sizes
    n-k < k (complement identity; n = k lands on the empty-set convention)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = []
    for n in range(k, 2 * k):
        shift = n // 2 if n % 2 == 0 else 0
        out.append(t_count(n, n - k, s + shift))
    return out


def _basis_rows(k: int) -> list[list[Fraction]]:
    # row per n in [k, 2k), column per divisor d: coefficient of x^n in p_series(k, d)
    divs = divisors(k)
    basis = [p_series(k, d, 2 * k) for d in divs]
    return [[series.coefficient(n) for series in basis] for n in range(k, 2 * k)]


def assemble_system(k: int) -> EmpiricalSystem:
    """Stack all k residue classes into one sparse block-diagonal system."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    divs = divisors(k)
    labels = tuple((t, d) for t in divs for d in divs)
    column = {label: i for i, label in enumerate(labels)}
    rows = _basis_rows(k)
    zero = Fraction(0)
    equations = []
    for s in range(k):
        t = gcd(k, s)
        prefix = empirical_g_prefix(k, s)
        for slot in range(k):
            row = [zero] * len(labels)
            for j, d in enumerate(divs):
                row[column[(t, d)]] = rows[slot][j]
            equations.append((tuple(row), Fraction(prefix[slot])))
    return EmpiricalSystem(k, labels, tuple(equations))


def _solve_block(a_rows: list[list[Fraction]], rhs_cols: list[list[Fraction]]):
    """Exact elimination of [A | B] with partial pivot on numerator size.

    Returns (solutions, rank, pivot_columns); raises on inconsistency or
    rank deficiency.  A is modified in place.
    """
    n_rows = len(a_rows)
    n_cols = len(a_rows[0])
    work = [a_rows[i] + [col[i] for col in rhs_cols] for i in range(n_rows)]
    width = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        best = None
        for i in range(r, n_rows):
            if work[i][c] != 0 and (
                best is None or abs(work[i][c].numerator) > abs(work[best][c].numerator)
            ):
                best = i
        if best is None:
            continue
        work[r], work[best] = work[best], work[r]
        piv = work[r][c]
        work[r] = [x / piv for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    rank = r
    for i in range(rank, n_rows):
        if any(work[i][j] != 0 for j in range(n_cols, width)):
            raise DiscoveryError("inconsistent system: contradictory equations")
    if rank < n_cols:
        raise DiscoveryError(f"rank-deficient system: rank {rank} < {n_cols} unknowns")
    solutions = []
    for b in range(len(rhs_cols)):
        sol = [Fraction(0)] * n_cols
        for row_idx, c in enumerate(pivots):
            sol[c] = work[row_idx][n_cols + b]
        solutions.append(sol)
    return solutions, rank, tuple(pivots)


def solve_matrix(k: int, ceiling: int = DEFAULT_DISCOVERY_CEILING) -> DiscoveryResult:
    """Solve the empirical system exactly and return the recovered matrix.

    All residue classes sharing gcd(k, s) = t carry the same unknown row
    M_{t,.}; duplicates across such classes must agree (the overdetermination
    check) and each block must have full column rank with an integer
    solution.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > ceiling:
        raise DiscoveryError(
            f"k={k} exceeds the reconstruction ceiling {ceiling}; raise it explicitly"
        )
    divs = divisors(k)
    rows = _basis_rows(k)
    prefixes: dict[int, list[int]] = {}
    for s in range(k):
        t = gcd(k, s)
        prefix = empirical_g_prefix(k, s)
        if t in prefixes:
            if prefixes[t] != prefix:
                raise DiscoveryError(
                    f"contradictory prefixes for classes with gcd(k,s)={t}"
                )
        else:
            prefixes[t] = prefix
    rhs_cols = [[Fraction(v) for v in prefixes[t]] for t in divs]
    solutions, rank, pivot_cols = _solve_block([row[:] for row in rows], rhs_cols)
    entries = []
    for sol in solutions:
        row_ints = []
        for value in sol:
            if value.denominator != 1:
                raise DiscoveryError(f"non-integral solution entry {value}")
            row_ints.append(int(value))
        entries.append(tuple(row_ints))
    matrix = DivisorMatrix(k, divs, tuple(entries))
    return DiscoveryResult(
        matrix=matrix,
        unique=rank == len(divs),
        rank=rank,
        pivot_columns=pivot_cols,
        equation_count=k * k,
    )
