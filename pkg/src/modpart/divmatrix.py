"""Divisor-indexed integer matrices built from Ramanujan sums.

For k >= 1 the square matrix M(k) has rows and columns labeled by the
divisors of k in ascending order.  Its entry at (t, d) is the Ramanujan sum
c_d(t), which factors over the maximal prime powers q = p^e dividing k:

    M(q)_{u,v} = mu(v/u)*u  if v > u,  else phi(v)        (u, v | q)
    M(k)_{t,d} = prod over q of M(q)_{gcd(q,t), gcd(q,d)}

Equivalently M(k) is the Kronecker product of the blocks M(p^e); because
blocks are indexed by divisors of coprime numbers and the result is resorted
into divisor order, that product is literally commutative as a stored array.

The module keeps every computation over arbitrary-precision integers; the
only floating point lives in ramanujan_sum_roots, a root-of-unity oracle
used to cross-check the closed forms.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd

from .numtheory import divisors, factorize, is_prime, moebius, totient

ROOT_SUM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class DivisorMatrix:
    """Square integer matrix indexed by the ascending divisors of k."""

    k: int
    divisors: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.divisors)
        if self.divisors != divisors(self.k):
            raise ValueError(f"index set must be the sorted divisors of {self.k}")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("entry array must be square over the divisor set")

    @property
    def size(self) -> int:
        return len(self.divisors)

    def index_of(self, d: int) -> int:
        try:
            return self.divisors.index(d)
        except ValueError:
            raise ValueError(f"{d} is not a divisor of {self.k}") from None

    def entry(self, row_divisor: int, col_divisor: int) -> int:
        return self.entries[self.index_of(row_divisor)][self.index_of(col_divisor)]

    def row(self, row_divisor: int) -> tuple[int, ...]:
        return self.entries[self.index_of(row_divisor)]

    def to_json_dict(self) -> dict:
        """JSON form {k, divisors, rows} with decimal-string entries."""
        return {
            "k": self.k,
            "divisors": list(self.divisors),
            "rows": [[str(x) for x in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "DivisorMatrix":
        return cls(
            k=int(data["k"]),
            divisors=tuple(int(d) for d in data["divisors"]),
            entries=tuple(tuple(int(x) for x in row) for row in data["rows"]),
        )


def _muv(u: int, v: int) -> int:
    """Entry formula on a prime-power block: mu(v/u)*u if v > u, else phi(v)."""
    if v > u:
        return moebius(v // u) * u
    return totient(v)


def prime_power_block(p: int, m: int) -> DivisorMatrix:
    """The (m+1)x(m+1) block M(p^m) for prime p.

    First column all ones, superdiagonal -p^(j-1), below-diagonal columns
    constant (p-1)*p^(j-2), zeros above the superdiagonal.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("exponent must be >= 1")
    divs = tuple(p**i for i in range(m + 1))
    entries = tuple(tuple(_muv(u, v) for v in divs) for u in divs)
    return DivisorMatrix(p**m, divs, entries)


def _coprime_split(d: int, k1: int) -> int:
    # unique d1 | k1 with d = d1*d2, d2 | k2, when gcd(k1, k2) = 1
    return gcd(d, k1)


def kronecker(a: DivisorMatrix, b: DivisorMatrix) -> DivisorMatrix:
    """Kronecker product of matrices over coprime k1, k2, in divisor order.

    The row/column labeled d of the result, for d | k1*k2, decomposes
    uniquely as d = d1*d2 with d1 | k1, d2 | k2; the entry at (d, d') is
    a[d1, d1'] * b[d2, d2'].  Divisor-sorted indexing makes the product
    commutative as a stored array.
    """
    if gcd(a.k, b.k) != 1:
        raise ValueError(f"factors must be coprime, got k1={a.k}, k2={b.k}")
    k = a.k * b.k
    divs = divisors(k)
    pos_a = {d: i for i, d in enumerate(a.divisors)}
    pos_b = {d: i for i, d in enumerate(b.divisors)}
    split = [(pos_a[_coprime_split(d, a.k)], pos_b[_coprime_split(d, b.k)]) for d in divs]
    entries = tuple(
        tuple(a.entries[i1][j1] * b.entries[i2][j2] for (j1, j2) in split)
        for (i1, i2) in split
    )
    return DivisorMatrix(k, divs, entries)


@lru_cache(maxsize=4096)
def build_m(k: int) -> DivisorMatrix:
    """M(k): the Kronecker product of prime-power blocks over k's factorization."""
    if k < 1:
        raise ValueError(f"positive integer required, got {k}")
    if k == 1:
        return DivisorMatrix(1, (1,), ((1,),))
    blocks = [prime_power_block(p, e) for p, e in factorize(k).factors]
    return reduce(kronecker, blocks)


@lru_cache(maxsize=1 << 16)
def entry_closed_form(k: int, t: int, d: int) -> int:
    """M(k)_{t,d} without building the matrix: product over prime powers q | k
    of the block entry at (gcd(q,t), gcd(q,d))."""
    if k < 1 or t < 1 or k % t or d < 1 or k % d:
        raise ValueError(f"t={t} and d={d} must divide k={k}")
    result = 1
    for q in factorize(k).prime_power_parts():
        result *= _muv(gcd(q, t), gcd(q, d))
        if result == 0:
            break
    return result


def a_factor(d: int, d_prime: int, f: int) -> int:
    """Single prime-power factor of the entry product formula:

    a(d, d', f) = phi(gcd(f,d'))                      if gcd(f,d') | gcd(f,d)
                = mu(gcd(f,d')/gcd(f,d)) * gcd(f,d)   otherwise
    """
    if d < 1 or d_prime < 1:
        raise ValueError("d and d' must be positive")
    if f < 2 or len(factorize(f).factors) != 1:
        raise ValueError(f"{f} is not a prime power")
    gd = gcd(f, d)
    gdp = gcd(f, d_prime)
    if gd % gdp == 0:
        return totient(gdp)
    # both gcds are powers of the same prime, so here gd | gdp strictly
    return moebius(gdp // gd) * gd


def entry_product_formula(k: int, d: int, d_prime: int) -> int:
    """M(k)_{d,d'} as the product of a(d, d', q) over maximal prime powers q | k."""
    if k < 1 or d < 1 or k % d or d_prime < 1 or k % d_prime:
        raise ValueError(f"d={d} and d'={d_prime} must divide k={k}")
    result = 1
    for q in factorize(k).prime_power_parts():
        result *= a_factor(d, d_prime, q)
        if result == 0:
            break
    return result


def squarefree_entry(k: int, d: int, d_prime: int) -> int:
    """M(k)_{d,d'} for square-free k: mu(d'/gcd(d,d')) * phi(gcd(d,d'))."""
    if k < 1 or moebius(k) == 0:
        raise ValueError(f"{k} is not square-free")
    if d < 1 or k % d or d_prime < 1 or k % d_prime:
        raise ValueError(f"d={d} and d'={d_prime} must divide k={k}")
    g = gcd(d, d_prime)
    return moebius(d_prime // g) * totient(g)


def ramanujan_sum(d: int, s: int) -> int:
    """Ramanujan sum c_d(s) = mu(d/g) * phi(d) / phi(d/g) with g = gcd(s, d)."""
    if d < 1:
        raise ValueError(f"positive modulus required, got {d}")
    g = gcd(s, d)
    m = d // g
    phi_m = totient(m)
    num = moebius(m) * totient(d)
    if num % phi_m:
        raise AssertionError("phi(d/g) must divide mu(d/g)*phi(d)")
    return num // phi_m


def ramanujan_sum_roots(d: int, s: int) -> int:
    """c_d(s) summed numerically over primitive d-th roots of unity.

    Oracle path: sums exp(2*pi*i*j*s/d) over units j mod d and rounds,
    refusing to round if the imaginary part or the distance to the nearest
    integer exceeds 1e-6.
    """
    if d < 1:
        raise ValueError(f"positive modulus required, got {d}")
    total = 0j
    for j in range(1, d + 1):
        if gcd(j, d) == 1:
            total += cmath.exp(2j * cmath.pi * j * s / d)
    nearest = round(total.real)
    if abs(total.imag) > ROOT_SUM_TOLERANCE or abs(total.real - nearest) > ROOT_SUM_TOLERANCE:
        raise ArithmeticError(f"root-of-unity sum {total} is not near an integer")
    return int(nearest)


def reversal_matrix(k: int) -> DivisorMatrix:
    """W(k): permutation matrix sending the divisor index d to k/d."""
    if k < 1:
        raise ValueError(f"positive integer required, got {k}")
    divs = divisors(k)
    entries = tuple(
        tuple(1 if k // d == dp else 0 for dp in divs) for d in divs
    )
    return DivisorMatrix(k, divs, entries)


def _mat_mul(a: tuple[tuple[int, ...], ...], b: tuple[tuple[int, ...], ...]):
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def det_bareiss(rows) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("square matrix required")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def char_poly(m) -> list[int]:
    """Characteristic polynomial det(X*I - M), exactly, by the division-free
    Samuelson-Berkowitz recurrence.

    Accepts a DivisorMatrix or any square array of integers; returns
    coefficients in ascending order: coeffs[i] is the coefficient of X^i,
    with leading coefficient 1.
    """
    rows = m.entries if isinstance(m, DivisorMatrix) else tuple(tuple(r) for r in m)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("square matrix required")
    if n == 0:
        return [1]
    poly = [1, -rows[0][0]]  # descending while iterating
    for i in range(1, n):
        sub = [row[:i] for row in rows[:i]]
        r_vec = rows[i][:i]
        c_vec = [rows[j][i] for j in range(i)]
        toeplitz = [1, -rows[i][i]]
        v = c_vec
        for _ in range(i):
            toeplitz.append(-sum(x * y for x, y in zip(r_vec, v)))
            v = [sum(sub[r][c] * v[c] for c in range(i)) for r in range(i)]
        new = []
        for j in range(i + 2):
            acc = 0
            for t_idx in range(max(0, j - len(poly) + 1), min(j, len(toeplitz) - 1) + 1):
                acc += toeplitz[t_idx] * poly[j - t_idx]
            new.append(acc)
        poly = new
    return poly[::-1]


def sym_square_mp(p: int) -> tuple[tuple[int, ...], ...]:
    """Symmetric square of the 2x2 block M(p), as a plain 3x3 integer array.

    Exists to check that its characteristic polynomial differs from that of
    M(p^2): the degree-two block is not a symmetric power of the degree-one
    block.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return (
        (1, 1, 1),
        (-2, p - 2, 2 * (p - 1)),
        (1, 1 - p, (p - 1) ** 2),
    )


@dataclass(frozen=True)
class PropertyCheck:
    property_id: int
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class MatrixPropertyReport:
    k: int
    checks: tuple[PropertyCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "all_passed": self.all_passed,
            "checks": [
                {"id": c.property_id, "name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify_m_properties(k: int) -> MatrixPropertyReport:
    """Check the seven structural properties of M(k), exactly.

    1. entries factor as products of a(d, d', q) over prime powers q | k;
    2. (W(k) M(k))^2 = k*I;
    3. det M(k) = k^(tau(k)/2);
    4. row sums vanish except the last, which equals k;
    5. first row is mu(d);
    6. last row is phi(d);
    7. first column is all ones.
    """
    m = build_m(k)
    divs = m.divisors
    tau = len(divs)
    checks: list[PropertyCheck] = []

    ok = all(
        m.entries[i][j] == entry_product_formula(k, divs[i], divs[j])
        for i in range(tau)
        for j in range(tau)
    )
    checks.append(PropertyCheck(1, "entry product formula", ok))

    w = reversal_matrix(k)
    wm = _mat_mul(w.entries, m.entries)
    sq = _mat_mul(wm, wm)
    ok = all(
        sq[i][j] == (k if i == j else 0) for i in range(tau) for j in range(tau)
    )
    checks.append(PropertyCheck(2, "(W M)^2 = k I", ok))

    det = det_bareiss(m.entries)
    if tau % 2 == 0:
        expected = k ** (tau // 2)
    else:
        root = int(round(k**0.5))
        while root * root < k:
            root += 1
        while root * root > k:
            root -= 1
        expected = root**tau if root * root == k else None
    ok = expected is not None and det == expected
    checks.append(PropertyCheck(3, "det = k^(tau/2)", ok, f"det={det}"))

    row_sums = tuple(sum(row) for row in m.entries)
    ok = row_sums == tuple(k if d == k else 0 for d in divs)
    checks.append(PropertyCheck(4, "row sums are k*delta(d,k)", ok))

    ok = m.entries[0] == tuple(moebius(d) for d in divs)
    checks.append(PropertyCheck(5, "first row is mu(d)", ok))

    ok = m.entries[-1] == tuple(totient(d) for d in divs)
    checks.append(PropertyCheck(6, "last row is phi(d)", ok))

    ok = all(row[0] == 1 for row in m.entries)
    checks.append(PropertyCheck(7, "first column is all ones", ok))

    return MatrixPropertyReport(k, tuple(checks))
