"""Invariant sweeps over every module, packaged as machine-checkable suites.

Each suite returns a VerifyReport listing how many cases ran and which
failed; depths default to the full documented sweeps and scale down for
quick runs.  All comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import abelian as ab
from . import counting as ct
from . import divmatrix as dm
from . import series as sr
from .numtheory import binomial, divisors, moebius, totient


@dataclass
class Failure:
    id: str
    expected: str
    got: str


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, case_id: str, expected, got) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append(Failure(case_id, repr(expected), repr(got)))

    def merge(self, other: "VerifyReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [
                {"id": f.id, "expected": f.expected, "got": f.got} for f in self.failures
            ],
        }


def verify_matrices(
    kmax: int = 500,
    kron_max: int = 2000,
    entry_kmax: int = 200,
    squarefree_kmax: int = 210,
    mult_max: int = 100,
) -> VerifyReport:
    """Structural matrix properties, entry formula agreement, Kronecker
    commutativity, and Ramanujan-sum identities."""
    report = VerifyReport("matrices")

    for k in range(1, kmax + 1):
        prop = dm.verify_m_properties(k)
        failing = [c.name for c in prop.checks if not c.passed]
        report.check(f"properties k={k}", [], failing)

    for k1 in range(2, kron_max + 1):
        for k2 in range(k1 + 1, kron_max // k1 + 1):
            if gcd(k1, k2) != 1:
                continue
            a, b = dm.build_m(k1), dm.build_m(k2)
            direct = dm.build_m(k1 * k2).entries
            report.check(f"kronecker {k1}x{k2}", direct, dm.kronecker(a, b).entries)
            report.check(f"kronecker {k2}x{k1}", direct, dm.kronecker(b, a).entries)

    for k in range(1, entry_kmax + 1):
        m = dm.build_m(k)
        ok = True
        for t in m.divisors:
            for d in m.divisors:
                closed = dm.entry_closed_form(k, t, d)
                if closed != dm.entry_product_formula(k, t, d):
                    ok = False
                if closed != dm.ramanujan_sum(d, t):
                    ok = False
                if closed != dm.ramanujan_sum_roots(d, t):
                    ok = False
                if closed != m.entry(t, d):
                    ok = False
        report.check(f"entry formulas k={k}", True, ok)

    for k in range(1, squarefree_kmax + 1):
        if moebius(k) == 0:
            continue
        ok = all(
            dm.squarefree_entry(k, d, dp) == dm.entry_closed_form(k, d, dp)
            for d in divisors(k)
            for dp in divisors(k)
        )
        report.check(f"squarefree k={k}", True, ok)

    for d1 in range(1, mult_max + 1):
        for d2 in range(d1 + 1, mult_max + 1):
            if gcd(d1, d2) != 1:
                continue
            ok = all(
                dm.ramanujan_sum(d1 * d2, s)
                == dm.ramanujan_sum(d1, s) * dm.ramanujan_sum(d2, s)
                for s in range(1, mult_max + 1)
            )
            report.check(f"ramanujan multiplicative {d1},{d2}", True, ok)
            if not ok:
                break

    return report


def verify_counts(
    nmax: int = 22,
    tzero_nmax: int = 100,
    symmetry_nmax: int = 30,
    complement_nmax: int = 40,
    hadjicostas_nmax: int = 60,
    necklace_nmax: int = 60,
    total_nmax: int = 40,
    maze_nmax: int = 18,
    colsum_kmax: int = 200,
    budget: int = ct.DEFAULT_ENUMERATION_BUDGET,
) -> VerifyReport:
    """Closed form against brute force, plus every counting identity."""
    report = VerifyReport("counts")

    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            spectrum = ct.brute_force_spectrum(n, k, budget)
            computed = tuple(ct.t_count(n, k, s) for s in range(n))
            report.check(f"oracle n={n} k={k}", spectrum, computed)

    for n in range(1, tzero_nmax + 1):
        got = next(
            (
                (k, ct.t_zero(n, k), ct.t_count(n, k, 0))
                for k in range(1, n + 1)
                if ct.t_zero(n, k) != ct.t_count(n, k, 0)
            ),
            None,
        )
        report.check(f"zero-sum route n={n}", None, got)

    for n in range(1, symmetry_nmax + 1):
        bad = None
        units = [b for b in range(1, n + 1) if gcd(b, n) == 1]
        for k in range(1, n + 1):
            for s in range(n):
                base = ct.t_count(n, k, s)
                if any(ct.t_count(n, k, s + k * alpha) != base for alpha in range(n)):
                    bad = (k, s, "translation")
                    break
                if any(ct.t_count(n, k, beta * s) != base for beta in units):
                    bad = (k, s, "unit")
                    break
            if bad:
                break
        report.check(f"action symmetry n={n}", None, bad)

    for n in range(2, complement_nmax + 1):
        bad = None
        for k in range(1, n):
            for s in range(n):
                q = ct.complement_transfer(n, k, s)
                if ct.t_count(n, k, s) != ct.t_count(q.n, q.k, q.s):
                    bad = (k, s)
                    break
            if bad:
                break
        report.check(f"complement n={n}", None, bad)

    for n in range(1, hadjicostas_nmax + 1):
        bad = None
        for k in range(1, n + 1):
            for s in divisors(k):
                if ct.hadjicostas_rhs(n, k, s) != ct.t_count(n, k, s):
                    bad = (k, s)
                    break
            if bad:
                break
        report.check(f"divisor recursion n={n}", None, bad)

    for n in range(2, necklace_nmax + 1):
        bad = None
        for k in range(1, n):
            if not ct.necklace_identity_check(n, k):
                bad = (k, "necklace")
                break
            if not ct.lyndon_identity_check(n, k):
                bad = (k, "lyndon")
                break
        report.check(f"necklace/lyndon n={n}", None, bad)

    for n in range(1, total_nmax + 1):
        for k in range(1, n + 1):
            total = sum(ct.t_count(n, k, s) for s in range(n))
            report.check(f"total n={n} k={k}", binomial(n, k), total)

    for n in range(1, maze_nmax + 1):
        spectra = [ct.brute_force_spectrum(n, k, budget) for k in range(1, n + 1)]
        brute = tuple(sum(col) for col in zip(*spectra))
        closed = tuple(
            sum(ct.t_count(n, k, s) for k in range(1, n + 1)) for s in range(n)
        )
        report.check(f"all-sizes sum n={n}", brute, closed)

    for k in range(1, colsum_kmax + 1):
        m = dm.build_m(k)
        if k % 2:
            sums = tuple(sum(row) for row in m.entries)
            expected = tuple(k if d == k else 0 for d in m.divisors)
        else:
            sums = tuple(
                sum((-1 if (k // dp) % 2 else 1) * x for dp, x in zip(m.divisors, row))
                for row in m.entries
            )
            expected = tuple(k if d == k // 2 else 0 for d in m.divisors)
        report.check(f"row-sum parity k={k}", expected, sums)

    return report


def verify_series(
    g_kmax: int = 12,
    integrality_kmax: int = 24,
    order_factor: int = 4,
) -> VerifyReport:
    """Generating-function coefficients against counts, integrality, and the
    algebraic identities tying the basis series together."""
    report = VerifyReport("series")

    for k in range(1, g_kmax + 1):
        order = order_factor * k
        components = sr.g_vector(k, order)
        for d, comp in zip(divisors(k), components):
            expected = [Fraction(ct.t_count(n, k, d)) for n in range(k, order)]
            got = [comp.coefficient(n) for n in range(k, order)]
            report.check(f"coefficients k={k} d={d}", expected, got)

    for k in range(1, integrality_kmax + 1):
        order = order_factor * k
        components = sr.g_vector(k, order)
        ok = all(
            c.denominator == 1 and c >= 0
            for comp in components
            for c in comp.coefficients
        )
        report.check(f"integrality k={k}", True, ok)

        # totient-weighted route for the final component
        direct = sr.TruncatedSeries.zero(order)
        for d in divisors(k):
            direct = direct + sr.p_series(k, d, order).scale(totient(d))
        report.check(
            f"zero-sum component k={k}",
            direct.coefficients,
            components[-1].coefficients,
        )

    for k in range(1, integrality_kmax + 1):
        order = order_factor * k
        for d in divisors(k):
            one_minus = sr.TruncatedSeries.monomial(0, 1, order) - sr.TruncatedSeries.monomial(d, 1, order)
            power = sr.TruncatedSeries.monomial(0, 1, order)
            for _ in range(k // d):
                power = power * one_minus
            sign = -1 if (k - k // d) % 2 else 1
            product = power * sr.p_series(k, d, order).scale(sign * k)
            report.check(
                f"reciprocal k={k} d={d}",
                sr.TruncatedSeries.monomial(k, 1, order).coefficients,
                product.coefficients,
            )

    return report


def verify_abelian(
    set_max_order: int = 16,
    multiset_max_order: int = 12,
    multiset_kmax: int = 6,
    cyclic_nmax: int = 20,
    budget: int = ct.DEFAULT_ENUMERATION_BUDGET,
) -> VerifyReport:
    """Group-theoretic counts against enumeration, cyclic reduction, and the
    class-function structure."""
    report = VerifyReport("abelian")

    for group in ab.groups_up_to(set_max_order):
        bad = None
        for k in range(group.order + 1):
            for a in group.elements():
                if ab.t_abelian(group, k, a) != ab.brute_force_abelian(group, k, a, budget):
                    bad = (k, a.coordinates)
                    break
            if bad:
                break
        report.check(f"subset oracle {group}", None, bad)

        bad = None
        by_dstar: dict[int, set[tuple[int, ...]]] = {}
        for a in group.elements():
            by_dstar.setdefault(ab.d_star(group, a), set()).add(a.coordinates)
        for k in range(group.order + 1):
            for dstar_value, coords in by_dstar.items():
                values = {ab.t_abelian(group, k, group.element(c)) for c in coords}
                if len(values) != 1:
                    bad = (k, dstar_value)
                    break
            if bad:
                break
        report.check(f"class function {group}", None, bad)

    for group in ab.groups_up_to(multiset_max_order):
        bad = None
        for k in range(multiset_kmax + 1):
            for a in group.elements():
                if ab.t_plus_abelian(group, k, a) != ab.brute_force_multiset(group, k, a, budget):
                    bad = (k, a.coordinates)
                    break
            if bad:
                break
        report.check(f"multiset oracle {group}", None, bad)

    for n in range(1, cyclic_nmax + 1):
        group = ab.AbelianGroup((n,)) if n > 1 else ab.AbelianGroup(())
        bad = None
        for k in range(n + 1):
            for s in range(n):
                a = group.element((s,)) if n > 1 else group.identity()
                if ab.t_abelian(group, k, a) != ct.t_count(n, k, s):
                    bad = (k, s)
                    break
            if bad:
                break
        report.check(f"cyclic reduction n={n}", None, bad)

    return report


QUICK_DEPTHS = {
    "matrices": dict(kmax=60, kron_max=200, entry_kmax=40, squarefree_kmax=42, mult_max=30),
    "counts": dict(
        nmax=12,
        tzero_nmax=30,
        symmetry_nmax=12,
        complement_nmax=14,
        hadjicostas_nmax=20,
        necklace_nmax=20,
        total_nmax=14,
        maze_nmax=10,
        colsum_kmax=40,
    ),
    "series": dict(g_kmax=8, integrality_kmax=10),
    "abelian": dict(set_max_order=9, multiset_max_order=8, multiset_kmax=4, cyclic_nmax=10),
}

SUITES = {
    "matrices": verify_matrices,
    "counts": verify_counts,
    "series": verify_series,
    "abelian": verify_abelian,
}


def run_suite(name: str, quick: bool = False, **overrides) -> VerifyReport:
    """Run one named suite, or all of them merged."""
    if name == "all":
        merged = VerifyReport("all")
        for sub in SUITES:
            merged.merge(run_suite(sub, quick=quick, **overrides))
        return merged
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    kwargs = dict(QUICK_DEPTHS[name]) if quick else {}
    fn = SUITES[name]
    valid = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    kwargs.update({k: v for k, v in overrides.items() if k in valid and v is not None})
    return fn(**kwargs)
