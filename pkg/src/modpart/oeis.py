"""OEIS b-file tooling: emit, parse, fixture generation, and cross-checks.

A b-file is one "index value" pair per line, single ASCII space, newline
terminated; comment lines starting with '#' are skipped on parse.  The pair
table below records which published sequences the subset-sum counts
reproduce; term values are never taken from this module's table, only
computed (or read from a b-file).
"""

from __future__ import annotations

import urllib.request
from dataclasses import dataclass
from typing import Callable, Iterable

from .counting import brute_force, t_count

DEFAULT_BASE_URL = "https://oeis.org"
SHIFT_WINDOW = 3

# (k, s) -> published sequence id for (T(n, k, s))_{n >= k}, index suitably offset.
SEQUENCE_TABLE: dict[tuple[int, int], str] = {
    (3, 0): "A007997",
    (3, 1): "A001840",
    (4, 0): "A032801",
    (4, 1): "A006918",
    (4, 2): "A008610",
    (5, 0): "A008646",
    (5, 1): "A011795",
    (6, 0): "A381289",
    (6, 1): "A381290",
    (6, 2): "A011796",
    (6, 3): "A032191",
    (7, 0): "A032192",
    (7, 1): "A011797",
    (8, 0): "A381291",
    (8, 1): "A031164",
    (8, 2): "A381350",
    (8, 4): "A032193",
    (9, 0): "A032194",
    (9, 1): "A263318",
    (9, 3): "A381351",
}


@dataclass(frozen=True)
class OeisFixture:
    """Terms of one sequence attached to its (k, s) pair."""

    sequence_id: str
    k: int
    s: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        indices = [i for i, _ in self.terms]
        if indices != sorted(set(indices)):
            raise ValueError("term indices must be strictly increasing")
        if any(v < 0 for _, v in self.terms):
            raise ValueError("term values must be nonnegative")


@dataclass(frozen=True)
class CheckResult:
    k: int
    s: int
    ok: bool
    shift: int | None
    compared: int
    mismatch: tuple[int, int, int] | None  # (fixture index, expected, got)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "s": self.s,
            "ok": self.ok,
            "shift": self.shift,
            "compared": self.compared,
            "mismatch": None
            if self.mismatch is None
            else {
                "index": self.mismatch[0],
                "expected": self.mismatch[1],
                "got": self.mismatch[2],
            },
        }


def format_bfile(terms: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{i} {v}\n" for i, v in terms)


def parse_bfile(text: str) -> list[tuple[int, int]]:
    terms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"malformed b-file line {lineno}: {line!r}")
        try:
            terms.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"malformed b-file line {lineno}: {line!r}") from None
    return terms


def generate_terms(
    k: int,
    s: int,
    n_start: int,
    n_end: int,
    counter: Callable[[int, int, int], int] = t_count,
) -> list[tuple[int, int]]:
    """(n, T(n, k, s)) for n in [n_start, n_end], via the chosen counter."""
    if not k <= n_start <= n_end:
        raise ValueError(f"need k <= n_start <= n_end, got {k},{n_start},{n_end}")
    return [(n, counter(n, k, s)) for n in range(n_start, n_end + 1)]


def generate_fixture(k: int, s: int, count: int) -> OeisFixture:
    """Fixture from the brute-force oracle, indexed by n starting at k.

    Deliberately not produced by t_count, so comparing the two is a real
    cross-check.
    """
    sequence_id = SEQUENCE_TABLE.get((k, s), f"local-{k}-{s}")
    terms = generate_terms(k, s, k, k + count - 1, counter=brute_force)
    return OeisFixture(sequence_id, k, s, tuple(terms))


def fetch_bfile(sequence_id: str, base_url: str = DEFAULT_BASE_URL, timeout: float = 30.0) -> str:
    """Download the published b-file for a sequence id (e.g. A007997)."""
    sid = sequence_id.strip()
    if not (sid.startswith("A") and sid[1:].isdigit()):
        raise ValueError(f"not a sequence id: {sequence_id!r}")
    url = f"{base_url}/{sid}/b{sid[1:]}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read().decode("utf-8")


def check_terms(
    terms: list[tuple[int, int]],
    k: int,
    s: int,
    max_terms: int = 500,
    shift_window: int = SHIFT_WINDOW,
) -> CheckResult:
    """Compare fixture terms against the computed counts.

    The fixture index i is interpreted as n = i + shift for the first shift
    in 0, +1, -1, ..., +-shift_window whose whole overlap agrees; published
    offsets vary, and the shift search absorbs that.
    """
    terms = terms[:max_terms]
    if not terms:
        raise ValueError("empty term list")
    shifts = [0]
    for w in range(1, shift_window + 1):
        shifts.extend((w, -w))
    fallback_mismatch = None
    for shift in shifts:
        usable = [(i, v) for i, v in terms if i + shift >= k]
        if not usable:
            continue
        mismatch = None
        for i, v in usable:
            got = t_count(i + shift, k, s)
            if got != v:
                mismatch = (i, v, got)
                break
        if mismatch is None:
            return CheckResult(k, s, True, shift, len(usable), None)
        if shift == 0 or fallback_mismatch is None:
            fallback_mismatch = mismatch
    return CheckResult(k, s, False, None, len(terms), fallback_mismatch)
