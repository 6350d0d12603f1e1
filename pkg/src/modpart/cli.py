"""Command-line interface.

Subcommands: tnks, matrix, seq, verify, discover, abelian, conics,
oeis-check.  Configuration precedence is flags > MODPART_* environment
variables > defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import abelian as ab
from . import counting as ct
from . import discovery as dv
from . import divmatrix as dm
from . import oeis
from .verify import run_suite

ENV_PREFIX = "MODPART_"


@dataclass(frozen=True)
class SequenceSpec:
    """A (k, s) sequence request over an n-range, with a printed index origin."""

    k: int
    s: int
    n_start: int
    n_end: int
    offset: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not self.k <= self.n_start <= self.n_end:
            raise ValueError(
                f"need k <= n_start <= n_end, got {self.k}, {self.n_start}, {self.n_end}"
            )

    def __len__(self) -> int:
        return self.n_end - self.n_start + 1


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _cfg_int(flag_value, env_name: str, default: int) -> int:
    if flag_value is not None:
        return int(flag_value)
    raw = _env(env_name)
    return int(raw) if raw is not None else default


def _pmap(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _emit(args, payload: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(plain)


def cmd_tnks(args) -> int:
    value = ct.t_count(args.n, args.k, args.s)
    _emit(args, {"n": args.n, "k": args.k, "s": args.s, "value": str(value)}, str(value))
    return 0


def cmd_matrix(args) -> int:
    m = dm.build_m(args.k)
    if args.json:
        print(json.dumps(m.to_json_dict()))
    else:
        print("divisors: " + " ".join(str(d) for d in m.divisors))
        width = max(len(str(x)) for row in m.entries for x in row)
        for row in m.entries:
            print(" ".join(str(x).rjust(width) for x in row))
    return 0


def cmd_seq(args) -> int:
    threads = _cfg_int(args.threads, "THREADS", 1)
    offset = args.offset if args.offset is not None else args.n_start
    spec = SequenceSpec(args.k, args.s, args.n_start, args.n_end, offset)
    values = _pmap(
        lambda n: ct.t_count(n, spec.k, spec.s),
        range(spec.n_start, spec.n_end + 1),
        threads,
    )
    fmt = args.format or ("json" if args.json else "bfile")
    if fmt == "json":
        print(
            json.dumps(
                {
                    "k": spec.k,
                    "s": spec.s,
                    "offset": spec.offset,
                    "terms": [str(v) for v in values],
                }
            )
        )
    else:
        sys.stdout.write(
            oeis.format_bfile((spec.offset + i, v) for i, v in enumerate(values))
        )
    return 0


def cmd_verify(args) -> int:
    overrides = {
        "kmax": _cfg_int(args.kmax, "KMAX", None) if args.kmax or _env("KMAX") else None,
        "nmax": _cfg_int(args.nmax, "NMAX", None) if args.nmax or _env("NMAX") else None,
        "budget": _cfg_int(args.budget, "BUDGET", ct.DEFAULT_ENUMERATION_BUDGET),
    }
    report = run_suite(args.suite, quick=args.quick, **overrides)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"suite {report.suite}: {report.cases} cases, {len(report.failures)} failures")
        for f in report.failures:
            print(f"FAIL {f.id}: expected {f.expected}, got {f.got}")
    return 0 if report.ok else 1


def cmd_discover(args) -> int:
    ceiling = _cfg_int(args.ceiling, "CEILING", dv.DEFAULT_DISCOVERY_CEILING)
    result = dv.solve_matrix(args.k, ceiling=ceiling)
    expected = dm.build_m(args.k)
    diff = [
        (t, d, expected.entry(t, d), result.matrix.entry(t, d))
        for t in expected.divisors
        for d in expected.divisors
        if expected.entry(t, d) != result.matrix.entry(t, d)
    ]
    if args.json:
        print(
            json.dumps(
                {
                    "matrix": result.matrix.to_json_dict(),
                    "unique": result.unique,
                    "rank": result.rank,
                    "matches_construction": not diff,
                    "diff": [
                        {"t": t, "d": d, "expected": str(e), "got": str(g)}
                        for t, d, e, g in diff
                    ],
                }
            )
        )
    else:
        print("divisors: " + " ".join(str(d) for d in result.matrix.divisors))
        for row in result.matrix.entries:
            print(" ".join(str(x) for x in row))
        print("unique" if result.unique else "NOT unique")
        if diff:
            for t, d, e, g in diff:
                print(f"DIFF at ({t},{d}): construction {e}, recovered {g}")
        else:
            print("matches the direct construction")
    return 0 if result.unique and not diff else 1


def cmd_abelian(args) -> int:
    orders = [int(x) for x in args.factors.split(",") if x]
    coords = [int(x) for x in args.element.split(",")] if args.element else []
    if len(coords) != len(orders):
        raise ValueError(
            f"element needs {len(orders)} coordinates, got {len(coords)}"
        )
    group, element = ab.canonicalize_with_element(orders, coords)
    chain = ",".join(str(m) for m in group.invariant_factors)
    if tuple(orders) != group.invariant_factors:
        print(f"notice: canonicalized {args.factors} to invariant factors {chain}", file=sys.stderr)
    if args.mode == "set":
        value = ab.t_abelian(group, args.k, element)
    else:
        value = ab.t_plus_abelian(group, args.k, element)
    _emit(
        args,
        {
            "group": chain,
            "k": args.k,
            "element": list(element.coordinates),
            "mode": args.mode,
            "value": str(value),
        },
        str(value),
    )
    return 0


def cmd_conics(args) -> int:
    budget = _cfg_int(args.budget, "BUDGET", ct.DEFAULT_ENUMERATION_BUDGET)
    pairs = ct.line_pair_conics(args.n, budget)
    total = ct.t_count(args.n, 6, 0)
    irreducible = ct.irreducible_conics(args.n, budget)
    _emit(
        args,
        {
            "n": args.n,
            "zero_sum_sextuples": str(total),
            "line_pairs": str(pairs),
            "irreducible": str(irreducible),
        },
        str(irreducible),
    )
    return 0


def cmd_oeis_check(args) -> int:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    elif args.fetch:
        sid = args.id or oeis.SEQUENCE_TABLE.get((args.k, args.s))
        if sid is None:
            raise ValueError(f"no published sequence recorded for (k,s)=({args.k},{args.s})")
        base = args.base_url or _env("OEIS_BASE_URL") or oeis.DEFAULT_BASE_URL
        text = oeis.fetch_bfile(sid, base_url=base)
    else:
        raise ValueError("either a fixture --file or --fetch is required")
    terms = oeis.parse_bfile(text)
    result = oeis.check_terms(terms, args.k, args.s, max_terms=args.max_terms)
    if args.json:
        print(json.dumps(result.to_json_dict()))
    elif result.ok:
        print(f"agreement over {result.compared} terms (index shift {result.shift})")
    else:
        idx, expected, got = result.mismatch
        print(f"mismatch at index {idx}: fixture {expected}, computed {got}")
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker threads for sweeps")
    common.add_argument("--budget", type=int, default=None, help="enumeration budget (subsets)")

    parser = argparse.ArgumentParser(
        prog="modpart",
        description="Exact subset-sum counts over Z/nZ and finite abelian groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tnks", parents=[common], help="count k-subsets of Z/nZ with sum s")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(fn=cmd_tnks)

    p = sub.add_parser("matrix", parents=[common], help="print the divisor-indexed matrix M(k)")
    p.add_argument("k", type=int)
    p.set_defaults(fn=cmd_matrix)

    p = sub.add_parser("seq", parents=[common], help="emit (T(n,k,s))_n as b-file or JSON")
    p.add_argument("k", type=int)
    p.add_argument("s", type=int)
    p.add_argument("n_start", type=int)
    p.add_argument("n_end", type=int)
    p.add_argument("--offset", type=int, default=None, help="printed index origin (default n_start)")
    p.add_argument("--format", choices=["bfile", "json"], default=None)
    p.set_defaults(fn=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="run invariant sweeps")
    p.add_argument("suite", choices=["matrices", "counts", "series", "abelian", "all"])
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--quick", action="store_true", help="reduced depths")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("discover", parents=[common], help="recover M(k) from series prefixes")
    p.add_argument("k", type=int)
    p.add_argument("--ceiling", type=int, default=None)
    p.set_defaults(fn=cmd_discover)

    p = sub.add_parser("abelian", parents=[common], help="subset/multiset count in an abelian group")
    p.add_argument("factors", help="comma-separated cyclic orders, e.g. 4,2")
    p.add_argument("k", type=int)
    p.add_argument("element", help="comma-separated coordinates, e.g. 1,0")
    p.add_argument("mode", choices=["set", "multiset"])
    p.set_defaults(fn=cmd_abelian)

    p = sub.add_parser("conics", parents=[common], help="irreducible conic count for n >= 9")
    p.add_argument("n", type=int)
    p.set_defaults(fn=cmd_conics)

    p = sub.add_parser("oeis-check", parents=[common], help="compare computed terms to a b-file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--file", default=None, help="local b-file fixture")
    p.add_argument("--id", default=None, help="sequence id for --fetch")
    p.add_argument("--fetch", action="store_true", help="download the published b-file")
    p.add_argument("--base-url", default=None, help="override the download base URL")
    p.add_argument("--max-terms", type=int, default=500)
    p.set_defaults(fn=cmd_oeis_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, dv.DiscoveryError, ct.EnumerationBudgetError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
