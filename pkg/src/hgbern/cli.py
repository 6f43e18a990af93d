"""Command-line front end.

Subcommands: ``compute`` (one value by any route), ``table`` (CSV/JSON value
tables), ``verify`` (cross-route agreement sweeps), ``congruence`` (p-adic
checks), ``convergents`` (continued-fraction convergents and their defect),
and ``cache-audit`` (full recomputation of a cache file).

Exit codes: 0 success, 1 verification/audit failure, 2 usage or hypothesis
error, 3 route precondition violation.

Values print as exact ``num/den``.  A cache file is used when ``--cache`` is
given or the ``HGBERN_CACHE`` environment variable is set; otherwise
everything stays in memory.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import inf

from . import altforms, congruence, contfrac, hbnum
from .altforms import RoutePreconditionError
from .congruence import CongruenceVerdict, HypothesisViolation
from .exactnum import format_rational
from .hbnum import CacheError, HBKey, MemoStore
from .hessenberg import hb_higher_det

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_ROUTE = 3


def _require(route: str, ok: bool, why: str) -> None:
    if not ok:
        raise RoutePreconditionError(f"route {route!r} {why}")


def _route_recurrence(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    return hbnum.hb_higher(N, r, n, store)


def _route_comp(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    _require("comp", r == 1, "requires r = 1")
    _require("comp", n >= 1, "requires n >= 1")
    return altforms.hb_explicit_comp(N, n)


def _route_binom(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    _require("binom", r == 1, "requires r = 1")
    _require("binom", n >= 1, "requires n >= 1")
    return altforms.hb_explicit_binom(N, n)


def _route_trudi(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    _require("trudi", n >= 1, "requires n >= 1")
    return altforms.hb_trudi(N, r, n)


def _route_det(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    _require("det", n >= 1, "requires n >= 1")
    return hb_higher_det(N, r, n)


def _route_descent(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    _require("descent", r == 1, "requires r = 1")
    _require("descent", N >= 2, "requires N >= 2")
    _require("descent", n >= 1, "requires n >= 1")
    return altforms.hb_descent_step(N, n, store)


def _route_descent_nested(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    _require("descent-nested", r == 1, "requires r = 1")
    _require("descent-nested", N >= 2, "requires N >= 2")
    _require("descent-nested", n >= 1, "requires n >= 1")
    return altforms.hb_descent_nested(N, n, store)


def _route_convolution(N: int, r: int, n: int, store: MemoStore) -> Fraction:
    return altforms.hb_higher_convolution(N, r, n, store)


ROUTES = {
    "recurrence": _route_recurrence,
    "comp": _route_comp,
    "binom": _route_binom,
    "trudi": _route_trudi,
    "det": _route_det,
    "descent": _route_descent,
    "descent-nested": _route_descent_nested,
    "convolution": _route_convolution,
}


def _applicable(route: str, N: int, r: int, n: int) -> bool:
    if route in ("comp", "binom", "descent", "descent-nested") and r != 1:
        return False
    if route in ("descent", "descent-nested") and N < 2:
        return False
    if route not in ("recurrence", "convolution") and n < 1:
        return False
    return True


@dataclass(frozen=True)
class SweepConfig:
    """Grid and route selection for a cross-route verification sweep."""

    n_values: tuple[int, ...]
    r_values: tuple[int, ...]
    big_n_values: tuple[int, ...]
    routes: tuple[str, ...]
    parallelism: int = 1
    cache_path: str | None = None

    def __post_init__(self) -> None:
        if not self.n_values or not self.r_values or not self.big_n_values:
            raise ValueError("sweep ranges must be nonempty")
        if len(self.routes) < 2:
            raise ValueError("a comparison sweep needs at least two routes")
        unknown = [r for r in self.routes if r not in ROUTES]
        if unknown:
            raise ValueError(f"unknown routes: {', '.join(unknown)}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


def run_sweep(config: SweepConfig, store: MemoStore) -> tuple[int, str]:
    """Evaluate every selected route on every grid point and compare.

    Returns (exit_code, report).  Grid points are compared in deterministic
    (N, r, n) order regardless of parallelism.
    """
    points = [
        (N, r, n)
        for N in config.big_n_values
        for r in config.r_values
        for n in config.n_values
    ]

    def evaluate(point: tuple[int, int, int]) -> dict[str, Fraction]:
        N, r, n = point
        return {
            route: ROUTES[route](N, r, n, store)
            for route in config.routes
            if _applicable(route, N, r, n)
        }

    if config.parallelism > 1:
        with ThreadPoolExecutor(max_workers=config.parallelism) as pool:
            results = list(pool.map(evaluate, points))
    else:
        results = [evaluate(point) for point in points]

    comparisons = 0
    for (N, r, n), values in zip(points, results):
        if len(values) < 2:
            continue
        names = list(values)
        ref_name = names[0]
        ref = values[ref_name]
        for name in names[1:]:
            comparisons += 1
            if values[name] != ref:
                report = (
                    f"MISMATCH at N={N} r={r} n={n}: "
                    f"{ref_name} = {format_rational(ref)}, "
                    f"{name} = {format_rational(values[name])}"
                )
                return EXIT_VERIFY, report
    report = (
        f"OK: routes {','.join(config.routes)} agree on "
        f"{len(points)} grid points ({comparisons} comparisons)"
    )
    return EXIT_OK, report


def _parse_range(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO..HI, got {text!r}") from None


def _decimal_string(value: Fraction, digits: int) -> str:
    """Fixed-point rendering with `digits` fractional digits, truncated toward
    zero; display only, derived from the exact value with integer arithmetic."""
    sign = "-" if value < 0 else ""
    mag = abs(value)
    scaled = mag.numerator * 10**digits // mag.denominator
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _make_store(args: argparse.Namespace) -> MemoStore:
    path = getattr(args, "cache", None) or os.environ.get("HGBERN_CACHE")
    store = MemoStore(path)
    if store.path is not None and store.path.exists():
        store.load()
    return store


def _save_if_backed(store: MemoStore) -> None:
    if store.path is not None:
        store.save()


def cmd_compute(args: argparse.Namespace) -> int:
    store = _make_store(args)
    key = HBKey(args.N, args.r, args.n)
    value = ROUTES[args.route](key.N, key.r, key.n, store)
    line = format_rational(value)
    if args.decimal is not None:
        line += f" ≈ {_decimal_string(value, args.decimal)}"
    print(line)
    _save_if_backed(store)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    store = _make_store(args)
    rows = [
        (N, r, n, format_rational(hbnum.hb_higher(N, r, n, store)))
        for N in args.N
        for r in args.r
        for n in args.n
    ]
    out = open(args.output, "w", encoding="utf-8", newline="") if args.output else sys.stdout
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["N", "r", "n", "value"])
            writer.writerows(rows)
        else:
            records = [{"N": N, "r": r, "n": n, "value": v} for N, r, n, v in rows]
            json.dump(records, out, indent=2)
            out.write("\n")
    finally:
        if args.output:
            out.close()
    _save_if_backed(store)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    routes = tuple(args.routes.split(","))
    config = SweepConfig(
        n_values=args.n,
        r_values=args.r,
        big_n_values=args.N,
        routes=routes,
        parallelism=args.parallel,
        cache_path=getattr(args, "cache", None),
    )
    store = _make_store(args)
    if args.inject_fault:
        parts = args.inject_fault.split(",")
        if len(parts) != 3:
            raise ValueError("--inject-fault expects N,r,n")
        key = HBKey(int(parts[0]), int(parts[1]), int(parts[2]))
        # flip the entry after computing it, simulating a corrupted cache
        value = hbnum.hb_higher(key.N, key.r, key.n, store)
        store.put(key, value + 1)
    code, report = run_sweep(config, store)
    print(report)
    return code


def _verdict_line(verdict: CongruenceVerdict) -> str:
    status = "holds" if verdict.holds else "FAILS"
    parts = [status]
    if verdict.modulus_exponent == inf:
        parts.append("exact equality required")
    else:
        modulus = verdict.p ** int(verdict.modulus_exponent)
        if verdict.lhs_residue is not None and verdict.lhs_residue == verdict.rhs_residue:
            parts.append(f"residue {verdict.lhs_residue} (mod {modulus})")
        elif verdict.lhs_residue is not None or verdict.rhs_residue is not None:
            parts.append(
                f"lhs ≡ {verdict.lhs_residue}, rhs ≡ {verdict.rhs_residue} "
                f"(mod {modulus})"
            )
    parts.append(f"ord_{verdict.p}(lhs-rhs) = {verdict.difference_ord}")
    return "; ".join(parts)


def _resolve_parameter(args: argparse.Namespace) -> int:
    if args.ordp_target is not None:
        return 1 + args.p**args.ordp_target
    if args.N is None:
        raise ValueError("provide -N or --ordp-target")
    return args.N


def cmd_congruence_classical(args: argparse.Namespace) -> int:
    store = _make_store(args)
    verdict = congruence.kummer_classical(args.p, args.m, args.n, args.nu, store)
    print(_verdict_line(verdict))
    return EXIT_OK if verdict.holds else EXIT_VERIFY


def cmd_congruence_hb_kummer(args: argparse.Namespace) -> int:
    store = _make_store(args)
    N = _resolve_parameter(args)
    need = congruence.ord_threshold(args.p, args.n, args.nu)
    print(f"threshold: ord_{args.p}(N-1) >= {need}")
    verdict = congruence.hb_kummer_corollary(args.p, N, args.n, args.nu, store)
    print(_verdict_line(verdict))
    return EXIT_OK if verdict.holds else EXIT_VERIFY


def cmd_congruence_hb_pair(args: argparse.Namespace) -> int:
    store = _make_store(args)
    N = _resolve_parameter(args)
    need = congruence.ord_threshold(args.p, args.n, args.nu, m=args.m)
    print(f"threshold: ord_{args.p}(N-1) >= {need}")
    verdict = congruence.hb_kummer_pair(args.p, N, args.m, args.n, args.nu, store)
    print(_verdict_line(verdict))
    return EXIT_OK if verdict.holds else EXIT_VERIFY


def cmd_congruence_factorial(args: argparse.Namespace) -> int:
    store = _make_store(args)
    verdict = congruence.hb_factorial_congruence(args.p, args.N, args.n, store)
    print(_verdict_line(verdict))
    return EXIT_OK if verdict.holds else EXIT_VERIFY


def cmd_convergents(args: argparse.Namespace) -> int:
    if args.route == "closed":
        pair = contfrac.convergent_closed(args.N, args.n)
    else:
        pair = contfrac.convergent_rec(args.N, args.n)
    print(f"P = {pair.P}, Q = {pair.Q}")
    if not args.check:
        return EXIT_OK
    store = _make_store(args)
    defect = contfrac.approximation_defect(pair, store)
    if defect.is_zero():
        print(f"defect ≡ 0 mod x^{args.n + 1}")
        return EXIT_OK
    first = next(i for i, c in enumerate(defect.coefficients) if c != 0)
    print(
        f"defect ≠ 0 mod x^{args.n + 1}: coefficient of x^{first} is "
        f"{format_rational(defect.coefficients[first])}"
    )
    return EXIT_VERIFY


def cmd_cache_audit(args: argparse.Namespace) -> int:
    path = getattr(args, "cache", None) or os.environ.get("HGBERN_CACHE")
    if not path:
        raise ValueError("cache-audit needs --cache PATH or HGBERN_CACHE")
    store = MemoStore(path)
    count = store.load()
    mismatches = []
    for key, value in store.items():
        fresh = hbnum.hb_higher(key.N, key.r, key.n, store=MemoStore())
        if fresh != value:
            mismatches.append((key, value, fresh))
    if mismatches:
        for key, value, fresh in mismatches:
            print(
                f"MISMATCH at {key.N} {key.r} {key.n}: cached "
                f"{format_rational(value)}, recomputed {format_rational(fresh)}"
            )
        return EXIT_VERIFY
    print(f"audited {count} entries: all match")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgbern",
        description="Exact hypergeometric Bernoulli numbers: values, tables, "
        "cross-route verification, congruences, convergents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one value by a chosen route")
    p.add_argument("-N", type=int, required=True, help="parameter N >= 1")
    p.add_argument("-n", type=int, required=True, help="index n >= 0")
    p.add_argument("-r", type=int, default=1, help="order r >= 1 (default 1)")
    p.add_argument("--route", choices=sorted(ROUTES), default="recurrence")
    p.add_argument("--decimal", type=int, metavar="K", help="also print K decimal digits")
    p.add_argument("--cache", help="cache file path")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="emit a table of values")
    p.add_argument("-N", type=_parse_range, required=True, metavar="RANGE")
    p.add_argument("-n", type=_parse_range, required=True, metavar="RANGE")
    p.add_argument("-r", type=_parse_range, default=(1,), metavar="RANGE")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.add_argument("--cache", help="cache file path")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-route agreement sweep")
    p.add_argument("-N", type=_parse_range, default=tuple(range(1, 6)), metavar="RANGE")
    p.add_argument("-n", type=_parse_range, default=tuple(range(0, 15)), metavar="RANGE")
    p.add_argument("-r", type=_parse_range, default=tuple(range(1, 4)), metavar="RANGE")
    p.add_argument(
        "--routes",
        default="recurrence,comp,binom,trudi,det,descent,descent-nested,convolution",
        help="comma-separated route names (at least two)",
    )
    p.add_argument("--parallel", type=int, default=1, help="worker threads")
    p.add_argument("--cache", help="cache file path")
    p.add_argument(
        "--inject-fault",
        metavar="N,r,n",
        help="testing aid: corrupt one in-memory cache entry before the sweep",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("congruence", help="p-adic congruence checks")
    csub = p.add_subparsers(dest="subcommand", required=True)

    c = csub.add_parser("classical", help="Kummer congruence for classical Bernoulli numbers")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-m", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--nu", type=int, default=0)
    c.add_argument("--cache", help="cache file path")
    c.set_defaults(func=cmd_congruence_classical)

    c = csub.add_parser("hb-kummer", help="single-index transfer congruence")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--nu", type=int, default=0)
    c.add_argument("-N", type=int, help="parameter N (explicit)")
    c.add_argument(
        "--ordp-target", type=int, metavar="T", help="use N = 1 + p^T instead of -N"
    )
    c.add_argument("--cache", help="cache file path")
    c.set_defaults(func=cmd_congruence_hb_kummer)

    c = csub.add_parser("hb-pair", help="Kummer pairing within one parameter family")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-m", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--nu", type=int, default=0)
    c.add_argument("-N", type=int, help="parameter N (explicit)")
    c.add_argument(
        "--ordp-target", type=int, metavar="T", help="use N = 1 + p^T instead of -N"
    )
    c.add_argument("--cache", help="cache file path")
    c.set_defaults(func=cmd_congruence_hb_pair)

    c = csub.add_parser("factorial", help="factorial-ladder congruence mod p^ord_p(N-1)")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-N", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--cache", help="cache file path")
    c.set_defaults(func=cmd_congruence_factorial)

    p = sub.add_parser("convergents", help="continued-fraction convergents")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--route", choices=("rec", "closed"), default="rec")
    p.add_argument("--check", action="store_true", help="verify the defect series vanishes")
    p.add_argument("--cache", help="cache file path")
    p.set_defaults(func=cmd_convergents)

    p = sub.add_parser("cache-audit", help="recompute every entry of a cache file")
    p.add_argument("--cache", help="cache file path (or HGBERN_CACHE)")
    p.set_defaults(func=cmd_cache_audit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RoutePreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ROUTE
    except HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
