"""Command-line front end.

Subcommands:

    compute      print u/v/d sequences or the s/r triangle, exact or mod p
    grid         export a residue grid of r(n, k) mod p as table, CSV or PGM
    verify       run congruence suites; exit 1 if any suite fails
    scan-period  exploratory residue-period scan for primes p = 1 (mod 4)
    cache        build or validate an on-disk value cache

Exit status: 0 on success (all suites passing), 1 when a verification suite
fails, 2 for usage errors and unreadable/corrupt files.  The default cache
directory may be set through the ROMIK_CACHE_DIR environment variable and
overridden per run with --cache-dir.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import cache_io, verify
from .core import SequenceCache
from .residues import VanishingThresholds, build_residue_grid, is_prime

CACHE_DIR_ENV = "ROMIK_CACHE_DIR"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="romik",
        description="Exact computation and congruence verification for the "
        "Romik sequence d(n) and its auxiliary tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print sequence values")
    p_compute.add_argument("--seq", required=True, choices=("u", "v", "d", "s", "r"))
    p_compute.add_argument("--max", required=True, type=int, metavar="N",
                           help="largest index n to print")
    p_compute.add_argument("--mod", type=int, metavar="P",
                           help="reduce every value mod the prime P")
    p_compute.add_argument("--format", choices=("table", "csv"), default="table")
    p_compute.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p_compute.add_argument("--cache-dir", metavar="DIR")

    p_grid = sub.add_parser("grid", help="export the triangular grid r(n, k) mod p")
    p_grid.add_argument("--prime", required=True, type=int)
    p_grid.add_argument("--max-n", required=True, type=int)
    p_grid.add_argument("--format", choices=("table", "csv", "pgm"), default="csv")
    p_grid.add_argument("--output", metavar="PATH")
    p_grid.add_argument("--highlight-n0", action="store_true",
                        help="emit the k = n0 boundary as a sidecar marker "
                        "(primes p = 3 mod 4 only)")
    p_grid.add_argument("--cache-dir", metavar="DIR")

    p_verify = sub.add_parser("verify", help="run congruence verification suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("parity", "mod5", "vanishing", "uv", "sums", "all"))
    p_verify.add_argument("--prime", type=int,
                          help="prime for the vanishing/uv suites")
    p_verify.add_argument("--max", type=int, metavar="N",
                          help="range bound override for a single suite")
    p_verify.add_argument("--format", choices=("table", "csv"), default="table")
    p_verify.add_argument("--cache-dir", metavar="DIR")

    p_scan = sub.add_parser("scan-period", help="scan d(n) mod p for a residue period")
    p_scan.add_argument("--prime", required=True, type=int)
    p_scan.add_argument("--bound", required=True, type=int,
                        help="scan d(0..bound); must be at least 4p")
    p_scan.add_argument("--cache-dir", metavar="DIR")

    p_cache = sub.add_parser("cache", help="manage the on-disk cache")
    cache_sub = p_cache.add_subparsers(dest="cache_command", required=True)
    p_build = cache_sub.add_parser("build", help="compute values and store them")
    p_build.add_argument("--dir", required=True)
    p_build.add_argument("--max", required=True, type=int, metavar="N")
    p_check = cache_sub.add_parser("check", help="validate stored files and summarize")
    p_check.add_argument("--dir", required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "compute": _run_compute,
        "grid": _run_grid,
        "verify": _run_verify,
        "scan-period": _run_scan,
        "cache": _run_cache,
    }[args.command]
    try:
        return handler(args, parser)
    except (cache_io.CacheFormatError, ValueError) as exc:
        print(f"romik: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        path = getattr(exc, "filename", None)
        where = f"{path}: " if path else ""
        print(f"romik: error: {where}{exc.strerror or exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


# -- shared helpers ------------------------------------------------------


def _cache_dir(args) -> str | None:
    return args.cache_dir or os.environ.get(CACHE_DIR_ENV) or None


def _open_cache(args) -> tuple[SequenceCache, tuple[int, ...]]:
    directory = _cache_dir(args)
    if directory and os.path.isdir(directory):
        cache = cache_io.load_cache(directory)
    else:
        cache = SequenceCache()
    sizes = _cache_sizes(cache)
    return cache, sizes


def _cache_sizes(cache: SequenceCache) -> tuple[int, ...]:
    return (
        len(cache.known_values("u")),
        len(cache.known_values("v")),
        len(cache.known_values("d")),
        cache.s_bound,
    )


def _close_cache(args, cache: SequenceCache, sizes_before: tuple[int, ...]) -> None:
    directory = _cache_dir(args)
    if directory and _cache_sizes(cache) != sizes_before:
        cache_io.store_cache(directory, cache)


def _emit(args, lines: list[str]) -> None:
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _require_prime_arg(parser, p: int, what: str = "--prime") -> None:
    if not is_prime(p):
        parser.error(f"{what} must be prime, got {p}")


# -- compute -------------------------------------------------------------


def _run_compute(args, parser) -> int:
    if args.max < 0:
        parser.error("--max must be >= 0")
    if args.seq in ("s", "r") and args.max < 1:
        parser.error("--max must be >= 1 for the s/r triangle")
    if args.mod is not None:
        _require_prime_arg(parser, args.mod, "--mod")
    cache, before = _open_cache(args)
    reduce = (lambda x: x % args.mod) if args.mod is not None else (lambda x: x)

    if args.seq in ("u", "v", "d"):
        value = getattr(cache, args.seq)
        values = [reduce(value(n)) for n in range(args.max + 1)]
        if args.format == "csv":
            lines = ["n,value"] + [f"{n},{x}" for n, x in enumerate(values)]
        else:
            lines = [",".join(str(x) for x in values)]
    else:
        cache.build_s_table(args.max)
        entry = cache.s if args.seq == "s" else cache.r
        if args.format == "csv":
            lines = ["n,k,value"]
            for n in range(1, args.max + 1):
                lines.extend(f"{n},{k},{reduce(entry(n, k))}" for k in range(1, n + 1))
        else:
            lines = [
                f"{n}: " + " ".join(str(reduce(entry(n, k))) for k in range(1, n + 1))
                for n in range(1, args.max + 1)
            ]
    _emit(args, lines)
    _close_cache(args, cache, before)
    return 0


# -- grid ----------------------------------------------------------------


def _run_grid(args, parser) -> int:
    _require_prime_arg(parser, args.prime)
    if args.max_n < 1:
        parser.error("--max-n must be >= 1")
    if args.highlight_n0 and args.prime % 4 != 3:
        parser.error("--highlight-n0 requires a prime congruent to 3 mod 4")
    cache, before = _open_cache(args)
    grid = build_residue_grid(args.prime, args.max_n, cache)
    if args.format == "csv":
        lines = grid.csv_lines()
    elif args.format == "pgm":
        lines = grid.pgm_lines()
    else:
        lines = [
            f"{n}: " + " ".join(str(grid.entry(n, k)) for k in range(1, n + 1))
            for n in range(1, args.max_n + 1)
        ]
    _emit(args, lines)
    if args.highlight_n0:
        n0 = VanishingThresholds.for_prime(args.prime).n0
        marker = f"n0={n0}\n"
        if args.output:
            with open(args.output + ".n0", "w", encoding="ascii") as handle:
                handle.write(marker)
        else:
            sys.stderr.write(marker)
    _close_cache(args, cache, before)
    return 0


# -- verify --------------------------------------------------------------


def _run_verify(args, parser) -> int:
    cache, before = _open_cache(args)
    reports = []
    suite = args.suite
    if suite == "all":
        if args.max is not None or args.prime is not None:
            parser.error("--max/--prime apply to a single suite, not --suite all")
        reports.append(verify.verify_parity(cache))
        reports.append(verify.verify_mod5(cache))
        for p in (3, 7, 11):
            reports.append(verify.verify_mod_p_vanishing(cache, p))
        for p in (5, 3, 7):
            max_n = 40 if p == 5 else VanishingThresholds.for_prime(p).n0 + 20
            reports.append(verify.verify_uv_structure(cache, p, max_n))
        reports.append(verify.verify_even_odd_sums(cache, 60))
    elif suite == "parity":
        max_n = args.max if args.max is not None else verify.DEFAULT_MAX_N
        reports.append(verify.verify_parity(cache, max_n))
    elif suite == "mod5":
        max_n = args.max if args.max is not None else verify.DEFAULT_MAX_N
        reports.append(verify.verify_mod5(cache, max_n))
    elif suite == "sums":
        max_n = args.max if args.max is not None else 60
        reports.append(verify.verify_even_odd_sums(cache, max_n))
    elif suite == "vanishing":
        if args.prime is None:
            parser.error("--suite vanishing requires --prime")
        _require_prime_arg(parser, args.prime)
        if args.prime % 4 != 3:
            parser.error(f"--suite vanishing requires a prime congruent to 3 mod 4, got {args.prime}")
        reports.append(verify.verify_mod_p_vanishing(cache, args.prime, args.max))
    else:  # uv
        if args.prime is None:
            parser.error("--suite uv requires --prime")
        _require_prime_arg(parser, args.prime)
        if args.prime == 2:
            parser.error("--suite uv requires an odd prime")
        if args.max is not None:
            max_n = args.max
        elif args.prime % 4 == 3:
            max_n = VanishingThresholds.for_prime(args.prime).n0 + 20
        else:
            max_n = 40
        reports.append(verify.verify_uv_structure(cache, args.prime, max_n))

    if args.format == "csv":
        print(verify.REPORT_CSV_HEADER)
        for report in reports:
            print(report.csv_row())
    else:
        for report in reports:
            print(report.line())
            if report.details:
                print(f"  note: {report.details}")
    _close_cache(args, cache, before)
    return 0 if all(r.passed for r in reports) else 1


# -- scan-period ---------------------------------------------------------


def _run_scan(args, parser) -> int:
    _require_prime_arg(parser, args.prime)
    if args.prime % 4 != 1:
        parser.error(f"--prime must be congruent to 1 mod 4, got {args.prime}")
    if args.bound < 4 * args.prime:
        parser.error(f"--bound must be at least 4p = {4 * args.prime}")
    cache, before = _open_cache(args)
    result = verify.scan_periodicity(cache, args.prime, args.bound)
    if result.conclusive:
        cycle = ",".join(str(x) for x in result.residue_cycle)
        print(
            f"PRIME {result.prime} BOUND {result.scan_bound} "
            f"PREPERIOD {result.preperiod} PERIOD {result.period} CYCLE {cycle}"
        )
    else:
        print(f"PRIME {result.prime} BOUND {result.scan_bound} INCONCLUSIVE")
    _close_cache(args, cache, before)
    return 0


# -- cache ---------------------------------------------------------------


def _run_cache(args, parser) -> int:
    if args.cache_command == "build":
        if args.max < 0:
            parser.error("--max must be >= 0")
        cache = SequenceCache()
        cache.d(args.max)
        cache.u(args.max)
        cache.v(args.max)
        cache_io.store_cache(args.dir, cache)
        print(f"stored u, v, d (0..{args.max}) and s-table (bound {cache.s_bound}) in {args.dir}")
        return 0
    cache = cache_io.load_cache(args.dir)
    for name in ("u", "v", "d"):
        print(f"SEQ {name} COUNT {len(cache.known_values(name))}")
    print(f"SEQ s ROWS {cache.s_bound}")
    return 0
