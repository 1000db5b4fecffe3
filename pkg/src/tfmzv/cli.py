"""Command line front end: ``eval``, ``verify`` and ``list``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .cache import CacheError, EvalCache, RecordingDict, cache_dir_from
from .fp import MAX_PRIME, PrimeCtx, fmzv_eval, fmzv_t_eval
from .indices import parse_index
from .suite import Bounds, UnknownTheorem, expand_ids, prime_range, registry, run_suite
from .suite.runner import DEFAULT_PRIMES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    ids: tuple[str, ...] = ()
    bounds: Bounds = Bounds()
    primes: tuple[int, ...] = ()
    jobs: int = 1
    fmt: str = "json"
    out: str | None = None
    cache_dir: str | None = None


def _index_arg(text: str):
    try:
        k = parse_index(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not k:
        raise argparse.ArgumentTypeError("index must be non-empty")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tfmzv", description="t-interpolated finite multiple zeta values over F_p")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log cache activity")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one index at one prime")
    ev.add_argument("--prime", type=int, required=True)
    ev.add_argument("--index", type=_index_arg, required=True, help="comma separated, e.g. 1,2")
    mode = ev.add_mutually_exclusive_group()
    mode.add_argument("--star", action="store_true", help="print the star value (t = 1)")
    mode.add_argument("--strict", action="store_true", help="print the strict value (t = 0)")
    ev.add_argument("--cache", default=None, help="cache directory (default: $FMZV_CACHE_DIR)")

    ve = sub.add_parser("verify", help="check theorem instances")
    ve.add_argument("ids", nargs="*", help="theorem ids, or 'all'")
    d = Bounds()
    ve.add_argument("--max-weight", type=int, default=d.max_weight)
    ve.add_argument("--max-depth", type=int, default=d.max_depth)
    ve.add_argument("--prime-min", type=int, default=DEFAULT_PRIMES[0])
    ve.add_argument("--prime-max", type=int, default=DEFAULT_PRIMES[1])
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--format", choices=("json", "csv"), default="json")
    ve.add_argument("--out", default=None, help="report path (default: stdout)")
    ve.add_argument("--cache", default=None, help="cache directory (default: $FMZV_CACHE_DIR)")

    sub.add_parser("list", help="show the theorem registry")
    return parser


def config_from(args: argparse.Namespace) -> CliConfig:
    if args.command != "verify":
        return CliConfig(args.command)
    try:
        ids = tuple(expand_ids(args.ids))
    except UnknownTheorem as exc:
        raise UsageError(str(exc)) from None
    if args.max_weight < 1 or args.max_depth < 1:
        raise UsageError("--max-weight and --max-depth must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.prime_min > args.prime_max:
        raise UsageError(f"empty prime range [{args.prime_min}, {args.prime_max}]")
    if args.prime_max > MAX_PRIME:
        raise UsageError(f"--prime-max must be <= {MAX_PRIME}")
    bounds = Bounds(max_weight=args.max_weight, max_depth=args.max_depth)
    return CliConfig(
        "verify", ids, bounds, tuple(prime_range(args.prime_min, args.prime_max)), args.jobs,
        args.format, args.out, cache_dir_from(args.cache),
    )


def cmd_eval(args) -> int:
    try:
        cache = EvalCache.open(cache_dir_from(args.cache))
    except CacheError as exc:
        raise UsageError(str(exc)) from None
    try:
        ctx = PrimeCtx(args.prime, RecordingDict(cache.for_prime(args.prime)))
    except ValueError as exc:  # includes NotPrimeError
        raise UsageError(str(exc)) from None
    k = args.index
    if args.star or args.strict:
        print(fmzv_eval(ctx, k, star=args.star))
        return EXIT_OK
    poly = fmzv_t_eval(ctx, k)
    cache.append(((ctx.p, idx), c) for idx, c in ctx.tcache.drain())
    print(json.dumps({"p": ctx.p, "index": list(k), "tcoeffs": poly.to_list()}, separators=(",", ":")))
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    try:
        cache = EvalCache.open(cfg.cache_dir)
    except CacheError as exc:
        raise UsageError(str(exc)) from None
    report = run_suite(cfg.ids, cfg.bounds, cfg.primes, jobs=cfg.jobs, cache=cache)
    text = report.render(cfg.fmt)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    s = report.summary()
    print(
        f"{s['instances']} instances: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped; "
        f"{s['prime_checks']} prime checks, {s['prime_skips']} prime skips ({report.seconds:.1f}s)",
        file=sys.stderr,
    )
    if cache.malformed:
        print(f"cache: skipped {len(cache.malformed)} malformed line(s): {cache.malformed[:10]}", file=sys.stderr)
    for o in report.failed[:20]:
        print(f"FAIL {o.instance.label()} p={o.prime} residual={o.residual}", file=sys.stderr)
    return report.exit_code


def cmd_list() -> int:
    for d in registry():
        print(f"{d.id:24s} {d.kind:16s} {d.anchor}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "list":
            return cmd_list()
        return cmd_verify(config_from(args))
    except UsageError as exc:
        print(f"tfmzv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
