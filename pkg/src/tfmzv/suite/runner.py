"""Checking instances and assembling deterministic reports."""

from __future__ import annotations

import csv
import io
import json
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .. import __version__
from ..cache import EvalCache, RecordingDict
from ..fp import MAX_PRIME, PDividesDenominator, PrimeCtx, odd_primes
from .registry import NUMERIC, PER_PRIME, SYMBOLIC, Bounds, Instance, descriptor, expand_ids, instances
from .relations import NUMERIC_BUILDERS, SYMBOLIC_BUILDERS

THRESHOLD_OFFSET = 3
DEFAULT_PRIMES = (11, 199)


@dataclass
class CheckOutcome:
    instance: Instance
    status: str  # pass | fail | skipped
    prime: int | None = None
    residual: object = None
    reason: str = ""
    primes_tested: tuple[int, ...] = ()
    skipped: tuple[tuple[int, str], ...] = ()
    failures: tuple[tuple[int, tuple[int, ...]], ...] = ()
    seconds: float = field(default=0.0, compare=False)

    @property
    def kind(self) -> str:
        return descriptor(self.instance.theorem).kind

    def to_json(self) -> dict:
        out = {
            "theorem": self.instance.theorem,
            "params": self.instance.params_json(),
            "weight": self.instance.weight,
            "kind": self.kind,
            "status": self.status,
        }
        if self.kind != SYMBOLIC:
            out["primes_tested"] = len(self.primes_tested)
            out["skipped"] = [{"prime": p, "reason": r} for p, r in self.skipped]
        if self.status == "fail":
            if self.prime is not None:
                out["prime"] = self.prime
            out["residual"] = self.residual
            if len(self.failures) > 1:
                out["failures"] = [{"prime": p, "residual": list(r)} for p, r in self.failures]
        if self.reason:
            out["reason"] = self.reason
        return out


def min_prime(inst: Instance) -> int:
    """Smallest prime a check may use: any odd prime for per-prime-exact kinds."""
    if descriptor(inst.theorem).kind == PER_PRIME:
        return 3
    return inst.weight + THRESHOLD_OFFSET


@lru_cache(maxsize=4096)
def _plan(inst: Instance):
    return NUMERIC_BUILDERS[inst.theorem](**inst.kwargs)


def check_numeric(inst: Instance, ctx: PrimeCtx, below_threshold: bool = False) -> CheckOutcome:
    """Evaluate one instance at one prime; pass iff the residual polynomial vanishes.

    Primes below ``min_prime`` are refused unless ``below_threshold`` is set
    (used for exploring small primes; the suite never sets it).
    """
    kind = descriptor(inst.theorem).kind
    if kind == SYMBOLIC:
        raise ValueError(f"{inst.theorem} is symbolic; use check_symbolic")
    if ctx.p < min_prime(inst) and not below_threshold:
        raise ValueError(f"p={ctx.p} is below the threshold {min_prime(inst)} for {inst.label()}")
    start = time.perf_counter()
    try:
        res = _plan(inst)(ctx)
    except PDividesDenominator as exc:
        return CheckOutcome(inst, "skipped", prime=ctx.p, reason=str(exc), seconds=time.perf_counter() - start)
    status = "pass" if res.is_zero() else "fail"
    return CheckOutcome(
        inst, status, prime=ctx.p, residual=None if status == "pass" else res.to_list(),
        primes_tested=(ctx.p,), seconds=time.perf_counter() - start,
    )


def check_symbolic(inst: Instance) -> CheckOutcome:
    if descriptor(inst.theorem).kind != SYMBOLIC:
        raise ValueError(f"{inst.theorem} is not symbolic; use check_numeric")
    start = time.perf_counter()
    diff = SYMBOLIC_BUILDERS[inst.theorem](**inst.kwargs)
    if diff:
        return CheckOutcome(inst, "fail", residual=diff.to_json(), seconds=time.perf_counter() - start)
    return CheckOutcome(inst, "pass", seconds=time.perf_counter() - start)


def check_over_primes(inst: Instance, primes: Sequence[int], ctx_for) -> CheckOutcome:
    """Aggregate per-prime outcomes for one instance."""
    start = time.perf_counter()
    usable = [p for p in primes if p >= min_prime(inst)]
    if not usable:
        return CheckOutcome(inst, "skipped", reason=f"no tested prime >= {min_prime(inst)}")
    tested, skipped, failures = [], [], []
    for p in usable:
        one = check_numeric(inst, ctx_for(p))
        if one.status == "skipped":
            skipped.append((p, one.reason))
            continue
        tested.append(p)
        if one.status == "fail":
            failures.append((p, tuple(one.residual)))
    if failures:
        status = "fail"
    elif tested:
        status = "pass"
    else:
        status = "skipped"
    first = failures[0] if failures else (None, None)
    return CheckOutcome(
        inst, status, prime=first[0], residual=list(first[1]) if first[1] is not None else None,
        reason="every prime skipped" if status == "skipped" else "",
        primes_tested=tuple(tested), skipped=tuple(skipped), failures=tuple(failures),
        seconds=time.perf_counter() - start,
    )


# -- worker state ---------------------------------------------------------------------

_CTXS: dict[int, PrimeCtx] = {}
_SEED: dict = {}
_PRIMES: tuple[int, ...] = ()


def _init_worker(seed: dict, primes: tuple[int, ...]) -> None:
    global _SEED, _PRIMES
    _CTXS.clear()
    _SEED = seed
    _PRIMES = primes


def _ctx(p: int) -> PrimeCtx:
    ctx = _CTXS.get(p)
    if ctx is None:
        ctx = _CTXS[p] = PrimeCtx(p, RecordingDict(_SEED.get(p, {})))
    return ctx


def _drain() -> list:
    out = []
    for p in sorted(_CTXS):
        out.extend(((p, idx), c) for idx, c in _CTXS[p].tcache.drain())
    return out


def _run_one(inst: Instance):
    if descriptor(inst.theorem).kind == SYMBOLIC:
        outcome = check_symbolic(inst)
    else:
        outcome = check_over_primes(inst, _PRIMES, _ctx)
    return outcome, _drain()


# -- reports ----------------------------------------------------------------------------

CSV_FIELDS = ("theorem", "params", "weight", "kind", "status", "primes_tested", "skipped_primes",
              "failing_prime", "residual", "reason")


@dataclass
class Report:
    ids: list[str]
    bounds: Bounds
    primes: list[int]
    outcomes: list[CheckOutcome]
    seconds: float = field(default=0.0, compare=False)

    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for o in self.outcomes:
            counts[o.status] += 1
        return {
            "instances": len(self.outcomes),
            **counts,
            "prime_checks": sum(len(o.primes_tested) for o in self.outcomes),
            "prime_skips": sum(len(o.skipped) for o in self.outcomes),
            "by_theorem": {
                tid: {s: sum(1 for o in self.outcomes if o.instance.theorem == tid and o.status == s)
                      for s in ("pass", "fail", "skipped")}
                for tid in self.ids
            },
        }

    @property
    def failed(self) -> list[CheckOutcome]:
        return [o for o in self.outcomes if o.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_dict(self) -> dict:
        return {
            "suite": {"name": "tfmzv-verify", "version": __version__, "theorems": self.ids},
            "bounds": self.bounds.to_json(),
            "primes": self.primes,
            "outcomes": [o.to_json() for o in self.outcomes],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for o in self.outcomes:
            d = o.to_json()
            writer.writerow([
                d["theorem"],
                json.dumps(d["params"], separators=(",", ":"), sort_keys=True),
                d["weight"],
                d["kind"],
                d["status"],
                d.get("primes_tested", ""),
                " ".join(str(s["prime"]) for s in d.get("skipped", [])),
                d.get("prime", ""),
                json.dumps(d["residual"], separators=(",", ":")) if "residual" in d else "",
                d.get("reason", ""),
            ])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown report format {fmt!r}")


def prime_range(lo: int, hi: int) -> list[int]:
    if hi > MAX_PRIME:
        raise ValueError(f"prime range must stay within p <= {MAX_PRIME}")
    if lo > hi:
        raise ValueError(f"empty prime range [{lo}, {hi}]")
    return odd_primes(lo, hi)


def run_suite(
    ids: Iterable[str],
    bounds: Bounds | None = None,
    primes: Sequence[int] | None = None,
    jobs: int = 1,
    cache: EvalCache | None = None,
    progress=None,
) -> Report:
    """Check every instance of every requested theorem.

    Outcomes follow registry order and instance order regardless of
    ``jobs``.  New interpolated values are handed back to the parent and
    written through ``cache`` (one writer).
    """
    start = time.perf_counter()
    ids = expand_ids(ids)
    bounds = bounds or Bounds()
    primes = tuple(sorted(set(primes if primes is not None else prime_range(*DEFAULT_PRIMES))))
    for p in primes:
        PrimeCtx(p)  # validate before forking
    cache = cache or EvalCache()
    work = [inst for tid in ids for inst in instances(tid, bounds)]
    seed: dict[int, dict] = {}
    for (p, idx), c in cache.values.items():
        seed.setdefault(p, {})[idx] = c

    outcomes: list[CheckOutcome] = []
    if jobs <= 1 or len(work) < 2:
        _init_worker(seed, primes)
        results = map(_run_one, work)
        pool = None
    else:
        pool = mp.get_context("fork").Pool(jobs, initializer=_init_worker, initargs=(seed, primes))
        results = pool.imap(_run_one, work, chunksize=max(1, min(16, len(work) // (jobs * 8) or 1)))
    try:
        for outcome, records in results:
            outcomes.append(outcome)
            if records:
                cache.append(records)
            if progress is not None:
                progress(outcome)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return Report(ids, bounds, list(primes), outcomes, seconds=time.perf_counter() - start)


__all__ = [
    "CheckOutcome",
    "DEFAULT_PRIMES",
    "NUMERIC",
    "Report",
    "THRESHOLD_OFFSET",
    "check_numeric",
    "check_over_primes",
    "check_symbolic",
    "min_prime",
    "prime_range",
    "run_suite",
]
