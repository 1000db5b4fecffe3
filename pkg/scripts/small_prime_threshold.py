"""Check numeric statements at primes below the p >= weight + 3 threshold.

The suite never tests there.  This script records, per theorem, the
instances that fail at small primes and the largest failing gap p - weight.
"""

import argparse
from collections import defaultdict

from tfmzv.fp import PrimeCtx, odd_primes
from tfmzv.suite import NUMERIC, Bounds, check_numeric, descriptor, instances, min_prime, theorem_ids


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ids", nargs="*", help="numeric theorem ids (default: all numeric)")
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--show", type=int, default=3)
    args = ap.parse_args()

    ids = args.ids or [t for t in theorem_ids() if descriptor(t).kind == NUMERIC]
    ctxs = {p: PrimeCtx(p) for p in odd_primes(3, args.max_weight + 2)}
    for tid in ids:
        tested = failed = skipped = 0
        worst = None
        examples = []
        by_gap = defaultdict(lambda: [0, 0])
        for inst in instances(tid, Bounds(max_weight=args.max_weight)):
            for p, ctx in ctxs.items():
                if p >= min_prime(inst):
                    continue
                try:
                    out = check_numeric(inst, ctx, below_threshold=True)
                except ValueError:  # e.g. zA needs p >= k + 2
                    skipped += 1
                    continue
                if out.status == "skipped":
                    skipped += 1
                    continue
                tested += 1
                gap = p - inst.weight
                by_gap[gap][0] += 1
                if out.status == "fail":
                    failed += 1
                    by_gap[gap][1] += 1
                    worst = gap if worst is None else max(worst, gap)
                    if len(examples) < args.show:
                        examples.append(f"{inst.label()} p={p} residual={out.residual}")
        gaps = " ".join(f"{g:+d}:{f}/{n}" for g, (n, f) in sorted(by_gap.items()))
        print(f"{tid:16s} {tested:5d} checks below threshold, {failed:4d} fail, {skipped:4d} not evaluable; "
              f"largest failing p-weight: {worst}")
        if gaps:
            print(f"{'':16s} fails/checks by p-weight: {gaps}")
        for line in examples:
            print(f"{'':16s} e.g. {line}")


if __name__ == "__main__":
    main()
