"""Run the whole registry with default bounds and print a per-theorem timing table."""

import argparse
import time
from collections import defaultdict

from tfmzv.cache import EvalCache
from tfmzv.suite import Bounds, prime_range, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--prime-min", type=int, default=5)
    ap.add_argument("--prime-max", type=int, default=199)
    ap.add_argument("--cache", default=None)
    ap.add_argument("--out", default=None, help="write the JSON report here")
    args = ap.parse_args()

    seconds = defaultdict(float)
    start = time.perf_counter()
    report = run_suite(["all"], Bounds(), prime_range(args.prime_min, args.prime_max), jobs=args.jobs,
                       cache=EvalCache.open(args.cache),
                       progress=lambda o: seconds.__setitem__(o.instance.theorem, seconds[o.instance.theorem] + o.seconds))
    wall = time.perf_counter() - start
    for tid, row in report.summary()["by_theorem"].items():
        print(f"{tid:22s} pass {row['pass']:5d} fail {row['fail']:3d} skipped {row['skipped']:3d}  {seconds[tid]:7.2f}s")
    s = report.summary()
    print(f"total: {s['instances']} instances, {s['fail']} fail, {s['prime_checks']} prime checks, "
          f"{wall:.1f}s wall with {args.jobs} job(s)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
