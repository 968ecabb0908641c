"""Run every theorem check over all dissections of polygons up to --max-m.

Usage:

    python scripts/run_exhaustive.py --max-m 7 --structural

Prints one row per (theorem, m) with counts and timing, and exits nonzero
if anything fails.  The m=8 main sweep takes a few seconds; anything past
m=9 is refused by the library's safety cap unless ACCORDION_TAU_MAX_M says
otherwise.
"""

import argparse
import sys
import time

from accordion_tau.verify import (
    verify_consistency_exhaustive,
    verify_idempotent_exhaustive,
    verify_main_exhaustive,
    verify_nested_exhaustive,
)

DRIVERS = {
    "main": verify_main_exhaustive,
    "nested": verify_nested_exhaustive,
    "idempotent": verify_idempotent_exhaustive,
    "consistency": verify_consistency_exhaustive,
}

# nested/idempotent sweeps blow up fast; keep their default ceiling lower
DEFAULT_CEILING = {"main": 8, "nested": 7, "idempotent": 7, "consistency": 7}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-m", type=int, default=7)
    parser.add_argument("--min-m", type=int, default=4)
    parser.add_argument(
        "--theorem",
        choices=[*DRIVERS, "all"],
        default="all",
    )
    parser.add_argument(
        "--structural",
        action="store_true",
        help="audit every complex that shows up (pseudomanifold, dual "
        "regularity, sign coherence, independence, injectivity)",
    )
    args = parser.parse_args()

    names = list(DRIVERS) if args.theorem == "all" else [args.theorem]
    bad = 0
    print(f"{'theorem':<12} {'m':>2} {'passed':>7} {'checked':>8} {'audited':>8} {'time':>8}")
    for name in names:
        ceiling = min(args.max_m, DEFAULT_CEILING[name])
        for m in range(args.min_m, ceiling + 1):
            t0 = time.perf_counter()
            if name == "consistency":
                summary = DRIVERS[name](m)
            else:
                summary = DRIVERS[name](m, structural=args.structural)
            dt = time.perf_counter() - t0
            print(
                f"{name:<12} {m:>2} {summary.passed:>7} {summary.checked:>8} "
                f"{summary.complexes_audited:>8} {dt:>7.2f}s"
            )
            if not summary.ok:
                bad += 1
                for msg in summary.failures[:5] + summary.structural[:5]:
                    print(f"    ! {msg}")
    if bad:
        print(f"{bad} sweep(s) failed", file=sys.stderr)
        return 1
    print("all sweeps passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
