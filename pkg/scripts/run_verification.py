#!/usr/bin/env python3
"""Run every verification suite and print a summary table.

Equivalent to `hurwitz-ga verify all` but with per-suite timing, which is
handy when tuning the trial count.
"""

import argparse
import sys
import time

from hurwitz_ga.verify import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    total_fail = 0
    for name in SUITES:
        start = time.perf_counter()
        checks = run_suite(name, trials=args.trials, seed=args.seed)
        elapsed = time.perf_counter() - start
        failed = [c for c in checks if not c.passed]
        total_fail += len(failed)
        print(
            f"{name:20s} {len(checks) - len(failed):3d}/{len(checks):3d} passed"
            f"  ({elapsed:6.2f} s)"
        )
        for c in failed:
            print(f"    FAIL {c.name}: {c.counterexample}")
    print("all suites passed" if total_fail == 0 else f"{total_fail} checks failed")
    return 0 if total_fail == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
