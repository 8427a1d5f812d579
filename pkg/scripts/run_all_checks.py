"""Run every verification suite and print a one-line summary per suite.

    python scripts/run_all_checks.py [--cutoff 8] [--n 2]
"""

import argparse
import sys
import time

from sp4osc import suites


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--cutoff", type=int, default=8)
    parser.add_argument("--n", type=int, default=2)
    args = parser.parse_args()

    all_ok = True
    for name in suites.SUITES[1:]:
        start = time.perf_counter()
        rep = suites.run_suite(name, args.cutoff, args.n)
        elapsed = time.perf_counter() - start
        all_ok &= rep.ok
        print(f"{name:<9s} {rep.passed:4d} passed {rep.failed:3d} failed  max residual {rep.max_residual:.2e}  {elapsed:.2f} s")
        for c in rep.failures():
            print(f"    FAIL {c.label}: {c.residual:.3e} >= {c.tolerance:.0e}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
