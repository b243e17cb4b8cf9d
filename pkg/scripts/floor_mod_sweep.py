#!/usr/bin/env python3
"""Compare the floor/remainder test for F outside <x-1, x, x+1> with a table fill.

Prints, per odd F, how many odd x in [3, F-2] pass, and any disagreement.
"""

import argparse

from semicov.coe import floor_mod_test
from semicov.oracle import brute_membership


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-frobenius", type=int, default=101)
    parser.add_argument("--quiet", action="store_true", help="only print the totals")
    args = parser.parse_args()

    bad = 0
    total = 0
    for f in range(5, args.max_frobenius + 1, 2):
        passing = []
        for x in range(3, f - 1, 2):
            total += 1
            fast = floor_mod_test(x, f)
            if fast != (not brute_membership([x - 1, x, x + 1], f)):
                bad += 1
                print(f"mismatch: x={x} F={f}")
            if fast:
                passing.append(x)
        if not args.quiet:
            print(f"F={f:>4}: {len(passing):>3} odd x pass {passing}")
    print(f"{total} pairs checked, {bad} mismatches")


if __name__ == "__main__":
    main()
