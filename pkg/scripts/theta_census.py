#!/usr/bin/env python3
"""Oversemigroup counts over every numerical semigroup of bounded genus.

For each genus g, reports how many semigroups have that genus and the
smallest, mean and largest size of their oversemigroup families, and checks
that the number of rank-one members equals g.
"""

import argparse
from collections import defaultdict
from statistics import mean

from semicov.oracle import brute_semigroups
from semicov.theta import enumerate_theta, theta_rank1


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-genus", type=int, default=8)
    args = parser.parse_args()

    sizes = defaultdict(list)
    for delta in brute_semigroups(args.max_genus):
        sizes[delta.genus].append(len(enumerate_theta(delta)))
        assert len(theta_rank1(delta)) == delta.genus

    print(f"{'genus':>5} {'count':>6} {'min':>5} {'mean':>8} {'max':>5}")
    for g in sorted(sizes):
        s = sizes[g]
        print(f"{g:>5} {len(s):>6} {min(s):>5} {mean(s):>8.2f} {max(s):>5}")


if __name__ == "__main__":
    main()
