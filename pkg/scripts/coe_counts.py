#!/usr/bin/env python3
"""Tabulate #C(F), its rank-one members and tree depth for odd F.

Usage:
  python scripts/coe_counts.py --max-frobenius 31
"""

import argparse
import time

from semicov.coe import coe_rank1, enumerate_coe


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--max-frobenius", type=int, default=25)
    args = parser.parse_args()

    print(f"{'F':>4} {'members':>9} {'rank1':>6} {'depth':>6} {'seconds':>8}")
    for f in range(1, args.max_frobenius + 1, 2):
        start = time.perf_counter()
        tree = enumerate_coe(f)
        elapsed = time.perf_counter() - start
        depth = max(node.depth for node in tree.nodes)
        print(f"{f:>4} {len(tree):>9} {len(coe_rank1(f)):>6} {depth:>6} {elapsed:>8.3f}")


if __name__ == "__main__":
    main()
