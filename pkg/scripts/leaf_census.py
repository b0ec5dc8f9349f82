#!/usr/bin/env python3
"""Tabulate symplectic-leaf posets for types B and D and report where a
zero-dimensional (cuspidal) leaf exists.

Usage: python scripts/leaf_census.py [--max-n 10]
"""
import argparse

from cmfamilies.cuspidal import leaves_B, leaves_D


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        for m in range(0, 4):
            lp = leaves_B(n, m, 1)
            dims = sorted(l.dimension for l in lp.leaves)
            star = " *" if 0 in dims else ""
            print(f"B n={n} m={m}: dims {dims}{star}")
    for n in range(2, args.max_n + 1):
        lp = leaves_D(n, 1)
        dims = sorted(l.dimension for l in lp.leaves)
        star = " *" if 0 in dims else ""
        print(f"D n={n}: dims {dims}{star}")


if __name__ == "__main__":
    main()
