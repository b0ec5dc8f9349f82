#!/usr/bin/env python3
"""Compare the closed-form rigid classification against the brute-force
rigidity-equation oracle over the desk-scale grid, with timings.

Usage: python scripts/rigid_scan.py [--max-n 5] [--max-m 16]
"""
import argparse
import time

from cmfamilies.cuspidal import rigid_modules
from cmfamilies.exact import CherednikParameter


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-m", type=int, default=16)
    args = ap.parse_args()

    t0 = time.time()
    for n in range(1, args.max_n + 1):
        for m in range(-(n - 1), n):
            param = CherednikParameter.type_B(m, 1)
            cf = rigid_modules("B", n, param, "closed_form")
            orc = rigid_modules("B", n, param, "equation_oracle")
            status = "ok" if cf == orc else "MISMATCH"
            print(f"B n={n} m={m:+d}: {len(cf)} rigid, oracle {status}")
    print(f"-- type B done in {time.time() - t0:.1f}s")

    t0 = time.time()
    for m in range(5, args.max_m + 1):
        params = (
            [(1, 1)] if m % 2 else [(1, 1), (-1, 1), (1, 2), (0, 1), (1, 0)]
        )
        for a, b in params:
            param = CherednikParameter.type_I2(a, b)
            cf = rigid_modules("I2", m, param, "closed_form")
            orc = rigid_modules("I2", m, param, "equation_oracle")
            status = "ok" if cf == orc else "MISMATCH"
            print(f"I2({m}) a={a} b={b}: rigid {cf} oracle {status}")
    print(f"-- dihedral done in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
