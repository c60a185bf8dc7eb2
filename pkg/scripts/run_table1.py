#!/usr/bin/env python3
"""Reproduce the six-column benchmark table and compare brackets with the solver.

Usage: python scripts/run_table1.py [ORDER]
"""

import sys

from dirac_lpt.cli import render_table1, run_table1


def main():
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 15
    payload = run_table1(order)
    print(render_table1(payload))
    print("bracket estimates vs integrated eigenvalues:")
    for col in payload["columns"]:
        est = col["bracket"]["estimate"]
        gap = col["bracket"]["gap"]
        num = col["oracle"]["binding"]
        flag = "inside" if abs(est - num) < gap else "OUTSIDE"
        print(
            f"  {col['state']:>15} {col['mix']:<5} estimate {est:.6f} keV  "
            f"gap {gap:.2e}  integrated {num:.6f}  ({flag} the gap)"
        )


if __name__ == "__main__":
    main()
