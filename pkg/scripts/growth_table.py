#!/usr/bin/env python3
"""Print the witness-budget growth table: the budget, its n-th root, and the
minimized per-degree budget, for n = 1 .. n_max.

Example:
    python scripts/growth_table.py --q 3 --n-max 40
"""

from __future__ import annotations

import argparse

import sumsetcover as sc


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=40)
    parser.add_argument("--digits", type=int, default=12)
    args = parser.parse_args()

    roots = sc.growth_estimate(args.q, args.n_max, digits=args.digits + 10)
    print(f"q = {args.q}")
    print(f"{'n':>4}  {'budget 3*m':>24}  {'budget^(1/n)':>16}  {'min_d budget':>24}")
    for n in range(1, args.n_max + 1):
        budget = sc.capset_bound_M(args.q, n)
        _, minimized = sc.choose_degree(args.q, n)
        root = round(roots[n - 1], args.digits)
        b_str = str(budget) if budget < 10**22 else f"{float(budget):.6e}"
        m_str = str(minimized) if minimized < 10**22 else f"{float(minimized):.6e}"
        print(f"{n:>4}  {b_str:>24}  {str(root):>16}  {m_str:>24}")


if __name__ == "__main__":
    main()
