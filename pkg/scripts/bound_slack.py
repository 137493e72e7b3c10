#!/usr/bin/env python3
"""Measure the slack of the certified witness bound on random instances.

For seeded random pairs (S, T), compare four numbers per instance:

    oracle minimum <= greedy cover <= pipeline witness total <= bound

(the oracle runs only when |S| + |T| fits the exhaustive-search cap).

Example:
    python scripts/bound_slack.py --q 3 --n 2 --count 200 --seed 1
"""

from __future__ import annotations

import argparse
import random
from collections import Counter

import sumsetcover as sc


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=3)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--p", type=float, default=0.5)
    parser.add_argument("--search-cap", type=int, default=sc.DEFAULT_SEARCH_CAP)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    points = sc.all_points(args.q, args.n).ordered()
    gaps = Counter()
    rows = []
    for trial in range(args.count):
        S = sc.PointSet.from_vectors(args.q, args.n, [p for p in points if rng.random() < args.p])
        T = sc.PointSet.from_vectors(args.q, args.n, [p for p in points if rng.random() < args.p])
        dec = sc.decompose(S, T)
        assert sc.verify_decomposition(S, T, dec.s_witness, dec.t_witness)
        gs, gt = sc.greedy_decomposition(S, T)
        greedy = len(gs) + len(gt)
        oracle = None
        if len(S) + len(T) <= args.search_cap:
            oracle = sc.oracle_min_decomposition(S, T, search_cap=args.search_cap).best_total
            assert oracle <= greedy <= dec.bound
            assert oracle <= dec.witness_total
            gaps[dec.witness_total - oracle] += 1
        rows.append((trial, len(S), len(T), oracle, greedy, dec.witness_total, dec.bound))

    print(f"{'trial':>6} {'|S|':>4} {'|T|':>4} {'oracle':>7} {'greedy':>7} {'pipeline':>9} {'bound':>6}")
    for row in rows:
        oracle_str = "-" if row[3] is None else str(row[3])
        print(f"{row[0]:>6} {row[1]:>4} {row[2]:>4} {oracle_str:>7} {row[4]:>7} {row[5]:>9} {row[6]:>6}")
    if gaps:
        print("\npipeline total minus oracle minimum (where oracle ran):")
        for gap in sorted(gaps):
            print(f"  +{gap}: {gaps[gap]} instances")


if __name__ == "__main__":
    main()
