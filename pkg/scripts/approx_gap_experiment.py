#!/usr/bin/env python3
"""Measure how tight the k x n additive approximation is on random boards.

For each sampled board the approximation brackets the true optimum in
[lower, lower + c(k-1)]; this reports where in that interval the optimum
actually lands, and how long the replayed witness is.
"""

import argparse
import random
import sys
from collections import Counter

from floodit.core import FloodState, random_board
from floodit.oracle import solve_free_exact
from floodit.solvers import approx_board


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--height", type=int, default=3)
    parser.add_argument("--width", type=int, default=6)
    parser.add_argument("--colours", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    gaps = Counter()
    witness_slack = Counter()
    for _ in range(args.samples):
        board = random_board(args.height, args.width, args.colours, seed=rng.randrange(2**31))
        result = approx_board(board)
        exact = solve_free_exact(FloodState.from_board(board).graph).optimum
        assert result.lower <= exact <= result.upper
        gaps[exact - result.lower] += 1
        witness_slack[len(result.witness) - exact] += 1

    print(f"{args.samples} boards {args.height}x{args.width}, {args.colours} colours")
    print("optimum - lower bound:")
    for gap in sorted(gaps):
        print(f"  +{gap}: {gaps[gap]:4d}  ({100 * gaps[gap] / args.samples:.0f}%)")
    print("witness length - optimum:")
    for slack in sorted(witness_slack):
        print(f"  +{slack}: {witness_slack[slack]:4d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
