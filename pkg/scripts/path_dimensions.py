#!/usr/bin/env python3
"""Exact weak majority dimensions of directed paths.

The constructions pin the dimension at 0, 1, 3 for 1-3 vertices and bound
it by 4 from there on, but between the 3-vertex and the 10-vertex path the
exact value is open; this script lets the solver chase it with a node
budget, reporting honest bounds whenever a level is not exhausted.

Usage: python scripts/path_dimensions.py [--max-n 8] [--budget 10000000]
"""

import argparse
import time

from majdim import dimension, path


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--budget", type=int, default=10_000_000)
    args = ap.parse_args()

    print(f"{'n':>3} {'dimension':>10} {'nodes/level':>30} {'secs':>8}")
    for n in range(1, args.max_n + 1):
        t0 = time.time()
        result = dimension(path(n), budget=args.budget)
        nodes = ",".join(str(o.nodes_explored) for _, o in result.per_d)
        dim = result.dimension if result.known else f"in [{result.lower},{result.upper}]"
        print(f"{n:>3} {str(dim):>10} {nodes:>30} {time.time() - t0:>8.2f}")


if __name__ == "__main__":
    main()
