#!/usr/bin/env python3
"""Pairwise Alexander-obstruction table at desk scale.

Most candidate epimorphisms between 2-bridge knot groups die on the
divisibility test; this prints the survivors, which are the only pairs
worth further attention.
"""

import argparse
import sys

from twobridge import alexander_polynomial, scan
from twobridge.obstructions import not_ruled_out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=25)
    args = parser.parse_args()

    reports = scan(args.pmax)
    alive = not_ruled_out(reports)
    print(f"{len(reports)} ordered pairs with p <= {args.pmax}; {len(alive)} not ruled out\n")
    for r in alive:
        ds = alexander_polynomial(r.source)
        dt = alexander_polynomial(r.target)
        print(f"{r.source} -> {r.target}")
        print(f"    Delta_source = {ds}   (deg {ds.degree})")
        print(f"    Delta_target = {dt}   (deg {dt.degree})")
        print(f"    riley divisibility (heuristic): {r.riley_divides}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
