#!/usr/bin/env python3
"""Largest unit set Y with Y, -Y disjoint and all differences of their
union invertible, across a list of odd rings."""

import argparse

from pdfam.cli import parse_ring_spec
from pdfam.search import SearchBounds, max_unit_y_search

DEFAULT_RINGS = ["Z9", "Z15", "Z25", "Z27", "Z33", "F7", "F9", "F11",
                 "F13", "GF27", "F3xF5", "F5xF7"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("rings", nargs="*", default=DEFAULT_RINGS,
                    help="ring specs like Z25, F49, GF27, F7xF11")
    ap.add_argument("--time-budget", type=float, default=None)
    args = ap.parse_args()

    bounds = SearchBounds(time_budget_s=args.time_budget)
    for spec in args.rings:
        ring = parse_ring_spec(spec)
        res = max_unit_y_search(ring, bounds)
        tag = "exhaustive" if res.exhaustive else "lower bound"
        print(f"{spec:8s} |R|={ring.order:4d}  max |Y| = {res.max_size} "
              f"({tag}, {res.nodes} nodes, {res.elapsed:.2f}s)  "
              f"Y = {res.witness}")


if __name__ == "__main__":
    main()
