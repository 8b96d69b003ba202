#!/usr/bin/env python3
"""Exhaustive (4u^2, 2u^2-u, u^2-u) difference-set search, order-16 sweep
by default."""

import argparse

from pdfam.cli import parse_group_spec
from pdfam.search import (SearchBounds, abelian_groups_order16,
                          hds_parameters, search_hds)


def sweep_group(name, group, u, bounds):
    res = search_hds(group, u, bounds)
    tag = "complete" if res.complete else "truncated"
    print(f"{name:16s} {len(res.results):4d} normalized sets "
          f"({tag}, {res.nodes} nodes, {res.elapsed:.2f}s)")
    for d in res.results[:3]:
        print(f"    {d}")
    if len(res.results) > 3:
        print(f"    ... {len(res.results) - 3} more")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--u", type=int, default=2)
    ap.add_argument("--group", default=None,
                    help="single group spec, e.g. Z4xZ4 (default: all "
                         "abelian groups of order 16)")
    ap.add_argument("--max-results", type=int, default=None)
    ap.add_argument("--time-budget", type=float, default=None)
    args = ap.parse_args()

    v, k, lam = hds_parameters(args.u)
    print(f"target parameters: ({v}, {k}, {lam})")
    bounds = SearchBounds(max_results=args.max_results,
                          time_budget_s=args.time_budget)
    if args.group:
        sweep_group(args.group, parse_group_spec(args.group), args.u, bounds)
    else:
        for name, g in abelian_groups_order16():
            sweep_group(name, g, args.u, bounds)


if __name__ == "__main__":
    main()
