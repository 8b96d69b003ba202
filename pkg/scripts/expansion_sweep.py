#!/usr/bin/env python3
"""Expand a searched Hadamard PDF by every admissible odd modulus in a
range, certifying both completions of each result."""

import argparse
from math import gcd
from time import perf_counter

from pdfam.constructions import (COMPLETIONS, DivisorTooSmallError,
                                 expand_from_hds)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--u", type=int, default=1)
    ap.add_argument("--max-m", type=int, default=100)
    ap.add_argument("--coprime-to", type=int, default=15)
    args = ap.parse_args()

    total = 0
    t0 = perf_counter()
    for m in range(3, args.max_m + 1, 2):
        if gcd(m, args.coprime_to) != 1:
            continue
        try:
            pair = expand_from_hds(args.u, m)
        except DivisorTooSmallError as exc:
            print(f"m={m:3d}  skipped: {exc}")
            continue
        total += 1
        cells = []
        for completion, res in zip(COMPLETIONS, pair):
            rep = res.report
            cells.append(f"{completion}: "
                         + ("certified" if res.certified
                            else f"INVALID at {rep.witness}"))
        print(f"m={m:3d}  v={pair[0].report.v:4d}  " + "  |  ".join(cells))
    print(f"{total} moduli expanded in {perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
