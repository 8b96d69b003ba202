#!/usr/bin/env python3
"""Certify every built-in family under both difference conventions."""

import argparse

from pdfam.catalog import catalog_family, catalog_names
from pdfam.groups import DiffConvention
from pdfam.multisets import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--name", default=None,
                    help="certify just one entry (default: all)")
    args = ap.parse_args()

    names = [args.name] if args.name else catalog_names()
    for name in names:
        fam = catalog_family(name)
        for conv in DiffConvention:
            rep = verify(fam, conv)
            hadamard = rep.kind == "PDF" and rep.v == 2 * rep.lambda_or_mu
            print(f"{name:12s} {conv.value:5s} -> {rep.kind:8s} "
                  f"(v={rep.v}, K={list(rep.K) if rep.K else None}, "
                  f"idx={rep.lambda_or_mu})"
                  + ("  Hadamard" if hadamard else "")
                  + (f"  witness={rep.witness}" if rep.witness else ""))


if __name__ == "__main__":
    main()
