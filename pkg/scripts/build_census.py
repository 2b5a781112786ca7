#!/usr/bin/env python3
"""Regenerate the minimal-block census with exact values and save it.

Orders up to 9 take seconds; order 10 takes a few minutes.
"""

from __future__ import annotations

import argparse
import time

from mvdcolor.catalog import build_catalog, census_text, save_catalog
from mvdcolor.solve import mvd_exact


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-order", type=int, default=9)
    parser.add_argument("--out", default="census_out")
    args = parser.parse_args()

    t0 = time.time()
    cat = build_catalog(args.max_order, mvd_exact)
    save_catalog(cat, args.out)
    with open(f"{args.out}/census.txt", "w", encoding="utf-8") as fh:
        fh.write(census_text(cat))
    print(census_text(cat), end="")
    print(f"wrote {len(cat)} entries to {args.out} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
