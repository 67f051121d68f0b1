#!/usr/bin/env python3
"""Tabulate the classical threshold (k-1)(k^k+k^2)+k against k(4e ln k)^k
and report the crossover k where the newer bound becomes smaller.

Usage: python scripts/fbound_crossover.py [--k-max 50]
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mms.bounds import f_bound_values


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--k-max", type=int, default=50)
    args = parser.parse_args()
    crossover = None
    print(f"{'k':>4} {'old bound':>24} {'new bound (approx)':>24} smaller")
    for k in range(3, args.k_max + 1):
        fb = f_bound_values(k)
        which = "new" if fb.new_smaller_than_old else "old"
        if fb.new_smaller_than_old and crossover is None:
            crossover = k
        print(f"{k:>4} {fb.old_bound:>24.6g} {fb.new_bound_float:>24.6g} {which}")
    if crossover is None:
        print(f"no crossover up to k = {args.k_max}")
    else:
        print(f"crossover: the k(4e ln k)^k bound wins from k = {crossover}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
