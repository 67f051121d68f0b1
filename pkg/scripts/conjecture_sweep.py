#!/usr/bin/env python3
"""Sweep n for a fixed k and print per-n verdicts against C(n-1, k-1),
combining the exact solver, the partition lower bound and the known
counterexample construction.

Usage: python scripts/conjecture_sweep.py --k 2 --n-lo 4 --n-hi 16
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mms.bounds import f_threshold_readings
from mms.solver import verify_conjecture_range


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n-lo", type=int, required=True)
    parser.add_argument("--n-hi", type=int, required=True)
    args = parser.parse_args()
    rows = verify_conjecture_range(args.n_lo, args.n_hi, args.k)
    print(f"{'n':>4} {'verdict':>15} {'lower':>10} {'upper':>10} {'A':>8}")
    for r in rows:
        a = "" if r.a_value is None else r.a_value
        print(f"{r.n:>4} {r.verdict:>15} {r.lower:>10} {r.upper:>10} {a:>8}")
    decided = {r.n: r.equals_target for r in rows if r.equals_target is not None}
    if decided:
        readings = f_threshold_readings(decided)
        print(f"threshold readings over this window: "
              f"equality for n >= {readings.f_geq} (resp. n > {readings.f_gt})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
