#!/usr/bin/env python3
"""Runtime on the planted-partition scaling suite; fits sqrt(seconds) against n."""

import argparse

from maco.cli import bench_rows, linear_fit_r2
from maco.colony import MacoConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--C", type=int, nargs="+", default=[4, 8, 12, 16, 20])
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    rows = bench_rows(args.C, args.reps, MacoConfig(), threads=args.threads)
    print("n,seconds,sqrt_seconds")
    for n, sec, root in rows:
        print(f"{n},{sec:.4f},{root:.4f}")
    a, b, r2 = linear_fit_r2([r[0] for r in rows], [r[2] for r in rows])
    print(f"# sqrt(seconds) = {a:.4g} + {b:.4g} n   R2 = {r2:.4f}")


if __name__ == "__main__":
    main()
