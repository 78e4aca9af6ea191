#!/usr/bin/env python3
"""Distribution of modularity on Zachary's karate club over many seeds."""

import argparse
import collections
import time

import numpy as np

from maco.colony import MacoConfig, detect
from maco.graph import karate
from maco.metrics import modularity


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=50)
    ap.add_argument("--first-seed", type=int, default=0)
    args = ap.parse_args()

    g = karate()
    qs, secs = [], []
    outcomes = collections.Counter()
    for seed in range(args.first_seed, args.first_seed + args.runs):
        t0 = time.perf_counter()
        part = detect(g, MacoConfig(seed=seed))
        secs.append(time.perf_counter() - t0)
        q = modularity(g, part)
        qs.append(q)
        outcomes[(round(q, 4), part.k)] += 1
        print(f"seed={seed} Q={q:.4f} k={part.k} {secs[-1]:.2f}s", flush=True)

    print(f"\nmedian Q {np.median(qs):.4f}  mean {np.mean(qs):.4f}  "
          f"min {min(qs):.4f}  max {max(qs):.4f}  slowest {max(secs):.2f}s")
    print("most common (Q, k):")
    for (q, k), count in outcomes.most_common(5):
        print(f"  Q={q:.4f} k={k}: {count}")


if __name__ == "__main__":
    main()
