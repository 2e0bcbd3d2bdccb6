"""Tally verdicts over random connected graphs with random vertex sets."""
import argparse
from collections import Counter

from localspec.codes import analyze
from localspec.corpus import random_instances


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=16)
    args = ap.parse_args()

    status = Counter()
    disagree = 0
    for g, members in random_instances(args.count, args.seed, args.max_n):
        r = analyze(g, members)
        status[r.status] += 1
        oracle = r.verdicts["combinatorial"].holds
        disagree += any(v.ran and v.holds != oracle for v in r.verdicts.values())
    for k, v in sorted(status.items()):
        print(f"{k:12s} {v}")
    print(f"instances with a verdict differing from the oracle: {disagree}")


if __name__ == "__main__":
    main()
