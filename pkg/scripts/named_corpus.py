"""Run every characterization on the named completely regular codes."""
import argparse
import time

from localspec.codes import analyze
from localspec.corpus import named_cprc_corpus


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    t0 = time.perf_counter()
    for label, g, members in named_cprc_corpus():
        r = analyze(g, members)
        margins = "  ".join(f"{n}={v.value:.1e}" for n, v in r.verdicts.items() if v.ran)
        print(f"{label:32s} {r.status:12s} {margins}")
    print(f"total {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
