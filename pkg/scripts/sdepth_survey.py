"""Compare depth, constructed sdepth and exact sdepth across a corpus.

    python scripts/sdepth_survey.py corpora/acceptance.spec --max-n 4
"""

import argparse
import collections
import time

from stanley_lab.corpus import generate, read_spec
from stanley_lab.decomposer import decompose
from stanley_lab.homology import depth
from stanley_lab.stanley import exact_sdepth_quotient, sdepth_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("spec")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--timeout", type=float, default=10.0)
    args = ap.parse_args()

    gaps = collections.Counter()
    slow = []
    for iid, I in generate(read_spec(args.spec)):
        if I.n > args.max_n:
            continue
        start = time.perf_counter()
        d = depth(I).depth
        D, _ = decompose(I)
        res = exact_sdepth_quotient(I, timeout=args.timeout)
        gaps[(sdepth_of(D) - d, res.value - sdepth_of(D), res.exact)] += 1
        elapsed = time.perf_counter() - start
        if elapsed > 1:
            slow.append((elapsed, iid, str(I)))

    print("constructed-depth  exact-constructed  exact?  count")
    for (g1, g2, ex), c in sorted(gaps.items()):
        print(f"{g1:>17}  {g2:>17}  {str(ex):>6}  {c}")
    for elapsed, iid, s in sorted(slow, reverse=True)[:10]:
        print(f"slow: {iid} {elapsed:.1f}s {s}")


if __name__ == "__main__":
    main()
