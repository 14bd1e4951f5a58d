"""How often is a random monomial ideal weakly polymatroidal for some variable order?

    python scripts/permutation_survey.py --n 4 --t 4 --count 500
"""

import argparse
import math

from stanley_lab.classes import is_weakly_polymatroidal, weakly_polymatroidal_permutations
from stanley_lab.corpus import random_ideals


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--t", type=int, default=4)
    ap.add_argument("--max-exp", type=int, default=2)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    given = some = 0
    fractions = []
    ideals = [I for I in random_ideals(args.n, args.t, args.max_exp, args.count, args.seed) if not I.is_unit()]
    for I in ideals:
        perms = weakly_polymatroidal_permutations(I)
        given += bool(is_weakly_polymatroidal(I))
        some += bool(perms)
        fractions.append(len(perms) / math.factorial(I.n))
    print(f"{len(ideals)} ideals: weakly polymatroidal in the given order {given}, in some order {some}")
    print(f"mean fraction of good orders: {sum(fractions) / len(fractions):.3f}")


if __name__ == "__main__":
    main()
