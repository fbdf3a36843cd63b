"""How often is mu(A) an integer?  Survey every finite abelian group up to a given order."""

import argparse
from collections import Counter

from f1zeta.abelian import mu_exact
from f1zeta.verify import groups_up_to


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=256)
    ap.add_argument("--show", type=int, default=15, help="how many non-integral examples to list")
    args = ap.parse_args()
    groups = groups_up_to(args.max_order)
    by_den = Counter()
    examples = []
    for g in groups:
        mu = mu_exact(g)
        by_den[mu.denominator] += 1
        if mu.denominator != 1 and len(examples) < args.show:
            examples.append((g, mu))
    integral = by_den[1]
    print(f"{len(groups)} groups of order <= {args.max_order}; {integral} with integral mu")
    common = by_den.most_common(8)
    print("most common denominators:", ", ".join(f"{d} ({c} groups)" for d, c in common))
    for g, mu in examples:
        print(f"  {str(g):24s} mu = {mu}")


if __name__ == "__main__":
    main()
