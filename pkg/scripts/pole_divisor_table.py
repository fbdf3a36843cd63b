"""Print the pole divisor of every corpus scheme (or a given scheme file)."""

import argparse

from f1zeta.cli import fmt_rational
from f1zeta.poles import pole_divisor_report, rationality_unobstructed
from f1zeta.schemes import builtin_corpus, load_scheme


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scheme", help="scheme document; default is the built-in corpus")
    ap.add_argument("--w", type=int, nargs="+", default=[1, 2])
    args = ap.parse_args()
    schemes = {"file": load_scheme(args.scheme)} if args.scheme else builtin_corpus()
    for name, X in schemes.items():
        for w in args.w:
            report = pole_divisor_report(X, w)
            divisor = "  ".join(f"(s-{d.location})^{fmt_rational(d.exponent)}" for d in report if not d.cancelled)
            flag = "integral" if rationality_unobstructed(X, w) else "fractional"
            print(f"{name:12s} w={w}  {flag:10s}  {divisor or '1'}")


if __name__ == "__main__":
    main()
