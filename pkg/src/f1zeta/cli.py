"""Command-line front end.

Exit codes: 0 success, 1 validation/parse error, 2 numerical/domain error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import abelian as ab
from .assembly import EvalParams, soule_disc_series, zeta_hi_scheme
from .errors import (
    ConvergenceError,
    DomainError,
    F1ZetaError,
    InvalidArgumentError,
    ParseError,
    ResourceError,
    ValidationError,
)
from .grid import KINDS, AxisRange, GridSpec, default_workers, write_grid
from .poles import pole_divisor_report
from .schemes import load_scheme
from .verify import run_suite, suite_names

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def fmt_rational(x: Fraction) -> str:
    """``p/q`` with the sign on the numerator, always showing the denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_complex(text: str) -> complex:
    """``"2.5"``, ``"1.0-0.3i"``, ``"2i"``."""
    t = text.strip().replace(" ", "")
    if t.endswith("i"):
        t = t[:-1] + "j"
    try:
        return complex(t)
    except ValueError:
        raise InvalidArgumentError(f"cannot parse complex scalar {text!r}") from None


def parse_complex_list(text: str) -> list[complex]:
    return [parse_complex(p) for p in text.split(",") if p.strip()]


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _scheme(args):
    if args.scheme is None:
        raise ValidationError("--scheme PATH is required")
    return load_scheme(args.scheme)


def cmd_mu(args, out):
    moduli = [int(m) for tok in args.moduli for m in tok.split(",") if m]
    g = ab.normalize_torsion(moduli)
    w = 1 if args.w is None else int(args.w)
    print(fmt_rational(ab.mu_power(g, w)), file=out)
    return EXIT_OK


def cmd_points(args, out):
    X = _scheme(args)
    print("m,count", file=out)
    for m in range(1, args.m_max + 1):
        print(f"{m},{ab.count_points(X, m)}", file=out)
    return EXIT_OK


def cmd_eval(args, out):
    X = _scheme(args)
    s = parse_complex_list(args.s)
    w = parse_complex(args.w or "1")
    if args.kind == "soule":
        if len(s) != 1:
            raise InvalidArgumentError("--kind soule takes a single s")
        value = soule_disc_series(s[0], w, X, args.tol)
        branch = EvalParams.of((s[0] + 1,), (2,), w).branch
    else:
        a = None if args.a is None or args.kind == "igusa" else parse_complex_list(args.a)
        params = EvalParams.of(s, a, w, args.tol)
        value = zeta_hi_scheme(params, X)
        branch = params.branch
    print(f"value = {_fmt_complex(value)}", file=out)
    print(f"branch = {branch}", file=out)
    print(f"tolerance = {args.tol:g} per Hurwitz evaluation, relative to max(1, |zeta|)", file=out)
    return EXIT_OK


def cmd_poles(args, out):
    X = _scheme(args)
    w = parse_complex(args.w or "1")
    print("j, exponent, status, contributions", file=out)
    for d in pole_divisor_report(X, w):
        contrib = "; ".join(f"{name}={fmt_rational(c)}" for name, c in d.contributions)
        print(f"{d.location}, {fmt_rational(d.exponent)}, {d.kind}, {contrib}", file=out)
    return EXIT_OK


def cmd_grid(args, out):
    X = _scheme(args)
    a = parse_complex_list(args.a)[0] if args.a else 1
    spec = GridSpec(
        AxisRange.parse(args.re),
        AxisRange.parse(args.im),
        a=a,
        w=parse_complex(args.w or "1"),
        kind=args.kind,
        tolerance=args.tol,
    )
    workers = args.workers if args.workers is not None else default_workers()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            n = write_grid(spec, X, fh, workers)
        print(f"wrote {n} samples to {args.out}", file=sys.stderr)
    else:
        write_grid(spec, X, out, workers)
    return EXIT_OK


def cmd_verify(args, out):
    schemes = None
    if args.scheme is not None:
        X = load_scheme(args.scheme)
        schemes = {X.name: X}
    results = run_suite(args.suite, schemes, prime_bound=args.prime_bound)
    for c in results:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status} {c.suite}.{c.name} ({c.seconds:.2f}s): {c.detail}", file=out)
    failed = sum(not c.passed for c in results)
    print(f"{len(results) - failed}/{len(results)} checks passed", file=out)
    return EXIT_OK if not failed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="f1zeta", description="Deformed Hurwitz-Igusa zeta functions of F1-schemes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--scheme", metavar="PATH", help="scheme document (JSON)")
        sp.add_argument("--tol", type=float, default=1e-12, help="Hurwitz tolerance")

    sp = sub.add_parser("mu", help="mu-invariant of a finite abelian group")
    sp.add_argument("moduli", nargs="*", help="cyclic orders, e.g. 2 4 or 2,4")
    sp.add_argument("--w", help="power w (mu of the w-fold power)")
    sp.set_defaults(func=cmd_mu)

    sp = sub.add_parser("points", help="table of #X(F_{1^m})")
    common(sp)
    sp.add_argument("--m-max", type=int, default=20)
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("eval", help="evaluate zeta^HI, zeta^I or the Soule series")
    common(sp)
    sp.add_argument("--s", required=True, help="comma-separated complex s vector")
    sp.add_argument("--a", help="comma-separated a vector (default all 1)")
    sp.add_argument("--w", help="deformation exponent (default 1)")
    sp.add_argument("--kind", choices=("hi", "igusa", "soule"), default="hi")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("poles", help="pole divisor of the deformed modified Soule zeta")
    common(sp)
    sp.add_argument("--w", help="positive integer w (default 1)")
    sp.set_defaults(func=cmd_poles)

    sp = sub.add_parser("grid", help="CSV grid over Re(s) x Im(s)")
    common(sp)
    sp.add_argument("--re", required=True, help="START:STOP:STEP for Re(s)")
    sp.add_argument("--im", default="0", help="START:STOP:STEP for Im(s)")
    sp.add_argument("--a", help="shift a (kind hi)")
    sp.add_argument("--w", help="deformation exponent (default 1)")
    sp.add_argument("--kind", choices=KINDS, default="hi")
    sp.add_argument("--workers", type=int, help="worker processes (env F1ZETA_WORKERS)")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(func=cmd_grid)

    sp = sub.add_parser("verify", help="run invariant suites")
    sp.add_argument("--scheme", metavar="PATH")
    sp.add_argument("--suite", default="all", choices=suite_names())
    sp.add_argument("--prime-bound", type=int, default=10**5, help="prime cutoff for the Euler product check")
    sp.set_defaults(func=cmd_verify)
    return p


# flags whose values may start with "-" (negative numbers, ranges)
_NUMERIC_FLAGS = {"--s", "--a", "--w", "--re", "--im"}


def _glue_numeric_values(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _NUMERIC_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_numeric_values(argv))
    try:
        return args.func(args, out)
    except (ParseError, ValidationError, InvalidArgumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DomainError, ConvergenceError, ResourceError, F1ZetaError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
