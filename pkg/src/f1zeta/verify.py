"""Desk-scale invariant suites run by ``f1zeta verify``.

Each check returns ``(passed, detail)``.  Checks that depend on a scheme run
over the built-in corpus unless a scheme is supplied.
"""

from __future__ import annotations

import io
import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import abelian as ab
from .abelian import F1Scheme, FgAbelianGroup, FiniteAbelianGroup
from .assembly import (
    EvalParams,
    choose_truncation,
    direct_series_oracle,
    euler_product_oracle,
    soule_disc_series,
    zeta_hi_group,
    zeta_hi_scheme,
    zeta_igusa,
)
from .hurwitz import bernoulli_poly, hurwitz_zeta
from .poles import order_at, pole_divisor_report, pole_locations, residue_numeric
from .schemes import builtin_corpus, emit_scheme, parse_scheme


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str
    seconds: float


SUITES: dict[str, list[tuple[str, Callable]]] = {}


def _register(suite: str):
    def deco(fn):
        SUITES.setdefault(suite, []).append((fn.__name__, fn))
        return fn

    return deco


def groups_up_to(max_order: int) -> list[FiniteAbelianGroup]:
    """Every finite abelian group of order <= max_order, once each."""
    out = []

    def extend(chain, order):
        out.append(FiniteAbelianGroup(tuple(chain)))
        # next invariant factor is a multiple of the last one
        if chain:
            nxt = range(chain[-1], max_order // order + 1, chain[-1])
        else:
            nxt = range(2, max_order + 1)
        for n in nxt:
            extend(chain + [n], order * n)

    extend([], 1)
    return out


def hom_count_enumerated(group: FgAbelianGroup, m: int) -> int:
    """Count generator images in ``Z/m`` that respect the relations ``n_j x_j = 0``."""
    mods = group.torsion.moduli
    ok = 0
    for xs in itertools.product(range(m), repeat=len(mods)):
        if all(n * x % m == 0 for n, x in zip(mods, xs)):
            ok += 1
    return ok * m**group.rank


# -- abelian -----------------------------------------------------------------


@_register("abelian")
def mu_oracle_equivalence(ctx):
    groups = groups_up_to(512)
    bad = [g for g in groups if ab.mu_exact(g) != ab.mu_bruteforce(g)]
    known = {(2,): Fraction(3, 2), (3,): Fraction(5, 3), (4,): Fraction(2), (2, 2): Fraction(5, 2)}
    bad += [m for m, v in known.items() if ab.mu_exact(FiniteAbelianGroup(m)) != v]
    return not bad, f"{len(groups)} groups, mismatches: {bad[:5]}"


@_register("abelian")
def hom_count_periodicity(ctx):
    bad = []
    for g in groups_up_to(96):
        ell = ab.exponent_lcm(g)
        for m in range(1, 3 * ell + 1):
            if ab.hom_count_torsion(g, m) != ab.hom_count_torsion(g, (m - 1) % ell + 1):
                bad.append((g.moduli, m))
    return not bad, f"mismatches: {bad[:5]}"


@_register("abelian")
def hom_count_multiplicativity(ctx):
    bad = []
    for g in groups_up_to(48):
        for rank in (0, 1, 2):
            A = FgAbelianGroup(rank, g)
            for m, m2 in itertools.combinations(range(1, 25), 2):
                if math.gcd(m, m2) == 1 and ab.hom_count(A, m * m2) != ab.hom_count(A, m) * ab.hom_count(A, m2):
                    bad.append((rank, g.moduli, m, m2))
    return not bad, f"mismatches: {bad[:5]}"


@_register("abelian")
def mu_coprime_factorization(ctx):
    groups = groups_up_to(60)
    bad = []
    for g1, g2 in itertools.combinations(groups, 2):
        if math.gcd(g1.order, g2.order) == 1 and g1.order * g2.order <= 512:
            if ab.mu_exact(g1.direct_product(g2)) != ab.mu_exact(g1) * ab.mu_exact(g2):
                bad.append((g1.moduli, g2.moduli))
    return not bad, f"mismatches: {bad[:5]}"


@_register("abelian")
def normalization_neutrality(ctx):
    rng = random.Random(7)
    bad = []
    for _ in range(300):
        raw = [rng.randint(1, 30) for _ in range(rng.randint(0, 4))]
        g = ab.normalize_torsion(raw)
        for m in range(1, math.lcm(1, *raw) + 1):
            if math.prod(math.gcd(m, n) for n in raw) != ab.hom_count_torsion(g, m):
                bad.append((raw, m))
                break
    return not bad, f"mismatches: {bad[:5]}"


@_register("abelian")
def mu_power_vs_bruteforce(ctx):
    bad = []
    checked = 0
    for g in groups_up_to(512):
        for w in range(1, 10):
            if g.order**w > 512:
                break
            checked += 1
            if ab.mu_power(g, w) != ab.mu_bruteforce(g.power(w)):
                bad.append((g.moduli, w))
    return not bad, f"{checked} (group, w) pairs, mismatches: {bad[:5]}"


@_register("abelian")
def count_points_vs_enumeration(ctx):
    bad = []
    for name, X in ctx["schemes"].items():
        for m in range(1, 21):
            expected = sum(hom_count_enumerated(p.units, m) for p in X.points)
            if ab.count_points(X, m) != expected:
                bad.append((name, m))
    return not bad, f"mismatches: {bad[:5]}"


# -- hurwitz -----------------------------------------------------------------


def hurwitz_recurrence_samples(n: int = 100, seed: int = 2024):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        s = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        if abs(s) > 20 or abs(s - 1) <= 0.1:
            continue
        q = complex(rng.uniform(0.05, 5), rng.uniform(-2, 2))
        out.append((s, q))
    return out


@_register("hurwitz")
def hurwitz_recurrence(ctx):
    worst = 0.0
    for s, q in hurwitz_recurrence_samples():
        z0, z1, qs = hurwitz_zeta(s, q), hurwitz_zeta(s, q + 1), q ** (-s)
        scale = max(1.0, abs(z0), abs(z1), abs(qs))
        worst = max(worst, abs(z0 - z1 - qs) / scale)
    return worst <= 1e-10, f"max scaled residual {worst:.3g}"


@_register("hurwitz")
def hurwitz_multiplication(ctx):
    worst = 0.0
    for ell in range(1, 7):
        for a in (1, 2, 0.3 + 0.7j):
            for s in (-3.5, -1.25 + 2j, 0.5, 2, 3.5 - 1j, 7):
                lhs = hurwitz_zeta(s, a)
                rhs = ell ** (-s) * sum(hurwitz_zeta(s, (k - 1 + a) / ell) for k in range(1, ell + 1))
                worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst <= 1e-9, f"max error {worst:.3g}"


@_register("hurwitz")
def hurwitz_negative_integers(ctx):
    worst = 0.0
    for n in range(9):
        for q in (Fraction(1), Fraction(1, 2), Fraction(3, 2), Fraction(1, 4)):
            exact = -bernoulli_poly(n + 1, q) / (n + 1)
            worst = max(worst, abs(hurwitz_zeta(-n, float(q)) - float(exact)))
    return worst <= 1e-10, f"max error {worst:.3g}"


@_register("hurwitz")
def hurwitz_pole_residue(ctx):
    h = 1e-7
    errs = [abs(h * hurwitz_zeta(1 + h, q) - 1) for q in (1, 1 / 3, 2.5)]
    return max(errs) <= 1e-6, f"errors {[f'{e:.2g}' for e in errs]}"


# -- assembly ----------------------------------------------------------------


def _points(ctx):
    seen = {}
    for X in ctx["schemes"].values():
        for p in X.points:
            seen.setdefault((p.units.rank, p.units.torsion.moduli), p.units)
    return list(seen.values())


@_register("assembly")
def presentation_vs_direct_series(ctx):
    worst = -math.inf
    count = 0
    for A in _points(ctx):
        for r, w, a in itertools.product((1, 2), (1, 2), (1, 2, 1.3, 0.7 + 0.2j)):
            nw = A.rank * w
            s = [nw + 6 + 0.5j, nw + 7.5][:r]
            p = EvalParams.of(s, a, w)
            M = choose_truncation(p, A, 1e-8)
            ref = direct_series_oracle(p, A, M)
            excess = abs(zeta_hi_group(p, A) - ref.value) - ref.tail_bound - 1e-8
            worst = max(worst, excess)
            count += 1
    return worst <= 0, f"{count} cases, max(|diff| - bound - 1e-8) = {worst:.3g}"


@_register("assembly")
def branch_agreement(ctx):
    worst = 0.0
    for A in _points(ctx):
        for r, w in itertools.product((1, 2), (0, 1, 2, 3)):
            nw = A.rank * w
            p = EvalParams.of([nw + 2.5 + 0.3j, nw + 3.25][:r], None, w)
            worst = max(worst, abs(zeta_hi_group(p, A, 1) - zeta_hi_group(p, A, 2)))
    return worst <= 1e-10, f"max difference {worst:.3g}"


@_register("assembly")
def specializations(ctx):
    worst = 0.0
    for X in ctx["schemes"].values():
        for s, w in (((3.5,), 1), ((4, 5.5 + 1j), 2), ((9.0,), 0.5 + 0.25j)):
            worst = max(worst, abs(zeta_igusa(s, w, X) - zeta_hi_scheme(EvalParams.of(s, None, w), X)))
        for s in (2.5, 4 + 1j, -0.5 + 0.5j):
            d = soule_disc_series(s, 1, X)
            worst = max(worst, abs(d - zeta_hi_scheme(EvalParams.of((s + 1,), (2,), 1), X)))
    return worst <= 1e-12, f"max difference {worst:.3g}"


@_register("assembly")
def euler_product_vs_direct(ctx):
    worst = 0.0
    for moduli in ((), (2,), (6,), (2, 4)):
        A = FgAbelianGroup.of(0, moduli)
        for w in (1, 2):
            for s in ((2.5,), (3 + 1j,), (4, 4.5)):
                p = EvalParams.of(s, None, w)
                M = choose_truncation(p, A, 1e-7, m_cap=2**21)
                ref = direct_series_oracle(p, A, M)
                worst = max(worst, abs(euler_product_oracle(s, w, A.torsion, ctx["prime_bound"]) - ref.value) - ref.tail_bound)
    return worst <= 1e-6, f"max excess over tail bound {worst:.3g}"


@_register("assembly")
def trivial_group_factorization(ctx):
    worst = 0.0
    T = FgAbelianGroup()
    for s, a in (((2.5,), (0.4,)), ((3 + 1j, -0.5), (2, 0.3 + 0.7j)), ((1.5, 2, 0.5j), (1, 1.3, 2.5))):
        for w in (0, 1, 3):
            p = EvalParams.of(s, a, w)
            ref = math.prod((hurwitz_zeta(si, ai) for si, ai in zip(s, a)), start=1)
            worst = max(worst, abs(zeta_hi_group(p, T) - ref))
    return worst <= 1e-10, f"max difference {worst:.3g}"


# -- poles -------------------------------------------------------------------


@_register("poles")
def residues_numeric_vs_exact(ctx):
    worst = 0.0
    count = 0
    for X in ctx["schemes"].values():
        for w in (1, 2):
            if w == 2 and max((p.units.rank for p in X.points), default=0) > 2:
                continue
            for j in pole_locations(X, w):
                worst = max(worst, abs(residue_numeric(j, w, X, 1e-5) - float(order_at(j, w, X))))
                count += 1
    return worst <= 1e-3, f"{count} locations, max error {worst:.3g}"


@_register("poles")
def exponent_sum_rule(ctx):
    bad = []
    for n in (1, 2, 3):
        for g in groups_up_to(24):
            X = F1Scheme((ab.Point("p", FgAbelianGroup(n, g)),))
            if sum((order_at(j, 1, X) for j in pole_locations(X, 1)), Fraction(0)) != 0:
                bad.append((n, g.moduli))
    return not bad, f"violations: {bad[:5]}"


@_register("poles")
def divisor_additivity(ctx):
    bad = []
    schemes = list(ctx["schemes"].values())
    for X, Y in itertools.combinations(schemes, 2):
        U = F1Scheme(
            tuple(ab.Point("x:" + p.name, p.units) for p in X.points)
            + tuple(ab.Point("y:" + p.name, p.units) for p in Y.points)
        )
        for w in (1, 2):
            for d in pole_divisor_report(U, w):
                if d.exponent != sum(c for _, c in d.contributions):
                    bad.append((X.name, Y.name, w, d.location, "contributions"))
                if d.exponent != order_at(d.location, w, X) + order_at(d.location, w, Y):
                    bad.append((X.name, Y.name, w, d.location))
    return not bad, f"violations: {bad[:5]}"


@_register("poles")
def trivial_torsion_integer_exponents(ctx):
    bad = []
    for n in range(0, 6):
        X = F1Scheme((ab.Point("p", FgAbelianGroup(n)),))
        for d in pole_divisor_report(X, 1):
            j = d.location
            if d.exponent != -math.comb(n, j) * (-1) ** (n - j):
                bad.append((n, j))
    return not bad, f"violations: {bad}"


# -- cli ---------------------------------------------------------------------


@_register("cli")
def scheme_round_trip(ctx):
    bad = []
    for name, X in ctx["schemes"].items():
        text = emit_scheme(X)
        Y = parse_scheme(text)
        if Y != X or emit_scheme(Y) != text:
            bad.append(name)
    return not bad, f"failures: {bad}"


@_register("cli")
def grid_determinism(ctx):
    from .grid import AxisRange, GridSpec, write_grid

    X = ctx["schemes"].get("Gm_plus_Z2") or next(iter(ctx["schemes"].values()))
    spec = GridSpec(AxisRange(-0.5, 2.5, 0.5), AxisRange(0, 1, 0.5), kind="soule")
    outs = []
    for workers in (1, 1, 2):
        buf = io.StringIO()
        write_grid(spec, X, buf, workers)
        outs.append(buf.getvalue())
    return len(set(outs)) == 1, f"{len(spec)} samples, distinct outputs: {len(set(outs))}"


def suite_names() -> list[str]:
    return list(SUITES) + ["all"]


def run_suite(
    name: str = "all", schemes: dict[str, F1Scheme] | None = None, prime_bound: int = 10**5
) -> list[Check]:
    if name != "all" and name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {suite_names()}")
    ctx = {"schemes": schemes if schemes is not None else builtin_corpus(), "prime_bound": prime_bound}
    selected = SUITES.items() if name == "all" else [(name, SUITES[name])]
    results = []
    for suite, checks in selected:
        for cname, fn in checks:
            t0 = time.perf_counter()
            try:
                passed, detail = fn(ctx)
            except Exception as exc:  # a crashing check is a failed check
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(Check(suite, cname, bool(passed), detail, time.perf_counter() - t0))
    return results
