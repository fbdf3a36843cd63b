"""Singular data of the deformed modified Soule zeta function.

For ``w`` a positive integer, ``zeta^disc_X(s; w)`` is an entire nonvanishing
factor times ``prod_j (s - j)^{e_j}`` with exact rational exponents

    e_j = sum_p -C(n(p) w, j) (-1)^(n(p) w - j) mu(Gamma_p^w),   0 <= j <= n(p) w,

which is also the residue at ``s = j`` of the log-derivative ``-D(s; w)``.
Only this singular data is computed; the entire factor is not determined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .abelian import F1Scheme, Point, mu_exact, mu_power
from .assembly import soule_disc_series
from .errors import DomainError, InvalidArgumentError


@dataclass(frozen=True)
class PoleDatum:
    location: int
    exponent: Fraction
    contributions: tuple[tuple[str, Fraction], ...]

    @property
    def cancelled(self) -> bool:
        return self.exponent == 0

    @property
    def kind(self) -> str:
        if self.exponent == 0:
            return "cancelled"
        return "zero" if self.exponent > 0 else "pole"


def _positive_int_w(w) -> int:
    if isinstance(w, complex):
        if w.imag != 0:
            raise DomainError(f"w must be a positive integer, got {w}")
        w = w.real
    if isinstance(w, bool) or int(w) != w or w < 1:
        raise DomainError(f"w must be a positive integer, got {w!r}")
    return int(w)


def point_contribution(point: Point, j: int, w: int) -> Fraction:
    top = point.units.rank * w
    if j < 0 or j > top:
        return Fraction(0)
    sign = -1 if (top - j) % 2 else 1
    return -math.comb(top, j) * sign * mu_power(point.units.torsion, w)


def pole_locations(scheme: F1Scheme, w, live_only: bool = False) -> list[int]:
    """Candidate locations ``0..max_p n(p) w``; ``live_only`` drops cancelled ones."""
    w = _positive_int_w(w)
    if not scheme.points:
        return []
    top = max(p.units.rank for p in scheme.points) * w
    locs = list(range(top + 1))
    if live_only:
        locs = [j for j in locs if order_at(j, w, scheme) != 0]
    return locs


def order_at(j: int, w, scheme: F1Scheme) -> Fraction:
    """Exact order of ``zeta^disc_X(.; w)`` at ``s = j`` (negative for a pole)."""
    w = _positive_int_w(w)
    if int(j) != j or j < 0:
        raise InvalidArgumentError(f"location must be a nonnegative integer, got {j!r}")
    return sum((point_contribution(p, int(j), w) for p in scheme.points), Fraction(0))


def residue_numeric(j: int, w, scheme: F1Scheme, eps: float = 1e-5, tolerance: float = 1e-12) -> complex:
    """Richardson estimate of ``lim_{s->j} (s-j) * (-D(s; w))`` from ``s = j+eps, j+eps/2``."""
    w = _positive_int_w(w)
    if not 1e-7 <= eps <= 1e-2:
        raise InvalidArgumentError(f"eps must lie in [1e-7, 1e-2], got {eps}")

    def scaled(h):
        return -h * soule_disc_series(j + h, w, scheme, tolerance)

    return 2 * scaled(eps / 2) - scaled(eps)


def pole_divisor_report(scheme: F1Scheme, w) -> list[PoleDatum]:
    w = _positive_int_w(w)
    report = []
    for j in pole_locations(scheme, w):
        contrib = tuple((p.name, point_contribution(p, j, w)) for p in scheme.points)
        report.append(PoleDatum(j, sum((c for _, c in contrib), Fraction(0)), contrib))
    return report


@dataclass(frozen=True)
class RationalityEntry:
    point: str
    mu: Fraction
    integral: bool


def rationality_report(scheme: F1Scheme) -> list[RationalityEntry]:
    """Per-point ``mu(Gamma_p)``; non-integral values obstruct rationality at ``w = 1``."""
    out = []
    for p in scheme.points:
        mu = mu_exact(p.units.torsion)
        out.append(RationalityEntry(p.name, mu, mu.denominator == 1))
    return out


def rationality_unobstructed(scheme: F1Scheme, w: int = 1) -> bool:
    return all(d.exponent.denominator == 1 for d in pole_divisor_report(scheme, w))
