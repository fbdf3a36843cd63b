"""Finitely generated abelian groups, Hom-counting and the mu-invariant.

Every group here is described by data only: a free rank and a list of
cyclic moduli.  All arithmetic is exact (``int`` and ``Fraction``).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, InvalidModulusError, ResourceError, ValidationError

BRUTEFORCE_CAP = 10**6


def _invariant_factors(moduli: Sequence[int]) -> tuple[int, ...]:
    # Diagonal Smith normal form: replacing (d_i, d_j) by (gcd, lcm) keeps the
    # group and, swept over all pairs i < j, leaves a divisibility chain.
    d = list(moduli)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(x for x in d if x != 1)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group in invariant-factor form ``Z/n_1 x ... x Z/n_k``.

    ``moduli`` satisfies ``n_i >= 2`` and ``n_i | n_{i+1}``; the empty tuple is
    the trivial group.  Use :func:`normalize_torsion` to build one from an
    arbitrary list of cyclic orders.
    """

    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        mods = tuple(int(n) for n in self.moduli)
        object.__setattr__(self, "moduli", mods)
        for n in mods:
            if n < 2:
                raise InvalidModulusError(f"invariant factor {n} < 2")
        for a, b in zip(mods, mods[1:]):
            if b % a:
                raise InvalidModulusError(f"{a} does not divide {b}; use normalize_torsion")

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    @property
    def exponent(self) -> int:
        return self.moduli[-1] if self.moduli else 1

    @property
    def is_trivial(self) -> bool:
        return not self.moduli

    def direct_product(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return normalize_torsion(self.moduli + other.moduli)

    def power(self, w: int) -> FiniteAbelianGroup:
        """The ``w``-fold direct power."""
        if w < 0:
            raise InvalidArgumentError("power must be nonnegative")
        return normalize_torsion(self.moduli * w)

    def __str__(self):
        if not self.moduli:
            return "1"
        return " x ".join(f"Z/{n}" for n in self.moduli)


TRIVIAL = FiniteAbelianGroup()


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^rank x torsion``: the unit group attached to a point."""

    rank: int = 0
    torsion: FiniteAbelianGroup = TRIVIAL

    def __post_init__(self):
        if int(self.rank) != self.rank or self.rank < 0:
            raise InvalidArgumentError(f"rank must be a nonnegative integer, got {self.rank!r}")
        object.__setattr__(self, "rank", int(self.rank))
        if not isinstance(self.torsion, FiniteAbelianGroup):
            object.__setattr__(self, "torsion", normalize_torsion(self.torsion))

    @classmethod
    def of(cls, rank: int = 0, moduli: Iterable[int] = ()) -> FgAbelianGroup:
        return cls(rank, normalize_torsion(list(moduli)))

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        if self.torsion.moduli:
            parts.append(str(self.torsion))
        return " x ".join(parts) or "1"


@dataclass(frozen=True)
class Point:
    name: str
    units: FgAbelianGroup


@dataclass(frozen=True)
class F1Scheme:
    """A Noetherian F1-scheme, given as finitely many points with unit groups."""

    points: tuple[Point, ...] = ()
    name: str = "X"

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        seen = set()
        for p in pts:
            if p.name in seen:
                raise ValidationError(f"duplicate point name {p.name!r}")
            seen.add(p.name)

    @classmethod
    def from_units(cls, units: dict[str, FgAbelianGroup], name: str = "X") -> F1Scheme:
        return cls(tuple(Point(k, v) for k, v in units.items()), name)

    def disjoint_union(self, other: F1Scheme, name: str | None = None) -> F1Scheme:
        return F1Scheme(self.points + other.points, name or f"{self.name}+{other.name}")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def normalize_torsion(moduli: Iterable[int]) -> FiniteAbelianGroup:
    """Canonical invariant-factor form of ``prod Z/n_j``; factors ``Z/1`` vanish.

    >>> normalize_torsion([4, 6]).moduli
    (2, 12)
    """
    mods = []
    for n in moduli:
        if isinstance(n, bool) or int(n) != n:
            raise InvalidModulusError(f"modulus must be an integer, got {n!r}")
        n = int(n)
        if n <= 0:
            raise InvalidModulusError(f"modulus must be positive, got {n}")
        mods.append(n)
    return FiniteAbelianGroup(_invariant_factors(mods))


def _check_positive(m: int, what: str = "m") -> int:
    if int(m) != m or m <= 0:
        raise InvalidArgumentError(f"{what} must be a positive integer, got {m!r}")
    return int(m)


def hom_count_torsion(group: FiniteAbelianGroup, m: int) -> int:
    """``|Hom(group, Z/m)| = prod_j gcd(m, n_j)``."""
    m = _check_positive(m)
    return math.prod(math.gcd(m, n) for n in group.moduli)


def hom_count(group: FgAbelianGroup, m: int) -> int:
    """``|Hom(Z^n x torsion, Z/m)| = m^n * |Hom(torsion, Z/m)|``."""
    m = _check_positive(m)
    return m**group.rank * hom_count_torsion(group.torsion, m)


def exponent_lcm(group: FiniteAbelianGroup) -> int:
    """Least common multiple of element orders (1 for the trivial group)."""
    return math.lcm(1, *group.moduli)


def mu_power(group: FiniteAbelianGroup, w: int) -> Fraction:
    """``mu(group^w)``, as the average of ``|Hom(group, Z/t)|^w`` over one period."""
    if int(w) != w or w <= 0:
        raise InvalidArgumentError(f"w must be a positive integer, got {w!r}")
    w = int(w)
    period = exponent_lcm(group)
    total = sum(hom_count_torsion(group, t) ** w for t in range(1, period + 1))
    return Fraction(total, period)


def mu_exact(group: FiniteAbelianGroup) -> Fraction:
    """Sum of reciprocal element orders, via the gcd-average formula."""
    return mu_power(group, 1)


def element_order(element: Sequence[int], moduli: Sequence[int]) -> int:
    return math.lcm(1, *(n // math.gcd(x, n) for x, n in zip(element, moduli)))


def mu_bruteforce(group: FiniteAbelianGroup, cap: int = BRUTEFORCE_CAP) -> Fraction:
    """Sum of ``1/ord(a)`` by enumerating every element of the group."""
    if group.order > cap:
        raise ResourceError(f"|group| = {group.order} exceeds enumeration cap {cap}")
    orders = Counter(
        element_order(x, group.moduli)
        for x in itertools.product(*(range(n) for n in group.moduli))
    )
    return sum((Fraction(c, o) for o, c in sorted(orders.items())), Fraction(0))


def count_points(scheme: F1Scheme, m: int) -> int:
    """``#X(F_{1^m})``: homomorphisms from every unit group to ``Z/m``."""
    m = _check_positive(m)
    return sum(hom_count(p.units, m) for p in scheme.points)
