"""Deformed Hurwitz-Igusa zeta functions of finitely generated abelian groups
and F1-schemes.

``zeta_hi_group`` evaluates the closed Hurwitz-zeta presentation, which is
meromorphic in ``s``.  Two independent oracles live alongside it:
``direct_series_oracle`` (the defining Dirichlet series, truncated, with a
rigorous tail bound) and ``euler_product_oracle`` (the product over primes,
finite torsion only).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .abelian import (
    F1Scheme,
    FgAbelianGroup,
    FiniteAbelianGroup,
    exponent_lcm,
    hom_count_torsion,
)
from .errors import BranchError, DomainError, F1ZetaError, InvalidArgumentError, PoleError
from .hurwitz import POLE_RADIUS, HurwitzConfig, hurwitz_zeta

ADMISSIBILITY_TOL = 1e-12


def _as_complex_tuple(x) -> tuple[complex, ...]:
    if isinstance(x, (int, float, complex)):
        return (complex(x),)
    return tuple(complex(v) for v in x)


@dataclass(frozen=True)
class EvalParams:
    """Arguments ``(s_1..s_r; a_1..a_r; w)`` of the Hurwitz-Igusa zeta function."""

    s: tuple[complex, ...]
    a: tuple[complex, ...]
    w: complex = 1
    tolerance: float = 1e-12

    def __post_init__(self):
        s = _as_complex_tuple(self.s)
        a = _as_complex_tuple(self.a)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "w", complex(self.w))
        if not s:
            raise InvalidArgumentError("need at least one variable (r >= 1)")
        if len(a) != len(s):
            raise InvalidArgumentError(f"len(a) = {len(a)} but len(s) = {len(s)}")
        if any(ai.real <= 0 for ai in a):
            raise DomainError(f"every a_i needs positive real part, got {a}")
        if not self.tolerance > 0:
            raise InvalidArgumentError("tolerance must be positive")

    @classmethod
    def of(cls, s, a=None, w=1, tolerance=1e-12) -> EvalParams:
        s = _as_complex_tuple(s)
        a = (1,) * len(s) if a is None else _as_complex_tuple(a)
        if len(a) == 1 and len(s) > 1:
            a = a * len(s)
        return cls(s, a, w, tolerance)

    @property
    def r(self) -> int:
        return len(self.s)

    @property
    def integer_w(self) -> int | None:
        """``w`` as a nonnegative int if it is one (to 1e-12), else ``None``."""
        k = round(self.w.real)
        if k >= 0 and abs(self.w - k) <= ADMISSIBILITY_TOL:
            return k
        return None

    @property
    def a_is_one(self) -> bool:
        return all(abs(ai - 1) <= ADMISSIBILITY_TOL for ai in self.a)

    @property
    def branch(self) -> int | None:
        """1 (integer ``w``), 2 (all ``a_i = 1``), or ``None`` if inadmissible."""
        if self.integer_w is not None:
            return 1
        if self.a_is_one:
            return 2
        return None

    def hurwitz_config(self) -> HurwitzConfig:
        return HurwitzConfig(tolerance=self.tolerance)


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    tail_bound: float
    terms_used: int


def _int_power(g: int, w: complex):
    # |Hom|^w through the real logarithm of the positive integer |Hom|
    k = round(w.real)
    if w.imag == 0 and w.real == k:
        return g**k if k >= 0 else 1 / g ** (-k)
    return cmath.exp(w * math.log(g))


def _check_pole(arg: complex, where: str):
    if abs(arg - 1) <= POLE_RADIUS:
        raise PoleError(f"{where}: Hurwitz argument {arg} hits the pole at 1")


def _torsion_sum(torsion: FiniteAbelianGroup, w: complex, factors: Sequence[Sequence[complex]]) -> complex:
    """``sum_{k in [1..l]^r} G(k_1...k_r)^w prod_i factors[i][k_i - 1]``."""
    period = exponent_lcm(torsion)
    weights = {}
    total = 0j
    for ks in itertools.product(range(1, period + 1), repeat=len(factors)):
        # G(k_1...k_r) only depends on the product mod l
        key = math.prod(ks) % period or period
        gw = weights.get(key)
        if gw is None:
            gw = weights[key] = _int_power(hom_count_torsion(torsion, key), w)
        term = gw
        for f, k in zip(factors, ks):
            term *= f[k - 1]
        total += term
    return total


def _branch_integer_w(params: EvalParams, group: FgAbelianGroup, w: int) -> complex:
    cfg = params.hurwitz_config()
    period = exponent_lcm(group.torsion)
    nw = group.rank * w
    factors = []
    for i, (s, a) in enumerate(zip(params.s, params.a)):
        if abs(a - 1) <= ADMISSIBILITY_TOL:
            a = 1 + 0j
        # (m-1+a + (1-a))^{nw} expanded binomially; the j-sum factorizes per
        # coordinate once the k-multi-index is fixed
        coeffs = [math.comb(nw, j) * (1 - a) ** (nw - j) for j in range(nw + 1)]
        per_k = []
        for k in range(1, period + 1):
            q = (k - 1 + a) / period
            acc = 0j
            for j, c in enumerate(coeffs):
                if c == 0:
                    continue
                arg = s - j
                _check_pole(arg, f"coordinate {i + 1}, j = {j}")
                acc += c * period ** (-arg) * hurwitz_zeta(arg, q, cfg)
            per_k.append(acc)
        factors.append(per_k)
    return _torsion_sum(group.torsion, complex(w), factors)


def _branch_a_one(params: EvalParams, group: FgAbelianGroup) -> complex:
    cfg = params.hurwitz_config()
    period = exponent_lcm(group.torsion)
    nw = group.rank * params.w
    factors = []
    for i, s in enumerate(params.s):
        arg = s - nw
        _check_pole(arg, f"coordinate {i + 1}")
        scale = period ** (-arg)
        factors.append([scale * hurwitz_zeta(arg, k / period, cfg) for k in range(1, period + 1)])
    return _torsion_sum(group.torsion, params.w, factors)


def zeta_hi_group(params: EvalParams, group: FgAbelianGroup, branch: int | None = None) -> complex:
    """Hurwitz-Igusa zeta of ``group`` via the Hurwitz-zeta presentation.

    Branch 1 needs ``w`` a nonnegative integer and handles any ``a`` with
    ``Re(a_i) > 0``; branch 2 needs every ``a_i = 1`` and handles complex ``w``.
    When both apply branch 1 is used unless ``branch`` forces a choice.
    """
    if branch is None:
        branch = params.branch
        if branch is None:
            raise BranchError(
                f"w = {params.w} is not a nonnegative integer and a = {params.a} is not all ones"
            )
    if branch == 1:
        w = params.integer_w
        if w is None:
            raise BranchError(f"branch 1 needs integer w >= 0, got {params.w}")
        return _branch_integer_w(params, group, w)
    if branch == 2:
        if not params.a_is_one:
            raise BranchError(f"branch 2 needs a = (1, ..., 1), got {params.a}")
        return _branch_a_one(params, group)
    raise InvalidArgumentError(f"unknown branch {branch!r}")


def zeta_hi_scheme(params: EvalParams, scheme: F1Scheme, branch: int | None = None) -> complex:
    total = 0j
    for p in scheme.points:
        try:
            total += zeta_hi_group(params, p.units, branch)
        except F1ZetaError as exc:
            raise type(exc)(f"point {p.name!r}: {exc}") from exc
    return total


def zeta_igusa(s, w, scheme: F1Scheme, tolerance: float = 1e-12) -> complex:
    """Deformed multivariable Igusa zeta: the ``a = (1, ..., 1)`` specialization."""
    return zeta_hi_scheme(EvalParams.of(s, None, w, tolerance), scheme)


def soule_disc_series(s, w, scheme: F1Scheme, tolerance: float = 1e-12) -> complex:
    """``D(s; w) = sum_p sum_m |Hom(O_p, Z/m)|^w (m+1)^(-s-1)``.

    The log-derivative of the deformed modified Soule zeta function is
    ``-D(s; w)`` up to an additive constant.
    """
    params = EvalParams.of((complex(s) + 1,), (2,), w, tolerance)
    return zeta_hi_scheme(params, scheme)


# -- oracles -----------------------------------------------------------------


def _coordinate_tail(s: complex, a: complex, alpha: float, m_max: int) -> tuple[float, float]:
    """Bounds for ``f(m) = m^alpha |(m-1+a)^-s|``: (sum_{m<=M} f, sum_{m>M} f)."""
    m = np.arange(1, m_max + 1, dtype=float)
    z = m - 1 + a
    head = float(np.sum(m**alpha * np.exp(-s.real * np.log(np.abs(z)) + s.imag * np.angle(z))))
    c = a.real
    beta = s.real - alpha
    # over m > M: m^alpha <= ratio * (m-1+c)^alpha, |arg(m-1+a)| <= its value at M+1
    ratio = max(1.0, ((m_max + 1) / (m_max + c)) ** alpha)
    z_next = m_max + a
    angle = abs(s.imag) * abs(cmath.phase(z_next))
    tail = ratio * math.exp(angle) * (m_max - 1 + c) ** (1 - beta) / (beta - 1)
    return head, tail


def series_tail_bound(params: EvalParams, group: FgAbelianGroup, m_max: int) -> float:
    """Rigorous bound on the part of the defining series with some ``m_i > m_max``."""
    n = group.rank
    wr = params.w.real
    if wr < 0:
        raise DomainError("direct series needs Re(w) >= 0")
    for s in params.s:
        if s.real < n * wr + 1.5:
            raise DomainError(f"direct series needs Re(s_i) >= n Re(w) + 1.5, got s = {s}")
    heads, tails = zip(*(_coordinate_tail(s, a, n * wr, m_max) for s, a in zip(params.s, params.a)))
    # |Hom(A, Z/m1...mr)|^Re(w) <= |torsion|^Re(w) prod_i m_i^{n Re(w)}
    const = float(group.torsion.order) ** wr
    return const * (math.prod(h + t for h, t in zip(heads, tails)) - math.prod(heads))


def direct_series_oracle(params: EvalParams, group: FgAbelianGroup, m_max: int) -> SeriesResult:
    """Truncated defining series over ``1 <= m_i <= m_max`` plus a certified tail bound.

    No branch restriction: any ``(a, w)`` with ``Re(a_i) > 0`` and enough
    convergence margin is accepted.
    """
    if int(m_max) != m_max or m_max < 1:
        raise InvalidArgumentError("m_max must be a positive integer")
    m_max = int(m_max)
    bound = series_tail_bound(params, group, m_max)
    m = np.arange(1, m_max + 1, dtype=np.int64)
    n, w, mods = group.rank, params.w, group.torsion.moduli
    # |Hom|^w = (m_1 ... m_r)^(nw) * T(m_1 ... m_r)^w with T the torsion count;
    # the free part splits over coordinates, T^w is looked up by value
    logm = np.log(m.astype(float))
    coords = [np.exp(n * w * logm - s * np.log(m - 1 + a)) for s, a in zip(params.s, params.a)]
    order = group.torsion.order
    values = np.arange(1, order + 1, dtype=float)
    torsion_pow = np.concatenate(([0j], np.exp(w * np.log(values))))

    def torsion_weights(prod: np.ndarray) -> np.ndarray:
        g = np.ones_like(prod)
        for nj in mods:
            g = g * np.gcd(prod, nj)
        return torsion_pow[g]

    total = 0j
    # outer coordinates iterated, the last one vectorized
    for head in itertools.product(range(m_max), repeat=params.r - 1):
        coeff = complex(math.prod((coords[i][k] for i, k in enumerate(head)), start=1))
        if not mods:
            total += coeff * complex(np.sum(coords[-1]))
            continue
        prod = int(math.prod((k + 1 for k in head), start=1)) * m
        total += coeff * complex(np.dot(torsion_weights(prod), coords[-1]))
    return SeriesResult(total, bound, m_max**params.r)


def choose_truncation(params: EvalParams, group: FgAbelianGroup, target: float, m_cap: int = 10**7) -> int:
    """Smallest power-of-two-ish ``M`` whose certified tail bound is ``<= target``."""
    m = 8
    while m <= m_cap:
        if series_tail_bound(params, group, m) <= target:
            # bisect down between m/2 and m
            lo, hi = m // 2, m
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if series_tail_bound(params, group, mid) <= target:
                    hi = mid
                else:
                    lo = mid
            return hi
        m *= 2
    raise DomainError(f"tail bound {target} needs M > {m_cap}")


def primes_up_to(bound: int) -> np.ndarray:
    if bound < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def euler_product_oracle(
    s,
    w,
    torsion: FiniteAbelianGroup | FgAbelianGroup,
    prime_bound: int = 10**5,
    power_bound: int = 60,
) -> complex:
    """Product over ``p <= prime_bound`` of local factors truncated at ``k_i <= power_bound``."""
    if isinstance(torsion, FgAbelianGroup):
        if torsion.rank:
            raise DomainError("Euler product oracle needs a finite group (rank 0)")
        torsion = torsion.torsion
    s = _as_complex_tuple(s)
    w = complex(w)
    if any(si.real < 1.5 for si in s):
        raise DomainError(f"Euler product oracle needs Re(s_i) >= 1.5, got {s}")
    K = int(power_bound)
    primes = primes_up_to(int(prime_bound))
    order = torsion.order
    ramified = [int(p) for p in primes if order % int(p) == 0]
    unramified = np.array([int(p) for p in primes if order % int(p)], dtype=float)

    # |Hom(torsion, Z/p^k)| = 1 when p does not divide |torsion|; the truncated
    # local factor is then the product of finite geometric sums.
    log_total = 0j
    for si in s:
        x = np.exp(-si * np.log(unramified))
        geo = (1 - x ** (K + 1)) / (1 - x)
        log_total += complex(np.sum(np.log(geo)))
    total = cmath.exp(log_total)

    for p in ramified:
        vals = [_valuation(n, p) for n in torsion.moduli]
        local = 0j
        for ks in itertools.product(range(K + 1), repeat=len(s)):
            t = sum(ks)
            g = p ** sum(min(t, v) for v in vals)
            term = _int_power(g, w)
            for k, si in zip(ks, s):
                term *= cmath.exp(-k * si * math.log(p))
            local += term
        total *= local
    return total
