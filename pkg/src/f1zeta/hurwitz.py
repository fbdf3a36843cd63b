"""Hurwitz zeta function by Euler-Maclaurin summation.

    zeta(s, q) = sum_{n<N} (n+q)^-s + (N+q)^(1-s)/(s-1) + (N+q)^-s / 2
                 + sum_{k=1}^{J} B_2k/(2k)! * s(s+1)...(s+2k-2) * (N+q)^(-s-2k+1)

The shift ``N`` grows until the first omitted correction term is below the
tolerance (relative to ``max(1, |value|)``).  ``J`` is raised on the far left
half-plane, where a fixed ``J`` makes the remainder grow with ``N``.  For ``Re(s) < 0`` the summands
grow with ``n`` and cancel, so that half-plane is summed at a working precision
sized to the largest summand and rounded back to binary64 at the end.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath

from .errors import ConvergenceError, DomainError, InvalidArgumentError, PoleError

POLE_RADIUS = 1e-9
MAX_BERNOULLI = 64
MAX_BERNOULLI_POLY = 32


def _bernoulli_table(kmax: int) -> tuple[Fraction, ...]:
    # sum_{i=0}^{k} C(k+1, i) B_i = 0 for k >= 1, B_0 = 1
    table = [Fraction(1)]
    for k in range(1, kmax + 1):
        acc = sum(math.comb(k + 1, i) * table[i] for i in range(k))
        table.append(-acc / (k + 1))
    return tuple(table)


_BERNOULLI = _bernoulli_table(MAX_BERNOULLI)


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number ``B_k`` with ``B_1 = -1/2``."""
    if int(k) != k or k < 0:
        raise InvalidArgumentError(f"k must be a nonnegative integer, got {k!r}")
    if k > MAX_BERNOULLI:
        raise InvalidArgumentError(f"bernoulli({k}) out of range (k <= {MAX_BERNOULLI})")
    return _BERNOULLI[int(k)]


def bernoulli_poly(k: int, x):
    """``B_k(x) = sum_i C(k, i) B_i x^(k-i)``.

    Exact (``Fraction``) for rational ``x``, complex otherwise.
    """
    if int(k) != k or k < 0 or k > MAX_BERNOULLI_POLY:
        raise InvalidArgumentError(f"bernoulli_poly degree {k!r} out of range [0, {MAX_BERNOULLI_POLY}]")
    k = int(k)
    if isinstance(x, Rational):
        x = Fraction(x)
        return sum((math.comb(k, i) * _BERNOULLI[i] * x ** (k - i) for i in range(k + 1)), Fraction(0))
    x = complex(x)
    acc = 0j
    # Horner in x with coefficients C(k, i) B_i, highest power first
    for i in range(k + 1):
        acc = acc * x + math.comb(k, i) * float(_BERNOULLI[i])
    return acc


@dataclass(frozen=True)
class HurwitzConfig:
    tolerance: float = 1e-12
    bernoulli_terms: int = 15  # J
    min_shift: int = 10  # N_min
    max_shift: int = 200_000

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InvalidArgumentError("tolerance must be positive")
        if not 1 <= self.bernoulli_terms <= MAX_BERNOULLI // 2 - 1:
            raise InvalidArgumentError(f"bernoulli_terms must lie in [1, {MAX_BERNOULLI // 2 - 1}]")
        if self.min_shift < 1 or self.max_shift < self.min_shift:
            raise InvalidArgumentError("need 1 <= min_shift <= max_shift")


DEFAULT_CONFIG = HurwitzConfig()

# B_2k / (2k)!
_EM_COEFFS = tuple(_BERNOULLI[2 * k] / math.factorial(2 * k) for k in range(MAX_BERNOULLI // 2))


def _log_omitted_term(s: complex, q: complex, n_shift: int, J: int) -> float:
    """log |B_{2J+2}/(2J+2)! * (s)_{2J+1} * (N+q)^(-s-2J-1)|, -inf if it vanishes."""
    k = J + 1
    acc = math.log(abs(_EM_COEFFS[k]))
    for i in range(2 * k - 1):
        f = abs(s + i)
        if f == 0.0:
            return -math.inf
        acc += math.log(f)
    x = n_shift + q
    return acc - (s.real + 2 * k - 1) * math.log(abs(x)) + s.imag * cmath.phase(x)


def _em_sum(s, q, n_shift, J, coeffs):
    """Euler-Maclaurin sum; works for ``complex`` and ``mpmath.mpc`` alike."""
    total = 0 * s
    for n in range(n_shift - 1, -1, -1):
        total += (n + q) ** (-s)
    x = n_shift + q
    xs = x ** (-s)
    tail = xs / 2
    rising = s
    xpow = xs / x
    x2 = x * x
    for k in range(1, J + 1):
        tail += coeffs[k] * rising * xpow
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        xpow /= x2
    return total + x * xs / (s - 1) + tail


def _em_float(s: complex, q: complex, n_shift: int, J: int) -> complex:
    coeffs = [float(c) for c in _EM_COEFFS[: J + 1]]
    return _em_sum(s, q, n_shift, J, coeffs)


def _em_extended(s: complex, q: complex, n_shift: int, J: int) -> complex:
    x = n_shift + q
    log_big = max(0.0, -s.real * math.log(abs(x))) + abs(s.imag) * math.pi / 2
    prec = 53 + 32 + int(math.ceil(log_big / math.log(2) + math.log2(n_shift + 2)))
    with mpmath.workprec(prec):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in _EM_COEFFS[: J + 1]]
        val = _em_sum(mpmath.mpc(s), mpmath.mpc(q), n_shift, J, coeffs)
        return complex(val)


def hurwitz_zeta(s, q, cfg: HurwitzConfig = DEFAULT_CONFIG) -> complex:
    """Analytic continuation of ``sum_{n>=0} (n+q)^-s`` for ``Re(q) > 0``, ``s != 1``.

    Accuracy is ``cfg.tolerance`` measured against ``max(1, |zeta(s, q)|)``.
    Raises :class:`PoleError` within ``1e-9`` of ``s = 1``.
    """
    s = complex(s)
    q = complex(q)
    if not (cmath.isfinite(s) and cmath.isfinite(q)):
        raise DomainError("non-finite argument")
    if q.real <= 0:
        raise DomainError(f"Hurwitz zeta needs Re(q) > 0, got q = {q}")
    if abs(s - 1) <= POLE_RADIUS:
        raise PoleError(f"s = {s} is within {POLE_RADIUS} of the pole at s = 1")

    J = cfg.bernoulli_terms
    if s.real + 2 * J + 1 < 10:
        # far left the omitted term must still decay like N^-10
        J = min(MAX_BERNOULLI // 2 - 1, math.ceil((9 - s.real) / 2))
    evaluate = _em_extended if s.real < 0 else _em_float
    log_tol = math.log(cfg.tolerance)
    n_shift = max(cfg.min_shift, math.ceil(abs(s.imag)))
    while n_shift <= cfg.max_shift:
        log_err = _log_omitted_term(s, q, n_shift, J)
        # |value| < e^710 in binary64, so beyond that the criterion cannot pass
        if log_err < log_tol + 710:
            value = evaluate(s, q, n_shift, J)
            if not cmath.isfinite(value):
                raise ConvergenceError(f"zeta({s}, {q}) overflows binary64")
            if log_err < log_tol + math.log(max(1.0, abs(value))):
                return value
        n_shift = int(n_shift * 1.5) + 1
    raise ConvergenceError(
        f"zeta({s}, {q}): tolerance {cfg.tolerance} not reached with shift <= {cfg.max_shift}"
    )


def riemann_zeta(s, cfg: HurwitzConfig = DEFAULT_CONFIG) -> complex:
    return hurwitz_zeta(s, 1.0, cfg)
