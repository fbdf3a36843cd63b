import math

import pytest
from hypothesis import given, settings, strategies as st

from f1zeta.abelian import F1Scheme, FgAbelianGroup, Point, normalize_torsion
from f1zeta.assembly import (
    EvalParams,
    choose_truncation,
    direct_series_oracle,
    euler_product_oracle,
    series_tail_bound,
    soule_disc_series,
    zeta_hi_group,
    zeta_hi_scheme,
    zeta_igusa,
)
from f1zeta.errors import BranchError, DomainError, InvalidArgumentError, PoleError
from f1zeta.hurwitz import hurwitz_zeta

ZETA2 = math.pi**2 / 6
ZETA3 = 1.2020569031595942853997

TRIV = FgAbelianGroup()
GM = FgAbelianGroup.of(1)
Z2 = FgAbelianGroup.of(0, [2])


def single(units, name="p0"):
    return F1Scheme((Point(name, units),))


def brute_double_sum(units, s, m_max):
    """Plain double loop over the defining series, a = 1, w = 1."""
    total = 0.0
    for m1 in range(1, m_max + 1):
        for m2 in range(1, m_max + 1):
            m = m1 * m2
            hom = m**units.rank * math.prod(math.gcd(m, n) for n in units.torsion.moduli)
            total += hom * m1 ** (-s[0]) * m2 ** (-s[1])
    return total


def test_params_validation():
    with pytest.raises(InvalidArgumentError):
        EvalParams((), ())
    with pytest.raises(InvalidArgumentError):
        EvalParams((2, 3), (1,))
    with pytest.raises(DomainError):
        EvalParams.of(2, -0.5)
    p = EvalParams.of((2, 3), 1.5, 2)
    assert p.a == (1.5, 1.5) and p.r == 2 and p.branch == 1
    assert EvalParams.of(2, 1, 0.5 + 1j).branch == 2
    assert EvalParams.of(2, 1.5, 0.5).branch is None
    assert EvalParams.of(2, 2, 3 + 1e-13).integer_w == 3
    assert EvalParams.of(2, 2, -1).integer_w is None


def test_trivial_group_shift_two():
    # sum_{m>=1} (m+1)^-3 = zeta(3) - 1
    v = zeta_hi_group(EvalParams.of(3, 2, 1), TRIV)
    assert v == pytest.approx(ZETA3 - 1, abs=1e-13)
    assert v.real == pytest.approx(0.2020569032, abs=1e-10)


def test_gm_reduces_to_riemann():
    # sum m * m^-4 = zeta(3)
    assert zeta_hi_group(EvalParams.of(4, 1, 1), GM) == pytest.approx(ZETA3, abs=1e-13)


def test_z2_two_variables():
    expected = 43 / 32 * ZETA2 * ZETA3
    brute = brute_double_sum(Z2, (2, 3), 2000)
    assert brute == pytest.approx(expected, abs=2e-3)
    v = zeta_hi_group(EvalParams.of((2, 3), (1, 1), 1), Z2)
    assert v == pytest.approx(expected, abs=1e-12)
    assert v.real == pytest.approx(2.6570, abs=1e-3)


def test_scheme_sum_over_points():
    p = EvalParams.of((3.5,), (1.3,), 2)
    assert zeta_hi_scheme(p, F1Scheme()) == 0
    assert zeta_hi_scheme(p, single(GM)) == zeta_hi_group(p, GM)
    twice = F1Scheme((Point("a", GM), Point("b", GM)))
    assert zeta_hi_scheme(p, twice) == pytest.approx(2 * zeta_hi_group(p, GM), abs=1e-14)


def test_scheme_errors_name_the_point():
    X = F1Scheme((Point("good", TRIV), Point("bad", GM)))
    with pytest.raises(PoleError, match="bad"):
        zeta_hi_scheme(EvalParams.of(2, 1, 1), X)


@pytest.mark.parametrize(
    "units, s, w, expected",
    [
        (GM, (4,), 1, ZETA3),
        (Z2, (2,), 1, 1.25 * ZETA2),
        (TRIV, (2, 3), 0.37 - 2j, ZETA2 * ZETA3),
    ],
)
def test_zeta_igusa_examples(units, s, w, expected):
    assert zeta_igusa(s, w, single(units)) == pytest.approx(expected, abs=1e-12)


def test_zeta_igusa_spot_values():
    assert zeta_igusa(2, 1, single(Z2)).real == pytest.approx(2.0561675836, abs=1e-10)
    assert zeta_igusa((2, 3), 5, single(TRIV)).real == pytest.approx(1.9773043503, abs=1e-10)


@pytest.mark.parametrize(
    "units, s, expected",
    [
        (TRIV, 1, ZETA2 - 1),
        (GM, 2, ZETA2 - ZETA3),
    ],
)
def test_soule_series_examples(units, s, expected):
    assert soule_disc_series(s, 1, single(units)) == pytest.approx(expected, abs=1e-12)


def test_soule_series_near_pole_of_spec_z2():
    eps = 1e-4
    assert eps * soule_disc_series(eps, 1, single(Z2)).real == pytest.approx(1.5, abs=1e-3)


def test_direct_series_basel():
    r = direct_series_oracle(EvalParams.of(2, 1, 1), TRIV, 10**6)
    assert r.terms_used == 10**6
    assert 0 < r.tail_bound <= 1.01e-6
    assert abs(r.value - ZETA2) <= r.tail_bound
    assert r.value.real == pytest.approx(1.644934, abs=2e-6)


@pytest.mark.parametrize("units", [TRIV, GM, Z2, FgAbelianGroup.of(2, [2, 4])])
def test_direct_series_w0_is_product_of_hurwitz(units):
    s, a = (3.2, 2.5 + 1j), (0.6, 2.0)
    p = EvalParams.of(s, a, 0)
    r = direct_series_oracle(p, units, 400)
    ref = hurwitz_zeta(s[0], a[0]) * hurwitz_zeta(s[1], a[1])
    assert abs(r.value - ref) <= r.tail_bound + 1e-12


def test_direct_series_vs_presentation_z_times_z2():
    A = FgAbelianGroup.of(1, [2])
    p = EvalParams.of(6, 1.3, 2)
    r = direct_series_oracle(p, A, 2 * 10**4)
    assert abs(zeta_hi_group(p, A) - r.value) <= r.tail_bound + 1e-8


def test_direct_series_domain():
    with pytest.raises(DomainError):
        direct_series_oracle(EvalParams.of(3, 1, 1), FgAbelianGroup.of(2), 10)
    with pytest.raises(DomainError):
        direct_series_oracle(EvalParams.of(3, 1, -1), TRIV, 10)


def test_tail_bound_is_rigorous_and_decreasing():
    # compare the bound with the actual remainder of a long truncation
    A = FgAbelianGroup.of(1, [3])
    p = EvalParams.of(3.5, 0.7 + 0.2j, 1)
    far = direct_series_oracle(p, A, 10**6)
    for m in (10, 100, 1000):
        near = direct_series_oracle(p, A, m)
        assert abs(far.value - near.value) <= near.tail_bound
    assert series_tail_bound(p, A, 100) > series_tail_bound(p, A, 1000)


def test_choose_truncation():
    p = EvalParams.of((8, 9.5), (0.7 + 0.2j, 2), 2)
    A = FgAbelianGroup.of(2, [2, 4])
    M = choose_truncation(p, A, 1e-8)
    assert series_tail_bound(p, A, M) <= 1e-8 < series_tail_bound(p, A, M - 1)


# Euler product


def test_euler_product_basel():
    v = euler_product_oracle(2, 1, normalize_torsion([]))
    assert abs(v - ZETA2) <= 1e-4


def test_euler_product_z2():
    v = euler_product_oracle(2, 1, normalize_torsion([2]))
    assert abs(v - 1.25 * ZETA2) <= 1e-4
    assert v.real == pytest.approx(2.05617, abs=1e-4)


def test_euler_product_z2_w2():
    v = euler_product_oracle(3, 2, normalize_torsion([2]))
    # local factor at 2 is 11/7; remaining primes give (1 - 2^-3) zeta(3)
    assert abs(v - 11 / 8 * ZETA3) <= 1e-9
    assert v.real == pytest.approx(1.6528, abs=1e-3)


def test_euler_product_two_variables_z6():
    s, w = (3, 2.5 + 0.5j), 2
    A = FgAbelianGroup.of(0, [6])
    ref = zeta_hi_group(EvalParams.of(s, 1, w), A)
    assert abs(euler_product_oracle(s, w, A) - ref) <= 1e-6


def test_euler_product_rejects_rank():
    with pytest.raises(DomainError):
        euler_product_oracle(2, 1, GM)


# branches


def test_branch_errors():
    with pytest.raises(BranchError):
        zeta_hi_group(EvalParams.of(3, 1.5, 0.5), GM)
    with pytest.raises(BranchError):
        zeta_hi_group(EvalParams.of(3, 1.5, 1), GM, branch=2)
    with pytest.raises(BranchError):
        zeta_hi_group(EvalParams.of(3, 1, 0.5), GM, branch=1)


def test_pole_hyperplane():
    # branch 1 at a != 1 touches s - j = 1 for every j <= nw
    with pytest.raises(PoleError):
        zeta_hi_group(EvalParams.of(2, 1.5, 1), GM)
    # at a = 1 only j = nw survives, so s = 2 on Z^2 is regular
    zeta_hi_group(EvalParams.of(2, 1, 1), FgAbelianGroup.of(2))


units_st = st.builds(
    FgAbelianGroup.of, st.integers(0, 2), st.lists(st.sampled_from([2, 3, 4, 6]), max_size=2)
)


@given(units_st, st.integers(0, 3), st.integers(1, 2), st.floats(-3, 3))
@settings(deadline=None, max_examples=60)
def test_branches_agree_at_a_one(units, w, r, im):
    nw = units.rank * w
    s = [nw + 2.5 + 1j * im, nw + 3.25 - 0.5j][:r]
    p = EvalParams.of(s, None, w)
    assert abs(zeta_hi_group(p, units, 1) - zeta_hi_group(p, units, 2)) <= 1e-10


@given(units_st, st.integers(1, 2), st.sampled_from([1, 2, 1.3, 0.7 + 0.2j]))
@settings(deadline=None, max_examples=40)
def test_presentation_matches_direct_series(units, w, a):
    nw = units.rank * w
    p = EvalParams.of((nw + 5 + 0.25j,), a, w)
    M = choose_truncation(p, units, 1e-9)
    r = direct_series_oracle(p, units, M)
    assert abs(zeta_hi_group(p, units) - r.value) <= r.tail_bound + 1e-8


@given(st.floats(1.6, 4), st.floats(-2, 2), st.floats(0.1, 0.9))
@settings(deadline=None, max_examples=30)
def test_complex_w_branch_matches_direct_series(sr, si, wr):
    # a = 1, non-integer w: only the direct series can check this branch
    A = FgAbelianGroup.of(1, [2])
    w = complex(wr, 0.3)
    p = EvalParams.of((sr + wr + 1.5 + 1j * si,), 1, w)
    r = direct_series_oracle(p, A, 20000)
    assert abs(zeta_hi_group(p, A) - r.value) <= r.tail_bound + 1e-8


def test_trivial_group_factorizes():
    s, a = (2.5, 0.5 + 2j), (0.4, 1.7 - 0.3j)
    for w in (0, 1, 2):
        v = zeta_hi_group(EvalParams.of(s, a, w), TRIV)
        assert abs(v - hurwitz_zeta(s[0], a[0]) * hurwitz_zeta(s[1], a[1])) <= 1e-10


def test_specializations():
    X = F1Scheme((Point("a", FgAbelianGroup.of(1, [2])), Point("b", Z2)))
    s, w = (4.0, 5.5 + 1j), 2
    assert zeta_igusa(s, w, X) == zeta_hi_scheme(EvalParams.of(s, None, w), X)
    for s1 in (2.5, -0.5 + 0.5j):
        assert soule_disc_series(s1, 1, X) == zeta_hi_scheme(EvalParams.of((s1 + 1,), (2,), 1), X)
