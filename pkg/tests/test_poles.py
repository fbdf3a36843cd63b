import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from f1zeta.abelian import F1Scheme, FgAbelianGroup, Point
from f1zeta.errors import DomainError, InvalidArgumentError
from f1zeta.poles import (
    order_at,
    pole_divisor_report,
    pole_locations,
    rationality_report,
    rationality_unobstructed,
    residue_numeric,
)


def single(rank=0, torsion=(), name="p0"):
    return F1Scheme((Point(name, FgAbelianGroup.of(rank, torsion)),))


GM = single(1)
Z2 = single(0, [2])
Z3 = single(0, [3])
GM_Z2 = F1Scheme((Point("gm", FgAbelianGroup.of(1)), Point("z2", FgAbelianGroup.of(0, [2]))))


@pytest.mark.parametrize(
    "scheme, w, expected",
    [(GM, 1, [0, 1]), (Z2, 1, [0]), (single(2), 2, [0, 1, 2, 3, 4]), (F1Scheme(), 3, [])],
)
def test_pole_locations(scheme, w, expected):
    assert pole_locations(scheme, w) == expected


def test_live_locations_drop_cancelled():
    # G_m contributes +1 at 0, Z/1 point with mu = 1 contributes -1 at 0
    X = F1Scheme((Point("gm", FgAbelianGroup.of(1)), Point("pt", FgAbelianGroup())))
    assert order_at(0, 1, X) == 0
    assert pole_locations(X, 1, live_only=True) == [1]
    assert pole_divisor_report(X, 1)[0].kind == "cancelled"


@pytest.mark.parametrize(
    "scheme, j, expected",
    [
        (GM, 0, Fraction(1)),
        (GM, 1, Fraction(-1)),
        (GM, 2, Fraction(0)),
        (Z2, 0, Fraction(-3, 2)),
        (Z3, 0, Fraction(-5, 3)),
        (GM_Z2, 0, Fraction(-1, 2)),
        (GM_Z2, 1, Fraction(-1)),
    ],
)
def test_order_at_examples(scheme, j, expected):
    assert order_at(j, 1, scheme) == expected


def test_order_at_rank2_w2():
    # -C(4, j)(-1)^(4-j)
    assert [order_at(j, 2, single(2)) for j in range(5)] == [-1, 4, -6, 4, -1]


def test_w_must_be_positive_integer():
    for bad in (0, 1.5, -1, 2 + 1j):
        with pytest.raises(DomainError):
            order_at(0, bad, GM)
    assert order_at(0, 1 + 0j, GM) == 1
    with pytest.raises(InvalidArgumentError):
        order_at(-1, 1, GM)


def test_report_examples():
    assert pole_divisor_report(F1Scheme(), 2) == []
    gm = pole_divisor_report(GM, 1)
    assert [(d.location, d.exponent, d.kind) for d in gm] == [(0, 1, "zero"), (1, -1, "pole")]
    mixed = pole_divisor_report(GM_Z2, 1)
    assert [(d.location, d.exponent) for d in mixed] == [(0, Fraction(-1, 2)), (1, Fraction(-1))]
    assert mixed[0].contributions == (("gm", Fraction(1)), ("z2", Fraction(-3, 2)))
    assert mixed[1].contributions == (("gm", Fraction(-1)), ("z2", Fraction(0)))


@pytest.mark.parametrize(
    "scheme, j, expected",
    [(GM, 0, 1.0), (GM, 1, -1.0), (Z2, 0, -1.5)],
)
def test_residue_numeric_examples(scheme, j, expected):
    assert abs(residue_numeric(j, 1, scheme, 1e-5) - expected) <= 1e-4


def test_residue_numeric_rank2_w2():
    X = single(2)
    for j in range(5):
        assert abs(residue_numeric(j, 2, X) - float(order_at(j, 2, X))) <= 1e-3


def test_residue_numeric_eps_range():
    with pytest.raises(InvalidArgumentError):
        residue_numeric(0, 1, GM, eps=1e-9)
    with pytest.raises(InvalidArgumentError):
        residue_numeric(0, 1, GM, eps=0.1)


def test_rationality_report():
    X = F1Scheme(
        (
            Point("a", FgAbelianGroup.of(1)),
            Point("b", FgAbelianGroup.of(0, [2])),
            Point("c", FgAbelianGroup.of(0, [4])),
        )
    )
    entries = rationality_report(X)
    assert [(e.point, e.mu, e.integral) for e in entries] == [
        ("a", Fraction(1), True),
        ("b", Fraction(3, 2), False),
        ("c", Fraction(2), True),
    ]
    assert not rationality_unobstructed(X)
    assert rationality_unobstructed(single(2, [4]))


units_st = st.builds(
    FgAbelianGroup.of, st.integers(0, 3), st.lists(st.sampled_from([2, 3, 4, 5, 6]), max_size=2)
)


@given(st.integers(1, 3), st.lists(st.sampled_from([2, 3, 4, 6, 9]), max_size=2))
def test_sum_rule_single_point(n, torsion):
    X = single(n, torsion)
    assert sum(order_at(j, 1, X) for j in pole_locations(X, 1)) == 0


@given(st.lists(units_st, min_size=1, max_size=3), st.lists(units_st, max_size=3), st.integers(1, 3))
@settings(deadline=None)
def test_disjoint_union_additive(left, right, w):
    X = F1Scheme(tuple(Point(f"x{i}", u) for i, u in enumerate(left)))
    Y = F1Scheme(tuple(Point(f"y{i}", u) for i, u in enumerate(right)))
    XY = X.disjoint_union(Y)
    for d in pole_divisor_report(XY, w):
        assert d.exponent == sum(c for _, c in d.contributions)
        assert d.exponent == order_at(d.location, w, X) + order_at(d.location, w, Y)


@given(st.integers(0, 5))
def test_trivial_torsion_integer_exponents(n):
    X = single(n)
    for j in range(n + 1):
        assert order_at(j, 1, X) == -math.comb(n, j) * (-1) ** (n - j)
