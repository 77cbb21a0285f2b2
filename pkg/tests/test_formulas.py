from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from refinv.reference import TABLES
from refinv.formulas import (
    RationalSeries,
    a_rec,
    b_rec,
    f_side,
    g_side,
    h_side,
    i321once_rec,
    i_avoid,
    i_avoid_total,
    i_once,
    i_once_total,
    i_stat,
    identity_checks,
    series_A,
    series_A_factored,
    series_B,
    series_checks,
)
from refinv.numbers import as_integer, binom, catalan, pow2
from refinv.perm_core import S3


@pytest.mark.parametrize(
    "n, k, a, expected",
    [(8, 0, "123", 35), (8, 2, "132", 28), (8, 2, "231", 56), (0, 0, "321", 1), (7, 1, "123", 35)],
)
def test_i_avoid_examples(n, k, a, expected):
    assert i_avoid(n, k, a) == expected


@pytest.mark.parametrize("n", range(12))
def test_i_avoid_identity_only_at_k_equal_n(n):
    for a in S3:
        assert i_avoid(n, n, a) == (0 if str(a) == "123" and n >= 3 else 1)


@pytest.mark.parametrize(
    "n, k, a, expected", [(7, 3, "123", 9), (8, 4, "231", 18), (8, 2, "321", 40), (8, 2, "231", 5), (4, 2, "231", 1)]
)
def test_i_once_examples(n, k, a, expected):
    assert i_once(n, k, a) == expected


def test_guarded_cells_are_zero():
    # no involution containing 132 exactly once is fixed-point free
    assert all(i_once(n, 0, "132") == 0 for n in range(12))
    assert all(i_once(n, k, a) == 0 for a in S3 for n in range(12) for k in range(n + 1) if (n + k) % 2)
    assert i_avoid(3, 5, "321") == 0


def test_totals():
    assert i_avoid_total(8, "231") == 128
    assert i_once_total(8, "231") == 28
    assert i_once_total(5, "231") == 2
    assert i_once_total(8, "123") == 0
    for n in range(12):
        for a in S3:
            assert i_once_total(n, a) == sum(i_once(n, k, a) for k in range(n + 1))
            assert i_avoid_total(n, a) == sum(i_avoid(n, k, a) for k in range(n + 1))


def test_catalan_manifestations():
    assert catalan(0) == 1 and catalan(4) == 14
    for n in range(1, 8):
        assert i_avoid(2 * n, 0, "321") == i_avoid(2 * n - 1, 1, "321") == catalan(n)


def test_i_stat_dispatch():
    assert i_stat("avoid", 8, 0, "123") == 35
    assert i_stat("once", 7, 3, "123") == 9
    with pytest.raises(ValueError):
        i_stat("twice", 3, 1, "123")
    with pytest.raises(ValueError):
        i_avoid(4, 0, "1234")


@pytest.mark.parametrize("key", sorted(TABLES))
def test_formulas_reproduce_tables(key):
    stat, patterns = key
    rows = TABLES[key]
    for a in patterns:
        assert [[i_stat(stat, n, k, a) for k in range(n + 1)] for n in range(len(rows))] == rows


def test_binomial_convention():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 1
    assert binom(-2, 1) == 0


def test_as_integer_raises_on_fractions():
    assert as_integer(Fraction(6, 3)) == 2
    with pytest.raises(ArithmeticError, match="non-integral"):
        as_integer(Fraction(3, 4), "probe")
    assert pow2(-1) == Fraction(1, 2)


def test_recurrence_examples():
    assert a_rec(8, 2) == 5 == i_once(8, 2, "231")
    assert b_rec(8, 2) == 56 == i_avoid(8, 2, "231")
    assert i321once_rec(8, 2) == 40


def test_convolution_identity_at_8_2():
    assert f_side(8, 2) == 20 == g_side(8, 2) == h_side(8, 2)
    rhs = sum(Fraction(3, 9 - 2 * i) * binom(9 - 2 * i, 3 - i) * catalan(i) for i in range(1, 4))
    assert rhs == Fraction(5, 9) * binom(9, 2) == 20


def test_base_cell_of_h():
    assert h_side(1, 1) == f_side(1, 1) == 0


def test_i_once_123_as_catalan_difference():
    assert i_once(7, 3, "123") == catalan(4) - catalan(3) == 9


@pytest.mark.parametrize("n_max", [0, 1, 8, 16])
def test_identity_report_passes(n_max):
    checks = identity_checks(n_max)
    failing = [str(c) for c in checks if not c.ok]
    assert not failing


def test_series_examples():
    assert series_B(2, 8)[8] == 56
    assert series_A(2, 8)[8] == 5
    assert series_B(0, 4)[0] == 1
    assert all(series_A(0, 10)[n] == 0 for n in range(11))
    assert all(c.ok for c in series_checks(16, 8))


def test_factored_series_requires_positive_k():
    with pytest.raises(ValueError):
        series_A_factored(0, 10)
    assert series_A_factored(3, 16) == series_A(3, 16)


def test_series_arithmetic():
    x = RationalSeries.monomial(1, 6)
    geometric = 1 / (1 - x)
    assert geometric.coeffs == [1] * 7
    assert (geometric * (1 - x)) == RationalSeries.one(6)
    assert ((1 + x) ** 3)[2] == 3
    assert (x - x)[1] == 0
    with pytest.raises(ZeroDivisionError):
        RationalSeries.one(6) / x
    with pytest.raises(IndexError):
        x[7]


@given(st.lists(st.fractions(max_denominator=9), min_size=1, max_size=8), st.integers(1, 5))
def test_series_division_inverts_multiplication(coeffs, shift):
    order = 7
    a = RationalSeries(coeffs, order)
    b = RationalSeries([1] + [0] * (shift - 1) + [Fraction(1, 2)], order)
    assert (a * b) / b == a
