from math import comb

import pytest

from oracles import syt_count_by_fillings
from refinv.enumerate import involutions
from refinv.perm_core import Permutation, fixed_points, occurrences
from refinv.syt import (
    StandardYoungTableau,
    enumerate_syt,
    gamma,
    gamma_move,
    involution_of,
    longest_decreasing,
    longest_increasing,
    odd_columns,
    tableau_of,
)

SYT = StandardYoungTableau


def test_tableau_examples():
    assert tableau_of(Permutation.parse("34125768")).shape == (5, 3)
    assert tableau_of(Permutation.identity(4)).rows == ((1, 2, 3, 4),)
    assert tableau_of(Permutation.parse("4321")).shape == (1, 1, 1, 1)


def test_tableau_rejects_non_involutions():
    with pytest.raises(ValueError, match="not an involution"):
        tableau_of(Permutation.parse("231"))


def test_invalid_tableaux_rejected():
    for rows in ([[1, 2], [3, 4, 5]], [[2, 1]], [[1, 3], [2, 4], [1]], [[1, 3], [4, 2]]):
        with pytest.raises(ValueError):
            SYT(rows)


def test_involution_of_examples():
    assert involution_of(SYT([range(1, 6)])) == Permutation.identity(5)
    assert involution_of(SYT([[1], [2]])) == Permutation.parse("21")
    p = Permutation.parse("34125768")
    assert involution_of(tableau_of(p)) == p


@pytest.mark.parametrize("n", range(10))
def test_tableau_properties_for_involutions(n):
    for p in involutions(n):
        t = tableau_of(p)
        assert odd_columns(t) == len(fixed_points(p))
        assert (t.shape[0] if n else 0) == longest_increasing(p)
        assert (len(t.columns[0]) if n else 0) == longest_decreasing(p)
        assert involution_of(t) == p


def test_longest_sequences():
    p = Permutation.parse("34125768")
    assert longest_increasing(p) == 5
    assert longest_decreasing(p) == 2


def test_gamma_move_paper_example():
    t = SYT.from_columns([(1, 2, 5, 6), (3, 4)])
    assert gamma_move(t).columns == ((1, 2, 5), (3, 4, 6))
    assert gamma_move(gamma_move(t)) == t


def test_gamma_move_two_cells():
    assert gamma_move(SYT([[1], [2]])) == SYT([[1, 2]])
    assert gamma(Permutation.parse("21")) == Permutation.parse("12")


def test_gamma_move_rejections():
    with pytest.raises(ValueError, match="columns"):
        gamma_move(SYT([[1, 2, 3]]))
    with pytest.raises(ValueError, match="parity"):
        gamma_move(SYT([[1, 2], [3]]))


def test_gamma_on_n4():
    zero = [p for p in involutions(4, 0) if occurrences(p, "123") == 0]
    two = [p for p in involutions(4, 2) if occurrences(p, "123") == 0]
    assert len(zero) == len(two) == 3
    assert sorted(gamma(p) for p in zero) == sorted(two)


@pytest.mark.parametrize("n", range(2, 11, 2))
def test_gamma_is_a_bijection(n):
    zero = [p for p in involutions(n, 0) if occurrences(p, "123") == 0]
    two = {p for p in involutions(n, 2) if occurrences(p, "123") == 0}
    images = [gamma(p) for p in zero]
    assert len(set(images)) == len(zero)
    assert set(images) == two


@pytest.mark.parametrize("shape", [(2, 2), (3, 2), (3,), (2, 1, 1), (3, 2, 1), (4, 2), (3, 3)])
def test_enumerate_syt_counts_against_fillings(shape):
    tableaux = list(enumerate_syt(shape))
    assert len(tableaux) == len(set(tableaux)) == syt_count_by_fillings(shape)


@pytest.mark.parametrize("n", range(13))
def test_two_row_counts(n):
    for i in range(n // 2 + 1):
        expected = comb(n, i) - (comb(n, i - 1) if i else 0)
        assert sum(1 for _ in enumerate_syt((n - i, i))) == expected


def test_enumerate_syt_small_cases():
    assert len(list(enumerate_syt((2, 2)))) == 2
    assert list(enumerate_syt((4,))) == [SYT([[1, 2, 3, 4]])]
    with pytest.raises(ValueError):
        list(enumerate_syt((1, 2)))


def test_text_forms():
    t = SYT.parse("1 3\n2 4\n5\n6")
    assert t.columns == ((1, 2, 5, 6), (3, 4))
    assert str(t) == "1 3\n2 4\n5\n6"
    assert SYT.parse("1 3 / 2 4") == SYT([[1, 3], [2, 4]])
    assert t.column_str() == "1 3\n2 4\n5\n6"
