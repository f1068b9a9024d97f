from hypothesis import given, strategies as st
import pytest

from vactab.errors import CellOutsideShape
from vactab.partitions import (
    addable_cells,
    b_stat,
    cells,
    conjugate,
    hook_length,
    hook_lengths,
    lambda_set,
    make_partition,
    partitions_of,
    partitions_up_to,
    removable_cells,
    strip_first_part,
    syt_count,
    syt_count_q,
)
from vactab.tableaux import standard_tableaux

partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3, 1)) == (2, 1, 1)


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam


def test_strip_first_part():
    assert strip_first_part((5, 2, 1)) == (2, 1)
    assert strip_first_part((4,)) == ()
    assert strip_first_part(()) == ()


def test_corner_cells():
    assert addable_cells(()) == [(1, 1)]
    assert removable_cells(()) == []
    assert removable_cells((2, 1)) == [(1, 2), (2, 1)]
    assert addable_cells((2, 2)) == [(1, 3), (3, 1)]


def test_make_partition_drops_zeros_and_rejects_increasing():
    assert make_partition([2, 1, 0]) == (2, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])


def test_hook_length():
    assert hook_length((2, 1), (1, 1)) == 3
    assert hook_length((1,), (1, 1)) == 1
    assert hook_length((2, 1), (1, 2)) == 1
    with pytest.raises(CellOutsideShape):
        hook_length((2, 1), (2, 2))


@given(partitions)
def test_hooks_decrease_along_rows(lam):
    for row in hook_lengths(lam):
        assert all(a > b for a, b in zip(row, row[1:]))
    assert sum(1 for _ in cells(lam)) == sum(lam)


def test_b_stat():
    assert b_stat(()) == 0
    assert b_stat((2, 1)) == 1
    assert b_stat((1, 1, 1)) == 3


@given(partitions)
def test_b_stat_via_columns(lam):
    assert b_stat(lam) == sum(c * (c - 1) // 2 for c in conjugate(lam))


def test_syt_count_examples():
    assert syt_count(()) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((2, 2)) == 2


@pytest.mark.parametrize("n", range(9))
def test_syt_count_matches_enumeration(n):
    for lam in partitions_of(n):
        assert syt_count(lam) == sum(1 for _ in standard_tableaux(lam))


def test_syt_count_q_examples():
    assert syt_count_q((2,)) == 1
    assert syt_count_q((1, 1)).coeffs == (0, 1)
    assert syt_count_q(()) == 1


@pytest.mark.parametrize("n", range(7))
def test_syt_count_q_at_one(n):
    for lam in partitions_of(n):
        f = syt_count_q(lam)
        assert f(1) == syt_count(lam)
        assert f.nonnegative()


def test_lambda_set():
    assert lambda_set(2, 1) == [(2,), (1, 1)]
    assert lambda_set(6, 3) == [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (3, 1, 1, 1)]
    assert lambda_set(3, 0) == [(3,)]


def test_partitions_up_to():
    assert partitions_up_to(0) == [()]
    assert partitions_up_to(2) == [(), (1,), (2,), (1, 1)]
    assert len(partitions_up_to(3)) == 7


@pytest.mark.parametrize("k", range(5))
def test_lambda_set_strips_to_small_partitions(k):
    n = 2 * k + 1
    assert sorted(strip_first_part(lam) for lam in lambda_set(n, k)) == sorted(partitions_up_to(k))
