"""Tests for the two-pass integer key sort."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dagorder.radix import radix_sort


def test_sorts_small_example():
    assert radix_sort([5, 1, 4, 2, 3], 5) == [1, 2, 3, 4, 5]


def test_empty_and_singleton():
    assert radix_sort([], 10) == []
    assert radix_sort([7], 10) == [7]


def test_duplicates_preserved():
    assert radix_sort([3, 1, 3, 2, 1], 3) == [1, 1, 2, 3, 3]


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        radix_sort([0], 5)
    with pytest.raises(ValueError):
        radix_sort([6], 5)
    with pytest.raises(ValueError):
        radix_sort([1], 0)


@given(st.integers(1, 500), st.data())
def test_matches_sorted(n, data):
    values = data.draw(st.lists(st.integers(1, n), max_size=200))
    assert radix_sort(values, n) == sorted(values)
