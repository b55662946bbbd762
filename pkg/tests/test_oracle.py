"""Tests for the offline reference implementations."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dagorder import (
    EdgeSet,
    brute_reachable,
    first_violation,
    positions_of,
    topo_sort,
    validate_order,
)
from dagorder.oracle import kahn_order


def test_topo_sort_smallest_id_first():
    # both 0 and 2 are sources; 0 wins, then 2 only after 1 unlocks nothing
    es = EdgeSet(4, [(0, 1), (2, 3), (1, 3)])
    assert topo_sort(es) == [0, 1, 2, 3]


def test_topo_sort_empty_graph():
    assert topo_sort(EdgeSet(3, [])) == [0, 1, 2]


def test_topo_sort_detects_cycle():
    es = EdgeSet(3, [(0, 1), (1, 2), (2, 0)])
    assert topo_sort(es) is None


def test_kahn_order_extra_edge_virtual():
    # extra edge not present in adjacency changes the result the same way
    out = [[1], [], []]
    assert kahn_order(3, out, extra=(2, 1)) == [0, 2, 1]
    assert kahn_order(3, out, extra=(1, 0)) is None  # closes 0->1->0


def test_validate_order():
    es = EdgeSet(3, [(0, 1), (1, 2)])
    assert validate_order([0, 1, 2], es)
    assert not validate_order([1, 0, 2], es)


def test_positions_of_rejects_non_permutation():
    with pytest.raises(ValueError):
        positions_of([0, 0, 1])


def test_edge_set_range_check_and_dedup():
    with pytest.raises(ValueError):
        EdgeSet(2, [(0, 2)])
    es = EdgeSet(3, [(0, 1), (0, 1), (1, 2)])
    assert es.edges == [(0, 1), (1, 2)]


def test_brute_reachable():
    es = EdgeSet(4, [(0, 1), (1, 2)])
    assert brute_reachable(es, 0, 2)
    assert not brute_reachable(es, 2, 0)
    assert brute_reachable(es, 3, 3)  # empty path


def test_first_violation():
    pos = np.array([2, 1, 3], dtype=np.int64)  # node 1 before node 0
    us = np.array([0, 1], dtype=np.int64)
    vs = np.array([1, 2], dtype=np.int64)
    assert first_violation(pos, us, vs) == 0
    pos = np.array([1, 2, 3], dtype=np.int64)
    assert first_violation(pos, us, vs) == -1
    assert first_violation(pos, us[:0], vs[:0]) == -1


@st.composite
def _random_dag(draw):
    n = draw(st.integers(1, 12))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v))
    return EdgeSet(n, edges)


@given(_random_dag())
def test_topo_sort_output_validates(es):
    order = topo_sort(es)
    assert order is not None
    assert validate_order(order, es)
    assert sorted(order) == list(range(es.n))


@given(_random_dag(), st.data())
def test_reachability_agrees_with_edge_closure(es, data):
    if es.n < 2:
        return
    u = data.draw(st.integers(0, es.n - 1))
    v = data.draw(st.integers(0, es.n - 1))
    # independent check: Floyd-Warshall closure
    reach = [[False] * es.n for _ in range(es.n)]
    for i in range(es.n):
        reach[i][i] = True
    for a, b in es.edges:
        reach[a][b] = True
    for k in range(es.n):
        for i in range(es.n):
            if reach[i][k]:
                row = reach[i]
                for j in range(es.n):
                    row[j] = row[j] or reach[k][j]
    assert brute_reachable(es, u, v) == reach[u][v]
