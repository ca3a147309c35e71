import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphtimeline.intervals import (
    SENTINEL,
    ElemInterval,
    interval_nav,
    node_index,
    node_interval,
    partition_interval,
    partition_nodes,
)


def test_partition_examples():
    assert partition_interval(2, 7, 8) == [(2, 2), (3, 4), (5, 6), (7, 7)]
    assert partition_interval(1, 8, 8) == [(1, 8)]
    # siblings [1,2] and [3,4] merge into their parent
    assert partition_interval(1, 4, 8) == [(1, 4)]


def test_partition_rejects_bad_ranges():
    for c, d in [(0, 3), (3, 2), (1, 9)]:
        with pytest.raises(ValueError):
            partition_interval(c, d, 8)


def test_navigation():
    nav = interval_nav(ElemInterval(1, 8), 8)
    assert nav.lson == (1, 4) and nav.rson == (5, 8)
    assert nav.ipar == SENTINEL and nav.ipar.hi == math.inf
    assert interval_nav(ElemInterval(5, 6), 8).ipar == (5, 8)
    leaf = interval_nav(ElemInterval(3, 3), 8)
    assert leaf.is_leaf and leaf.lson is None and leaf.rson is None


def test_node_index_rejects_non_elementary():
    with pytest.raises(ValueError):
        node_index(ElemInterval(2, 3), 8)


def _check_partition(c, d, t):
    nodes = partition_nodes(c, d, t)
    assert len(nodes) <= 2 * math.log2(d - c + 1) + 2
    covered = []
    for idx in nodes:
        lo, hi = node_interval(idx, t)
        covered.extend(range(lo, hi + 1))
    assert covered == list(range(c, d + 1))
    s = set(nodes)
    assert all((idx ^ 1) not in s for idx in nodes if idx > 1)


@pytest.mark.parametrize("t", [1, 2, 8, 64])
def test_partition_exhaustive_small(t):
    for c in range(1, t + 1):
        for d in range(c, t + 1):
            _check_partition(c, d, t)


@given(st.integers(0, 10).flatmap(lambda b: st.tuples(st.just(1 << b), st.integers(1, 1 << b), st.integers(1, 1 << b))))
def test_partition_property(args):
    t, c, d = args
    c, d = min(c, d), max(c, d)
    _check_partition(c, d, t)


@given(st.integers(0, 8).flatmap(lambda b: st.tuples(st.just(1 << b), st.integers(1, (2 << b) - 1), st.integers(1, (2 << b) - 1))))
def test_elementary_intervals_nest_or_are_disjoint(args):
    t, i, j = args
    a, b = node_interval(i, t), node_interval(j, t)
    if a.hi < b.lo or b.hi < a.lo:
        return
    # overlapping: one must be an ancestor of the other in the heap
    lo, hi = (i, j) if i <= j else (j, i)
    while hi > lo:
        hi >>= 1
    assert hi == lo


def test_roundtrip_index_interval():
    t = 16
    for idx in range(1, 2 * t):
        assert node_index(node_interval(idx, t), t) == idx
