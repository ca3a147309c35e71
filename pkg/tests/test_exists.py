import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphtimeline.conn_tree import build_conn_tree
from graphtimeline.exists import ExistsStats, build_exists, exists, exists_level
from graphtimeline.oracle import Oracle, gen_timeline
from graphtimeline.timeline import compute_lifespans


def tree_of(tl):
    return build_conn_tree(tl, compute_lifespans(tl))


def test_exists_level():
    assert exists_level(16, 0.5) == 2
    assert exists_level(16, 0.0) == 0
    assert exists_level(1024, 0.3) == 3
    assert exists_level(1, 0.5) == 0


def test_alpha_zero_single_block(tl1):
    es = build_exists(tree_of(tl1), 0.0)
    assert es.D == 0 and len(es.blocks) == 1
    assert es.block_intervals() == [(1, 4)]


def test_block_layout():
    tl = gen_timeline(2, 4, 16)
    es = build_exists(tree_of(tl), 0.5)
    assert (es.D, es.block_length, es.clamped) == (2, 4, False)
    assert [tuple(p) for p in es.block_intervals()] == [(1, 4), (5, 8), (9, 12), (13, 16)]


def test_clamp_keeps_blocks_short():
    tl = gen_timeline(2, 2, 64)
    es = build_exists(tree_of(tl), 0.0)
    assert es.clamped and es.block_length <= 2
    free = build_exists(tree_of(tl), 0.0, clamp=False)
    assert not free.clamped and len(free.blocks) == 1


def test_tl1_examples(tl1):
    es = build_exists(tree_of(tl1), 0.5)
    assert exists(es, 1, 2, 1, 4)
    assert not exists(es, 1, 2, 2, 3)
    assert not exists(es, 2, 3, 1, 3)
    assert exists(es, 1, 2, 1, 3)


def test_tl1_block_oracle(tl1):
    tree = tree_of(tl1)
    blk = build_exists(tree, 0.0).blocks[0]
    s1, s2 = tree.root_map[1], tree.root_map[2]
    assert not blk.block_exists(s1, s2, 2, 3)
    assert blk.block_exists(s1, s2, 1, 3)
    assert blk.block_exists(s1, s1, 2, 2)
    with pytest.raises(ValueError):
        blk.block_exists(s1, s2, 0, 2)


def test_argument_errors(tl1):
    tree = tree_of(tl1)
    for alpha in (-0.1, 1.0, float("nan")):
        with pytest.raises(ValueError):
            build_exists(tree, alpha)
    es = build_exists(tree, 0.5)
    for args in [(0, 1, 1, 1), (1, 4, 1, 1), (1, 2, 2, 1), (1, 2, 1, 5)]:
        with pytest.raises(ValueError):
            exists(es, *args)


@given(st.integers(0, 10**6), st.integers(2, 30), st.integers(2, 256))
def test_matches_oracle_for_every_alpha(seed, n, t):
    rng = random.Random(seed)
    tl = gen_timeline(seed, n, t, permanent_fraction=rng.choice([0.0, 0.3, 0.7]), avg_degree=rng.choice([1.5, 3.0]))
    tree = tree_of(tl)
    oracle = Oracle(tl)
    structs = [build_exists(tree, a, clamp=c) for a in (0.0, 0.3, 0.5, 0.8) for c in (True, False)]
    for _ in range(100):
        u, v = rng.randint(1, n), rng.randint(1, n)
        x = rng.randint(1, tl.t0)
        y = rng.randint(x, tl.t0)
        want = oracle.exists(u, v, x, y)
        assert [exists(es, u, v, x, y) for es in structs] == [want] * len(structs)


@given(st.integers(0, 10**6), st.integers(2, 16), st.integers(2, 128))
def test_block_labels_match_per_version_components(seed, n, t):
    tl = gen_timeline(seed, n, t, permanent_fraction=0.3, avg_degree=2.5)
    tree = tree_of(tl)
    oracle = Oracle(tl)
    es = build_exists(tree, 0.5, clamp=False)
    for blk in es.blocks:
        a, b = blk.interval
        where = {}
        for v in range(1, n + 1):
            s, at = tree.represent(v, blk.node)
            if at == blk.node and s in blk.marked:
                where[v] = blk.marked[s]
        for c in range(a, min(b, tl.t0) + 1):
            comp = oracle.snapshots[c - 1].components
            row = blk.labels[c - a]
            for u, i in where.items():
                for v, j in where.items():
                    assert (row[i] == row[j]) == (comp[u] == comp[v])


def test_probe_count_bounded_by_blocks():
    tl = gen_timeline(7, 16, 1024, avg_degree=2.0)
    es = build_exists(tree_of(tl), 0.5, clamp=False)
    stats = ExistsStats()
    rng = random.Random(1)
    for _ in range(2000):
        x = rng.randint(1, tl.t0)
        y = rng.randint(x, tl.t0)
        before = stats.probes
        exists(es, rng.randint(1, 16), rng.randint(1, 16), x, y, stats)
        spanned = (y - 1) // es.block_length - (x - 1) // es.block_length + 1
        assert stats.probes - before <= spanned
    assert stats.queries == 2000 and stats.max_probes <= len(es.blocks)
