import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphtimeline.conn_tree import build_conn_tree, build_shortcuts
from graphtimeline.fingerprints import (
    BOTTOM,
    build_conn_symbol_word,
    build_symbol_word,
    compute_conn_fingerprints,
    compute_twoecc_fingerprints,
    dense_relabel,
)
from graphtimeline.intervals import ElemInterval, node_index, node_interval
from graphtimeline.oracle import Oracle, gen_timeline
from graphtimeline.query import build_phi
from graphtimeline.subword import SubwordEq, subword_eq, subword_eq_build
from graphtimeline.timeline import compute_lifespans
from graphtimeline.twoecc_tree import PATH, SIMPLE, build_twoecc_tree

from .helpers import alternating_cycle_timeline


def histories(tree, idx):
    lo, hi = node_interval(idx, tree.t)
    return [tuple(tree.descend(s, idx, c) for c in range(lo, hi + 1)) for s in range(tree.sizes[idx])]


def test_dense_relabel():
    assert dense_relabel([2, 0, 2, 1], [1, 3, 1, 0], 3, 4) == [3, 1, 3, 2]
    assert dense_relabel([], [], 1, 1) == []


def test_tl1_node_34(tl1, ls1):
    tree = build_conn_tree(tl1, ls1)
    fp = compute_conn_fingerprints(tree)
    idx = node_index(ElemInterval(3, 4), 4)
    s1, _ = tree.represent(1, idx)
    s2, _ = tree.represent(2, idx)
    s3, _ = tree.represent(3, idx)
    assert fp[idx, s1] == fp[idx, s3]
    assert fp[idx, s2] != fp[idx, s1]
    for leaf in range(4, 8):
        H = fp.values[leaf]
        assert len(set(H)) == len(H)


def _walk(tree, v, target):
    # last (vertex, node) representing v on the root path to target
    w, idx = tree.root_map[v], 1
    for shift in range(target.bit_length() - 2, -1, -1):
        bit = (target >> shift) & 1
        nxt = (tree.rarrow if bit else tree.larrow)[idx][w]
        if nxt < 0:
            break
        w, idx = nxt, 2 * idx + bit
    return w, idx


def test_tl2_triangle_node(tl2, ls2):
    tree = build_twoecc_tree(tl2, ls2)
    fp = compute_twoecc_fingerprints(tree)
    # the triangle is intact in version 3
    leaf = node_index(ElemInterval(3, 3), 4)
    s1, q1 = _walk(tree, 1, leaf)
    s3, q3 = _walk(tree, 3, leaf)
    assert q1 == q3
    assert fp[q1, s1] != BOTTOM and fp[q1, s1] == fp[q3, s3]


def _check_conn(tree, fp):
    for idx in range(1, 2 * tree.t):
        k = tree.sizes[idx]
        if not k:
            continue
        hist = histories(tree, idx)
        H = fp.values[idx]
        assert all(1 <= h <= k for h in H)
        for s1 in range(k):
            for s2 in range(s1 + 1, k):
                assert (H[s1] == H[s2]) == (hist[s1] == hist[s2])


def _check_twoecc(tree, fp, oracle):
    for idx in range(1, 2 * tree.t):
        k = tree.sizes[idx]
        if not k:
            continue
        H = fp.values[idx]
        hist = histories(tree, idx)
        for s in range(k):
            if H[s] == BOTTOM:
                assert tree.kinds[idx][s] == PATH
            else:
                assert 1 <= H[s] <= k
        for s1 in range(k):
            for s2 in range(s1 + 1, k):
                if H[s1] != BOTTOM and H[s2] != BOTTOM:
                    assert (H[s1] == H[s2]) == (hist[s1] == hist[s2])
        # a path vertex is BOTTOM iff its original vertices come apart in some version
        members: dict = {}
        for v in range(1, tree.n + 1):
            w, at = _walk(tree, v, idx)
            if at == idx:
                members.setdefault(w, []).append(v)
        lo, hi = node_interval(idx, tree.t)
        for s in range(k):
            if tree.kinds[idx][s] != PATH:
                continue
            group = members[s]
            split = any(
                len({oracle.snapshots[x - 1].two_edge[v] for v in group}) > 1
                for x in range(lo, min(hi, len(oracle.snapshots)) + 1)
            )
            if hi <= len(oracle.snapshots):
                assert (H[s] == BOTTOM) == split


@given(st.integers(0, 10**6), st.integers(2, 20), st.integers(2, 64))
def test_fingerprint_contract(seed, n, t):
    tl = gen_timeline(seed, n, t, permanent_fraction=0.4, avg_degree=3.0)
    ls = compute_lifespans(tl)
    tree = build_conn_tree(tl, ls)
    _check_conn(tree, compute_conn_fingerprints(tree))
    tree2 = build_twoecc_tree(tl, ls)
    _check_twoecc(tree2, compute_twoecc_fingerprints(tree2), Oracle(tl))


def test_bottom_rules_on_leaves():
    # at leaves both arrows are absent: simple vertices get unique integers, path vertices BOTTOM
    tl = gen_timeline(4, 16, 64, permanent_fraction=0.6, avg_degree=2.0)
    tree = build_twoecc_tree(tl, compute_lifespans(tl))
    fp = compute_twoecc_fingerprints(tree)
    seen_path = False
    for leaf in range(tl.t, 2 * tl.t):
        H = fp.values[leaf]
        simple = [H[s] for s in range(tree.sizes[leaf]) if tree.kinds[leaf][s] == SIMPLE]
        assert len(set(simple)) == len(simple) and BOTTOM not in simple
        for s in range(tree.sizes[leaf]):
            if tree.kinds[leaf][s] == PATH:
                seen_path = True
                assert H[s] == BOTTOM
    assert seen_path


def test_symbol_word_one_block_per_vertex():
    tl = gen_timeline(1, 8, 8)
    tree = build_conn_tree(tl, compute_lifespans(tl))
    scut = build_shortcuts(tree)
    word = build_symbol_word(tree, compute_conn_fingerprints(tree), scut)
    assert word.blocks == 1 and len(word.word) == 8 + 7
    seps = [word.word[word.offsets[v] + 1] for v in range(1, 8)]
    assert len(set(seps)) == 7 and min(seps) > word.alphabet_size


def test_block_symbols_follow_connectivity():
    tl = gen_timeline(9, 8, 256, permanent_fraction=0.3, avg_degree=2.5)
    tree = build_conn_tree(tl, compute_lifespans(tl))
    scut = build_shortcuts(tree)
    fp = compute_conn_fingerprints(tree)
    word = build_conn_symbol_word(tree, fp, scut)
    oracle = Oracle(tl)
    bs = 1 << scut.D
    differs = 0
    for l in range(scut.blocks):
        a, b = l * bs + 1, (l + 1) * bs
        b = min(b, tl.t0)
        if a > b:
            continue
        for u in range(1, 9):
            for v in range(u + 1, 9):
                same = word.word[word.offsets[u] + l] == word.word[word.offsets[v] + l]
                if b == (l + 1) * bs:
                    assert same == oracle.forall(u, v, a, b)
        if l and b == (l + 1) * bs:
            differs += any(word.word[word.offsets[v] + l] != word.word[word.offsets[v] + l - 1] for v in range(1, 9))
    assert differs


def test_subword_small_examples():
    se = subword_eq_build([1, 2, 1, 2])
    assert subword_eq(se, 0, 2, 2)
    assert not subword_eq(se, 0, 1, 2)
    with pytest.raises(ValueError):
        subword_eq(se, 3, 0, 2)
    with pytest.raises(ValueError):
        subword_eq(se, -1, 0, 1)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=40))
def test_subword_exhaustive_property(word):
    se = SubwordEq(word)
    n = len(word)
    for i in range(n):
        for j in range(n):
            for length in range(0, n - max(i, j) + 1):
                assert se.eq(i, j, length) == (word[i : i + length] == word[j : j + length])


def test_subword_random_long():
    rng = random.Random(3)
    word = np.array([rng.randint(0, 3) for _ in range(10_000)])
    # periodic stretch so long matches actually occur
    word[5000:7000] = np.tile(word[5000:5100], 20)
    se = SubwordEq(word)
    for _ in range(5000):
        length = rng.choice([1, 5, 50, 500, 1500])
        i = rng.randint(0, len(word) - length)
        j = rng.randint(0, len(word) - length) if rng.random() < 0.5 else min(len(word) - length, i + 100 * rng.randint(1, 3))
        assert se.eq(i, j, length) == bool(np.array_equal(word[i : i + length], word[j : j + length]))


@given(st.integers(0, 10**6), st.integers(8, 24), st.integers(16, 96))
def test_vanishing_path_vertices(seed, n, t):
    tl = alternating_cycle_timeline(seed, n, t)
    tree = build_twoecc_tree(tl, compute_lifespans(tl))
    _check_twoecc(tree, compute_twoecc_fingerprints(tree), Oracle(tl))


def test_vanishing_path_vertex_gets_integer():
    tl = alternating_cycle_timeline(0, 16, 16)
    tree = build_twoecc_tree(tl, compute_lifespans(tl))
    fp = compute_twoecc_fingerprints(tree)
    vanishing = [
        (idx, s)
        for idx in range(1, tl.t)
        for s in range(tree.sizes[idx])
        if tree.kinds[idx][s] == PATH and fp.values[idx][s] != BOTTOM
    ]
    assert vanishing
