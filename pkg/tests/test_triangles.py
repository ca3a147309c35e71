import math
import random

import pytest

from graphtimeline.conn_tree import build_conn_tree
from graphtimeline.exists import build_exists
from graphtimeline.oracle import Oracle, brute_triangles
from graphtimeline.timeline import TimelineError, compute_lifespans
from graphtimeline.triangles import StaticGraph, TriangleStats, graph_to_timeline, parse_graph, report_triangles


def structure(tt, alpha=0.5):
    tl = tt.timeline
    return build_exists(build_conn_tree(tl, compute_lifespans(tl)), alpha)


def run(g, k=None, stats=None):
    tt = graph_to_timeline(g)
    return report_triangles(tt, structure(tt), k or max(1, len(g.edges) ** 2), stats)


def random_graph(rng, n, p):
    return StaticGraph.build(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


K3 = StaticGraph.build(3, [(1, 2), (1, 3), (2, 3)])
C4 = StaticGraph.build(4, [(1, 2), (2, 3), (3, 4), (1, 4)])


def test_k3_timeline_shape():
    tt = graph_to_timeline(K3)
    assert tt.timeline.t0 == 4 * 3 + 1
    assert [tt.block_end[x] - tt.block_start[x] + 1 for x in (1, 2, 3)] == [4, 4, 4]


def test_empty_graph():
    tt = graph_to_timeline(StaticGraph.build(3, []))
    assert tt.timeline.t0 == 1
    assert all(tt.block_start[x] > tt.block_end[x] for x in (1, 2, 3))
    assert report_triangles(tt, structure(tt), 5) == []


def test_single_edge_blocks():
    tt = graph_to_timeline(StaticGraph.build(3, [(1, 2)]))
    sizes = [tt.block_end[x] - tt.block_start[x] + 1 for x in (1, 2, 3)]
    assert sizes == [2, 2, 0]
    oracle = Oracle(tt.timeline)
    assert oracle.connected(1, 2, tt.block_start[1])
    assert not oracle.connected(1, 2, tt.block_end[1])


def test_block_middles_hold_stars():
    rng = random.Random(5)
    g = random_graph(rng, 12, 0.4)
    tt = graph_to_timeline(g)
    oracle = Oracle(tt.timeline)
    adj = g.adjacency()
    for x in range(1, g.n + 1):
        a, b = tt.block_start[x], tt.block_end[x]
        if a > b:
            continue
        mid = a + len(adj[x]) - 1
        assert oracle.snapshots[mid - 1].edges == frozenset((min(x, y), max(x, y)) for y in adj[x])
        assert not oracle.snapshots[b - 1].edges
    assert tt.timeline.t0 == 4 * len(g.edges) + 1


def test_small_examples():
    assert run(K3, 1) == [(1, 2, 3)]
    assert run(C4, 10) == []


@pytest.mark.parametrize("seed", range(12))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(3, 30), rng.choice([0.1, 0.3, 0.5]))
    want = brute_triangles(g)
    got = run(g, max(1, len(want)))
    assert sorted(got) == want and len(got) == len(set(got))


def test_early_stop():
    rng = random.Random(2)
    g = random_graph(rng, 20, 0.5)
    assert len(brute_triangles(g)) > 1
    got = run(g, 1)
    assert len(got) == 1 and got[0] in brute_triangles(g)


def test_calls_per_edge_are_logarithmic():
    rng = random.Random(8)
    for _ in range(5):
        g = random_graph(rng, 40, rng.choice([0.1, 0.3]))
        stats = TriangleStats()
        run(g, stats=stats)
        for e, calls in stats.calls.items():
            assert calls <= 4 * (stats.found[e] + 1) * math.log2(g.n)


def test_bad_inputs():
    tt = graph_to_timeline(K3)
    with pytest.raises(ValueError):
        report_triangles(tt, structure(tt), 0)
    with pytest.raises(TimelineError):
        StaticGraph.build(3, [(1, 2), (2, 1)])
    with pytest.raises(TimelineError):
        StaticGraph.build(3, [(1, 4)])
    with pytest.raises(TimelineError):
        StaticGraph.build(3, [(2, 2)])


def test_parse_graph():
    g = parse_graph("# k3\ngraph 3 3\n1 2\n2 3\n1 3\n")
    assert g == K3
    for bad in ["", "graph 3\n", "graph 3 2\n1 2\n", "graph 3 1\n1 x\n", "graph 3 1\n1 2 3\n"]:
        with pytest.raises(TimelineError):
            parse_graph(bad)
