"""Brute-force reference answers, recomputed version by version.

Nothing here reuses the hierarchical structures: versions are replayed from
the raw update list, connectivity is a fresh union-find per version and
2-edge-connectivity comes from a low-link bridge search.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .timeline import Timeline


def replay(tl: Timeline) -> list[frozenset]:
    """``[E_1, ..., E_t]``; index 0 holds ``E_1``."""
    live = set(tl.initial_edges)
    out = [frozenset(live)]
    for op in tl.updates:
        if op is not None:
            (live.add if op[0] == "+" else live.discard)((op[1], op[2]))
        out.append(frozenset(live))
    return out


def component_labels(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n + 1)]


def find_bridges(n: int, edges: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    edge_list = list(edges)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for i, (u, v) in enumerate(edge_list):
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    timer = 1
    bridges = set()
    for root in range(1, n + 1):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for y, eid in it:
                if eid == via:
                    continue
                if disc[y]:
                    low[x] = min(low[x], disc[y])
                else:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, eid, iter(adj[y])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] > disc[p]:
                    bridges.add(edge_list[via])
    return bridges


def two_edge_labels(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    edges = list(edges)
    bridges = find_bridges(n, edges)
    return component_labels(n, (e for e in edges if e not in bridges))


@dataclass(frozen=True)
class VersionSnapshot:
    edges: frozenset
    components: tuple
    bridges: frozenset
    two_edge: tuple


class Oracle:
    """Per-version labelings of one timeline, for repeated brute-force queries."""

    def __init__(self, tl: Timeline):
        self.timeline = tl
        self.n = tl.n
        versions = replay(tl)
        self.snapshots = []
        for edges in versions:
            bridges = find_bridges(tl.n, edges)
            self.snapshots.append(
                VersionSnapshot(
                    edges=edges,
                    components=tuple(component_labels(tl.n, edges)),
                    bridges=frozenset(bridges),
                    two_edge=tuple(component_labels(tl.n, (e for e in edges if e not in bridges))),
                )
            )
        self._comp = np.array([s.components for s in self.snapshots], dtype=np.int32)
        self._twoecc = np.array([s.two_edge for s in self.snapshots], dtype=np.int32)

    def connected(self, u: int, v: int, i: int) -> bool:
        return self.snapshots[i - 1].components[u] == self.snapshots[i - 1].components[v]

    def two_edge_connected(self, u: int, v: int, i: int) -> bool:
        return self.snapshots[i - 1].two_edge[u] == self.snapshots[i - 1].two_edge[v]

    def forall(self, u: int, v: int, a: int, b: int) -> bool:
        return bool(np.all(self._comp[a - 1 : b, u] == self._comp[a - 1 : b, v]))

    def forexists(self, u: int, v: int, a: int, b: int) -> bool:
        return bool(np.all(self._twoecc[a - 1 : b, u] == self._twoecc[a - 1 : b, v]))

    def exists(self, u: int, v: int, a: int, b: int) -> bool:
        return bool(np.any(self._comp[a - 1 : b, u] == self._comp[a - 1 : b, v]))

    def answer(self, kind: str, u: int, v: int, a: int, b: int) -> bool:
        return {"FORALL": self.forall, "FOREXISTS": self.forexists, "EXISTS": self.exists}[kind](u, v, a, b)


def brute_connected(tl: Timeline, u: int, v: int, i: int) -> bool:
    lab = component_labels(tl.n, replay(tl)[i - 1])
    return lab[u] == lab[v]


def brute_two_edge_connected(tl: Timeline, u: int, v: int, i: int) -> bool:
    lab = two_edge_labels(tl.n, replay(tl)[i - 1])
    return lab[u] == lab[v]


def brute_forall(tl: Timeline, u: int, v: int, a: int, b: int) -> bool:
    versions = replay(tl)
    return all(component_labels(tl.n, versions[i])[u] == component_labels(tl.n, versions[i])[v] for i in range(a - 1, b))


def brute_forexists(tl: Timeline, u: int, v: int, a: int, b: int) -> bool:
    versions = replay(tl)
    for i in range(a - 1, b):
        lab = two_edge_labels(tl.n, versions[i])
        if lab[u] != lab[v]:
            return False
    return True


def brute_exists(tl: Timeline, u: int, v: int, a: int, b: int) -> bool:
    versions = replay(tl)
    for i in range(a - 1, b):
        lab = component_labels(tl.n, versions[i])
        if lab[u] == lab[v]:
            return True
    return False


def brute_triangles(g) -> list[tuple[int, int, int]]:
    """All triangles ``(u, v, w)``, ``u < v < w``, of a graph with ``n`` and ``edges``."""
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for u in range(1, g.n + 1):
        higher = sorted(w for w in adj[u] if w > u)
        for v, w in combinations(higher, 2):
            if w in adj[v]:
                out.append((u, v, w))
    return out


def gen_timeline(
    seed: int,
    n: int,
    t: int,
    permanent_fraction: float = 0.2,
    avg_degree: float = 2.0,
) -> Timeline:
    """Random valid timeline with ``t`` versions.

    About ``avg_degree * n / 2`` edges are alive at any time; the
    ``permanent_fraction`` share of them never changes. Every step toggles a
    random pair from a pool of temporary candidates.
    """
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if t > 1 and not pairs:
        raise ValueError("a timeline with updates needs at least two vertices")
    target = max(1, round(avg_degree * n / 2))
    rng.shuffle(pairs)
    n_perm = min(len(pairs) - (1 if t > 1 else 0), round(permanent_fraction * target))
    n_perm = max(0, n_perm)
    permanent = pairs[:n_perm]
    pool = pairs[n_perm : n_perm + max(1, 2 * (target - n_perm))]
    live = {e for e in pool if rng.random() < 0.5}
    init = set(permanent) | live
    updates = []
    for _ in range(t - 1):
        e = rng.choice(pool)
        if e in live:
            live.remove(e)
            updates.append(("-", e[0], e[1]))
        else:
            live.add(e)
            updates.append(("+", e[0], e[1]))
    return Timeline.build(n, init, updates)
