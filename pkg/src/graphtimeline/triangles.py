"""Listing triangles of a static graph with EXISTS queries.

Each vertex ``x`` gets a block of versions in which its incident edges are
added one by one and then removed again, so two vertices ``u, v < x`` are
connected somewhere inside the block of ``x`` exactly when ``u x v`` is a
path. A binary search over block ranges then finds every ``x`` closing a
triangle with a given edge ``(u, v)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exists import ExistsStructure, exists
from .timeline import Edge, Timeline, TimelineParseError, TimelineValidationError, canonical_edge


@dataclass(frozen=True)
class StaticGraph:
    n: int
    edges: tuple

    @classmethod
    def build(cls, n: int, edges) -> "StaticGraph":
        if n < 1:
            raise TimelineValidationError(f"graph needs at least one vertex, got n={n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise TimelineValidationError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            e = canonical_edge(u, v)
            if e in seen:
                raise TimelineValidationError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj


def parse_graph(text: str) -> StaticGraph:
    lines = [(i, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, w) for i, w in lines if w]
    if not lines or lines[0][1][0] != "graph" or len(lines[0][1]) != 3:
        raise TimelineParseError(lines[0][0] if lines else 1, "expected header 'graph <n> <m>'")
    try:
        n, m = int(lines[0][1][1]), int(lines[0][1][2])
        edges = []
        for i, w in lines[1:]:
            if len(w) != 2:
                raise TimelineParseError(i, "expected '<u> <v>'")
            edges.append((int(w[0]), int(w[1])))
    except ValueError as exc:
        raise TimelineParseError(lines[0][0], str(exc)) from None
    if len(edges) != m:
        raise TimelineParseError(lines[-1][0], f"header announces {m} edges, found {len(edges)}")
    return StaticGraph.build(n, edges)


@dataclass(eq=False)
class TriangleTimeline:
    """``block_start[i]..block_end[i]`` are the versions of vertex ``i``'s block (1-based; empty when ``deg = 0``)."""

    timeline: Timeline
    graph: StaticGraph
    block_start: list
    block_end: list


def graph_to_timeline(g: StaticGraph) -> TriangleTimeline:
    adj = g.adjacency()
    updates = []
    start = [0] * (g.n + 1)
    end = [0] * (g.n + 1)
    version = 1
    for x in range(1, g.n + 1):
        start[x] = version + 1
        for y in adj[x]:
            updates.append(("+", x, y))
        for y in adj[x]:
            updates.append(("-", x, y))
        version += 2 * len(adj[x])
        end[x] = version
    return TriangleTimeline(Timeline.build(g.n, (), updates), g, start, end)


@dataclass
class TriangleStats:
    """EXISTS calls and triangles found, per edge ``(u, v)``."""

    calls: dict = field(default_factory=dict)
    found: dict = field(default_factory=dict)


def report_triangles(
    tt: TriangleTimeline, es: ExistsStructure, k: int, stats: Optional[TriangleStats] = None
) -> list[tuple[int, int, int]]:
    if k <= 0:
        raise ValueError(f"max count must be positive, got {k}")
    n = tt.graph.n
    a, b = tt.block_start, tt.block_end
    out: list[tuple[int, int, int]] = []
    calls = 0

    def internal(u: int, v: int, x: int, y: int) -> bool:
        # returns False once k triangles are out
        nonlocal calls
        if x > y:
            return True
        lo, hi = a[x], b[y]
        if lo > hi:
            return True
        calls += 1
        if not exists(es, u, v, lo, hi):
            return True
        if x == y:
            out.append((u, v, x))
            return len(out) < k
        mid = (x + y) >> 1
        return internal(u, v, x, mid) and internal(u, v, mid + 1, y)

    for u, v in tt.graph.edges:
        calls = 0
        before = len(out)
        go_on = internal(u, v, v + 1, n)
        if stats is not None:
            stats.calls[(u, v)] = calls
            stats.found[(u, v)] = len(out) - before
        if not go_on:
            break
    return out
