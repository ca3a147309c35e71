"""EXISTS queries with a preprocessing/query trade-off.

Versions are cut into ``2**D`` blocks, each an elementary interval of
``2**(B-D)`` versions. A query walks the top ``D`` levels of the connectivity
tree for both vertices at once and, for every block where both are still
represented by distinct vertices, asks that block's oracle. The oracle replays
the block's updates on the vertices of ``S_block`` they touch.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .conn_tree import ConnTree, shortcut_level
from .intervals import ElemInterval, node_interval
from .timeline import canonical_edge


@dataclass
class ExistsStats:
    queries: int = 0
    probes: int = 0
    max_probes: int = 0
    node_visits: int = 0


class BlockOracle:
    """Connectivity over time of the marked vertices of one block.

    ``labels[r, i]`` is a component label of marked vertex ``i`` in version
    ``a + r``; labels are only meaningful for equality within a row.
    """

    def __init__(self, tree: ConnTree, idx: int):
        tl, ls = tree.timeline, tree.lifespans
        self.node = idx
        self.interval = a, b = node_interval(idx, tree.t)
        touched = set()
        for i in range(a, b):
            e = ls.step_edge[i]
            if e is not None:
                touched.add(e)
        marked: dict[int, int] = {}

        def local(u: int) -> int:
            s, at = tree.represent(u, idx)
            assert at == idx, "update endpoint not represented at its block"
            return marked.setdefault(s, len(marked))

        ends = {e: (local(e[0]), local(e[1])) for e in sorted(touched)}
        self.marked = marked
        km = len(marked)
        length = b - a + 1
        dtype = np.int16 if km + length < np.iinfo(np.int16).max else np.int32
        self.labels = labels = np.empty((length, km), dtype=dtype)
        cur = np.arange(km, dtype=dtype)
        adj: list[dict[int, int]] = [{} for _ in range(km)]
        fresh = km

        def add(p: int, q: int) -> None:
            adj[p][q] = adj[p].get(q, 0) + 1
            adj[q][p] = adj[q].get(p, 0) + 1
            lp, lq = cur[p], cur[q]
            if lp != lq:
                cur[cur == lq] = lp

        def remove(p: int, q: int) -> None:
            nonlocal fresh
            for x, y in ((p, q), (q, p)):
                c = adj[x][y] - 1
                if c:
                    adj[x][y] = c
                else:
                    del adj[x][y]
            if q in adj[p]:
                return
            seen = {p}
            todo = [p]
            while todo:
                x = todo.pop()
                for y in adj[x]:
                    if y == q:
                        return
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            cur[list(seen)] = fresh
            fresh += 1

        for e, (p, q) in ends.items():
            if p != q and ls.alive(e, a):
                add(p, q)
        labels[0] = cur
        for i in range(a, b):
            op = tl.updates[i - 1]
            if op is not None:
                p, q = ends[canonical_edge(op[1], op[2])]
                if p != q:
                    (add if op[0] == "+" else remove)(p, q)
            labels[i - a + 1] = cur
        self._pairs: dict = {}

    def __len__(self) -> int:
        return len(self.marked)

    def pair_intervals(self, su: int, sv: int) -> tuple[list, list]:
        """Maximal runs of versions where marked ``su`` and ``sv`` are connected, as (starts, ends)."""
        i, j = self.marked[su], self.marked[sv]
        key = (i, j) if i < j else (j, i)
        hit = self._pairs.get(key)
        if hit is not None:
            return hit
        eq = np.empty(len(self.labels) + 2, dtype=np.int8)
        eq[0] = eq[-1] = 0
        eq[1:-1] = self.labels[:, i] == self.labels[:, j]
        edges = np.flatnonzero(np.diff(eq))
        a = self.interval[0]
        starts = (edges[0::2] + a).tolist()
        ends = (edges[1::2] + a - 1).tolist()
        self._pairs[key] = (starts, ends)
        return starts, ends

    def block_exists(self, su: int, sv: int, c: int, d: int) -> bool:
        a, b = self.interval
        if not (a <= c <= d <= b):
            raise ValueError(f"[{c}, {d}] outside block [{a}, {b}]")
        if su == sv:
            return True
        if su not in self.marked or sv not in self.marked:
            # an untouched component keeps to itself in every version of the block
            return False
        starts, ends = self.pair_intervals(su, sv)
        k = bisect_left(ends, c)
        return k < len(starts) and starts[k] <= d


def exists_level(t: int, alpha: float) -> int:
    """Largest ``D`` with ``2**D <= t**alpha``."""
    B = t.bit_length() - 1
    D = 0
    while D < B and (D + 1) <= alpha * B + 1e-9:
        D += 1
    return D


@dataclass(eq=False)
class ExistsStructure:
    tree: ConnTree
    alpha: float
    D: int
    block_length: int
    blocks: list = field(repr=False)
    clamped: bool = False

    def block_intervals(self) -> list[ElemInterval]:
        return [blk.interval for blk in self.blocks]


def build_exists(tree: ConnTree, alpha: float, clamp: bool = True) -> ExistsStructure:
    if not (0.0 <= alpha < 1.0) or math.isnan(alpha):
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    t = tree.t
    B = t.bit_length() - 1
    D = exists_level(t, alpha)
    clamped = False
    if clamp:
        # keep blocks no longer than the shortcut block (< 2n versions)
        Dn = shortcut_level(tree.n)
        if B - D > Dn:
            D, clamped = B - Dn, True
    first = 1 << D
    blocks = [BlockOracle(tree, idx) for idx in range(first, 2 * first)]
    return ExistsStructure(tree, alpha, D, t >> D, blocks, clamped)


def exists(
    es: ExistsStructure, u: int, v: int, x: int, y: int, stats: Optional[ExistsStats] = None
) -> bool:
    """True iff ``u`` and ``v`` are connected in at least one version ``x..y``."""
    tree = es.tree
    tl = tree.timeline
    if not (1 <= u <= tree.n and 1 <= v <= tree.n):
        raise ValueError(f"vertices ({u}, {v}) outside 1..{tree.n}")
    if not (1 <= x <= y <= tl.t0):
        raise ValueError(f"range [{x}, {y}] outside 1..{tl.t0}")
    if u == v:
        if stats is not None:
            stats.queries += 1
        return True
    la, ra = tree.larrow, tree.rarrow
    first = 1 << es.D
    blocks = es.blocks
    probes = visits = 0
    # explicit stack of (node, lo, hi, su, sv) with both vertices represented at node
    stack = [(1, 1, tree.t, tree.root_map[u], tree.root_map[v])]
    found = False
    while stack:
        idx, lo, hi, su, sv = stack.pop()
        visits += 1
        if su == sv:
            found = True
            break
        if idx >= first:
            probes += 1
            if blocks[idx - first].block_exists(su, sv, max(x, lo), min(y, hi)):
                found = True
                break
            continue
        mid = (lo + hi) >> 1
        # right child pushed first so blocks are probed left to right
        if y > mid:
            nu, nv = ra[idx][su], ra[idx][sv]
            if nu >= 0 and nv >= 0:
                stack.append((2 * idx + 1, mid + 1, hi, nu, nv))
        if x <= mid:
            nu, nv = la[idx][su], la[idx][sv]
            if nu >= 0 and nv >= 0:
                stack.append((2 * idx, lo, mid, nu, nv))
    if stats is not None:
        stats.queries += 1
        stats.probes += probes
        stats.max_probes = max(stats.max_probes, probes)
        stats.node_visits += visits
    return found
