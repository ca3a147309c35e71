"""Hierarchical connectivity structure over the segment tree of versions.

Each node ``P`` stores ``|V(S_P)|`` (some connected components of the
intersection graph ``G_P``, numbered ``0..k-1``) and two tables mapping those
components to the children's components, ``-1`` meaning "not represented
below". A component untouched by updates inside a child interval is dropped
there, so a lookup may stop above the leaf.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .intervals import ElemInterval, node_index, node_interval
from .timeline import Lifespans, Timeline

NONE = -1


class CompId(NamedTuple):
    """Name of a component in a single version: an ``S_P`` vertex and the heap index of ``P``."""

    vertex: int
    node: int


@dataclass(frozen=True)
class ConnNode:
    interval: ElemInterval
    vertex_count: int
    larrow: Optional[list]
    rarrow: Optional[list]


@dataclass(eq=False)
class ConnTree:
    n: int
    t: int
    sizes: list
    larrow: list
    rarrow: list
    root_map: list
    timeline: Timeline
    lifespans: Lifespans

    def node(self, idx: int) -> ConnNode:
        return ConnNode(node_interval(idx, self.t), self.sizes[idx], self.larrow[idx], self.rarrow[idx])

    def descend(self, w: int, idx: int, c: int) -> CompId:
        lo, hi = node_interval(idx, self.t)
        la, ra = self.larrow, self.rarrow
        while lo < hi:
            mid = (lo + hi) >> 1
            if c <= mid:
                nxt = la[idx][w]
                if nxt < 0:
                    break
                idx, hi = 2 * idx, mid
            else:
                nxt = ra[idx][w]
                if nxt < 0:
                    break
                idx, lo = 2 * idx + 1, mid + 1
            w = nxt
        return CompId(w, idx)

    def represent(self, v: int, target: int) -> tuple[int, int]:
        """Walk from the root towards node ``target``; return ``(s, P)`` at the last node representing ``v``."""
        w, idx = self.root_map[v], 1
        path = target.bit_length() - 1
        for shift in range(path - 1, -1, -1):
            arrow = self.rarrow if (target >> shift) & 1 else self.larrow
            nxt = arrow[idx][w]
            if nxt < 0:
                break
            w, idx = nxt, 2 * idx + ((target >> shift) & 1)
        return w, idx

    def total_size(self) -> int:
        return sum(self.sizes)


def build_conn_tree(tl: Timeline, ls: Lifespans) -> ConnTree:
    n, t = tl.n, tl.t
    sizes = [0] * (2 * t)
    larrow: list = [None] * (2 * t)
    rarrow: list = [None] * (2 * t)
    root_map = [NONE] * (n + 1)
    # rep[v]: vertex of S_ipar(P) representing v while visiting P; sentinel numbers v as v - 1
    rep = [v - 1 for v in range(n + 1)]
    edge_sets = ls.edge_sets
    step_edge = ls.step_edge
    everyone = range(1, n + 1)

    def visit(idx: int, lo: int, hi: int, kp: int) -> None:
        E = edge_sets.get(idx, ())
        if hi - lo + 1 < n:
            touched = set()
            for u, v in E:
                touched.add(u)
                touched.add(v)
            for i in range(lo, hi):
                e = step_edge[i]
                if e is not None:
                    touched.add(e[0])
                    touched.add(e[1])
            marked = sorted({rep[u] for u in touched})
            reduce_map: Optional[list] = [NONE] * kp
            for j, s in enumerate(marked):
                reduce_map[s] = j
            k1 = len(marked)
            U = touched
            mem = [(u, rep[u]) for u in U]
            for u in U:
                rep[u] = reduce_map[rep[u]]
        else:
            U = everyone
            reduce_map = None
            k1 = kp
            mem = None
            saved = rep[:]

        if E:
            uf = list(range(k1))
            for u, v in E:
                a, b = rep[u], rep[v]
                while uf[a] != a:
                    uf[a] = uf[uf[a]]
                    a = uf[a]
                while uf[b] != b:
                    uf[b] = uf[uf[b]]
                    b = uf[b]
                if a != b:
                    if a < b:
                        uf[b] = a
                    else:
                        uf[a] = b
            label = [NONE] * k1
            contract_map = [0] * k1
            k = 0
            for s in range(k1):
                r = s
                while uf[r] != r:
                    r = uf[r]
                if label[r] < 0:
                    label[r] = k
                    k += 1
                contract_map[s] = label[r]
            for u in U:
                rep[u] = contract_map[rep[u]]
        else:
            contract_map = None
            k = k1

        if reduce_map is None:
            arrow = list(contract_map) if contract_map is not None else list(range(kp))
        elif contract_map is None:
            arrow = reduce_map
        else:
            arrow = [contract_map[m] if m >= 0 else NONE for m in reduce_map]
        if idx == 1:
            root_map[1:] = arrow
        elif idx & 1:
            rarrow[idx >> 1] = arrow
        else:
            larrow[idx >> 1] = arrow
        sizes[idx] = k

        if lo < hi:
            if k == 0:
                larrow[idx] = []
                rarrow[idx] = []
            else:
                mid = (lo + hi) >> 1
                visit(2 * idx, lo, mid, k)
                visit(2 * idx + 1, mid + 1, hi, k)

        if mem is not None:
            for u, r in mem:
                rep[u] = r
        else:
            rep[:] = saved

    visit(1, 1, t, n)
    return ConnTree(n, t, sizes, larrow, rarrow, root_map, tl, ls)


def comp_id(tree: ConnTree, w: int, ab: ElemInterval, c: int) -> CompId:
    idx = node_index(ab, tree.t)
    if not (ab[0] <= c <= ab[1]):
        raise ValueError(f"version {c} outside {tuple(ab)}")
    if not (0 <= w < tree.sizes[idx]):
        raise ValueError(f"vertex {w} is not a vertex of S_{tuple(ab)}")
    return tree.descend(w, idx, c)


@dataclass(eq=False)
class ShortcutTable:
    """Per vertex and per block of ``2**D`` versions, where the root descent stops or enters the block."""

    D: int
    blocks: int
    vertex: list
    node: list


def shortcut_level(n: int) -> int:
    D = 0
    while (1 << D) < n:
        D += 1
    return D


def build_shortcuts(tree: ConnTree) -> ShortcutTable:
    n, t = tree.n, tree.t
    D = shortcut_level(n)
    nb = t >> D
    top = nb.bit_length() - 1
    la, ra = tree.larrow, tree.rarrow
    vertex = [[NONE] * nb for _ in range(n + 1)]
    node = [[0] * nb for _ in range(n + 1)]
    for v in range(1, n + 1):
        sv, nv = vertex[v], node[v]
        stack = [(1, tree.root_map[v])]
        while stack:
            idx, s = stack.pop()
            if idx >= nb:
                sv[idx - nb] = s
                nv[idx - nb] = idx
                continue
            for child, arrow in ((2 * idx, la), (2 * idx + 1, ra)):
                nxt = arrow[idx][s]
                if nxt >= 0:
                    stack.append((child, nxt))
                    continue
                span = top - (child.bit_length() - 1)
                first = (child << span) - nb
                for b in range(first, first + (1 << span)):
                    sv[b] = s
                    nv[b] = idx
    return ShortcutTable(D, nb, vertex, node)


def component_of(tree: ConnTree, scut: ShortcutTable, v: int, c: int) -> CompId:
    if not (1 <= v <= tree.n):
        raise ValueError(f"vertex {v} outside 1..{tree.n}")
    if not (1 <= c <= tree.t):
        raise ValueError(f"version {c} outside 1..{tree.t}")
    k = (c - 1) >> scut.D
    s, idx = scut.vertex[v][k], scut.node[v][k]
    if idx < scut.blocks:
        return CompId(s, idx)
    return tree.descend(s, idx, c)
