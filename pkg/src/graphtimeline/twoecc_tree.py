"""2-edge-connectivity variant of the hierarchical structure.

At node ``P`` the graph ``S_P`` is a rooted forest. A *simple* vertex stands for
one 2-edge-connected component of ``G_P``; a *path* vertex stands for a chain
of them linked by single bridges, which in every version of ``P`` either stay
apart or all fuse together. Forest edges are bridges of ``G_P``.

Reduction (only for ``|P| < n``) marks the vertices hit by updates, their
branching ancestors and tree roots, drops unmarked subtrees and collapses runs
of unmarked degree-2 vertices into path vertices. Contraction then adds the
edges alive throughout ``P`` and merges every new 2-edge-connected component
into one simple vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .conn_tree import NONE, CompId
from .intervals import ElemInterval, node_index, node_interval
from .timeline import Lifespans, Timeline

SIMPLE = 0
PATH = 1


@dataclass(frozen=True)
class TwoEccNode:
    interval: ElemInterval
    kinds: list
    parents: list
    larrow: Optional[list]
    rarrow: Optional[list]
    ends: dict

    @property
    def vertex_count(self) -> int:
        return len(self.kinds)


@dataclass(eq=False)
class TwoEccTree:
    n: int
    t: int
    sizes: list
    kinds: list
    parents: list
    ends: list
    larrow: list
    rarrow: list
    root_map: list
    timeline: Timeline
    lifespans: Lifespans
    # idx -> (|E_P| + updates inside P, marked after phase 2, vertices after phase 4)
    reduction: dict

    def node(self, idx: int) -> TwoEccNode:
        return TwoEccNode(
            node_interval(idx, self.t),
            self.kinds[idx],
            self.parents[idx],
            self.larrow[idx],
            self.rarrow[idx],
            self.ends[idx],
        )

    def descend(self, w: int, idx: int, c: int) -> CompId:
        """Last simple representation on the way from ``(w, idx)`` to the leaf of ``c``.

        Falls back to the deepest representation when ``w`` is a path vertex
        that never turns simple on the way down.
        """
        lo, hi = node_interval(idx, self.t)
        la, ra, kinds = self.larrow, self.rarrow, self.kinds
        last = CompId(w, idx) if kinds[idx][w] == SIMPLE else None
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
            if kinds[idx][w] == SIMPLE:
                last = CompId(w, idx)
        return last if last is not None else CompId(w, idx)

    def total_size(self) -> int:
        return sum(self.sizes)


def _bfs_order(k: int, parent: list) -> tuple[list, list]:
    children: list[list[int]] = [[] for _ in range(k)]
    roots = []
    for s in range(k):
        p = parent[s]
        if p < 0:
            roots.append(s)
        else:
            children[p].append(s)
    order = roots[:]
    for s in order:
        order.extend(children[s])
    return order, children


def _reduce(kp: int, kind: list, parent: list, marked: list) -> tuple[list, int, list, list]:
    """Phases 2-4 on ``S_ipar``; ``marked`` holds the phase-1 marks and is extended in place."""
    order, children = _bfs_order(kp, parent)
    has = marked[:]
    for s in reversed(order):
        hits = 0
        for c in children[s]:
            if has[c]:
                hits += 1
        if hits:
            has[s] = True
            if hits >= 2:
                marked[s] = True
    for s in order:
        if parent[s] < 0 and has[s]:
            marked[s] = True

    new_id = [NONE] * kp
    run_len: list[int] = []
    run_head: list[int] = []
    new_parent: list[int] = []
    k = 0
    for s in order:
        if not has[s]:
            continue
        p = parent[s]
        if marked[s]:
            new_id[s] = k
            run_len.append(0)
            run_head.append(s)
            new_parent.append(new_id[p] if p >= 0 else NONE)
            k += 1
        elif marked[p]:
            new_id[s] = k
            run_len.append(1)
            run_head.append(s)
            new_parent.append(new_id[p])
            k += 1
        else:
            new_id[s] = new_id[p]
            run_len[new_id[p]] += 1
    new_kind = [
        kind[run_head[j]] if run_len[j] <= 1 else PATH
        for j in range(k)
    ]
    return new_id, k, new_kind, new_parent


def _contract(k1: int, kind: list, parent: list, extra: list) -> tuple[list, int, list, list]:
    """Merge 2-edge-connected components of forest ``parent`` plus edges ``extra``."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(k1)]
    ends: list[tuple[int, int]] = []
    for s in range(k1):
        p = parent[s]
        if p >= 0:
            adj[s].append((p, len(ends)))
            adj[p].append((s, len(ends)))
            ends.append((s, p))
    for a, b in extra:
        adj[a].append((b, len(ends)))
        adj[b].append((a, len(ends)))
        ends.append((a, b))

    disc = [0] * k1
    low = [0] * k1
    is_bridge = [False] * len(ends)
    timer = 1
    for root in range(k1):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, 0)]
        while stack:
            x, via, pos = stack[-1]
            nbrs = adj[x]
            while pos < len(nbrs):
                y, eid = nbrs[pos]
                pos += 1
                if eid == via:
                    continue
                if disc[y]:
                    if disc[y] < low[x]:
                        low[x] = disc[y]
                else:
                    stack[-1] = (x, via, pos)
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, eid, 0))
                    break
            else:
                stack.pop()
                if stack:
                    px = stack[-1][0]
                    if low[x] < low[px]:
                        low[px] = low[x]
                    if low[x] > disc[px]:
                        is_bridge[via] = True

    comp = [NONE] * k1
    comp_size: list[int] = []
    k = 0
    for s in range(k1):
        if comp[s] >= 0:
            continue
        comp[s] = k
        size = 1
        todo = [s]
        while todo:
            x = todo.pop()
            for y, eid in adj[x]:
                if not is_bridge[eid] and comp[y] < 0:
                    comp[y] = k
                    size += 1
                    todo.append(y)
        comp_size.append(size)
        k += 1
    new_kind = [SIMPLE] * k
    for s in range(k1):
        if comp_size[comp[s]] == 1:
            new_kind[comp[s]] = kind[s]

    tree_adj: list[list[int]] = [[] for _ in range(k)]
    for eid, (a, b) in enumerate(ends):
        if is_bridge[eid]:
            ca, cb = comp[a], comp[b]
            tree_adj[ca].append(cb)
            tree_adj[cb].append(ca)
    new_parent = [NONE] * k
    seen = [False] * k
    for r in range(k):
        if seen[r]:
            continue
        tree = [r]
        seen[r] = True
        for x in tree:
            for y in tree_adj[x]:
                if not seen[y]:
                    seen[y] = True
                    tree.append(y)
        root = min(x for x in tree if new_kind[x] == SIMPLE)
        new_parent[root] = NONE
        placed = {root}
        queue = [root]
        for x in queue:
            for y in tree_adj[x]:
                if y not in placed:
                    placed.add(y)
                    new_parent[y] = x
                    queue.append(y)
    return comp, k, new_kind, new_parent


def _path_ends(k: int, kind: list, parent: list) -> dict:
    child = {}
    for s in range(k):
        p = parent[s]
        if p >= 0 and kind[p] == PATH:
            child[p] = s
    return {s: (parent[s], child.get(s, NONE)) for s in range(k) if kind[s] == PATH}


def build_twoecc_tree(tl: Timeline, ls: Lifespans) -> TwoEccTree:
    n, t = tl.n, tl.t
    size = 2 * t
    sizes = [0] * size
    kinds: list = [None] * size
    parents: list = [None] * size
    ends: list = [None] * size
    larrow: list = [None] * size
    rarrow: list = [None] * size
    root_map = [NONE] * (n + 1)
    reduction: dict = {}
    rep = [v - 1 for v in range(n + 1)]
    edge_sets = ls.edge_sets
    step_edge = ls.step_edge
    everyone = range(1, n + 1)

    def visit(idx: int, lo: int, hi: int, kp: int, kind_p: list, parent_p: list) -> None:
        E = edge_sets.get(idx, ())
        if hi - lo + 1 < n:
            F = list(E) + [step_edge[i] for i in range(lo, hi) if step_edge[i] is not None]
            U = {x for e in F for x in e}
            marked = [False] * kp
            for u, v in F:
                a, b = rep[u], rep[v]
                if a == b or a < 0 or b < 0:
                    continue
                assert kind_p[a] == SIMPLE and kind_p[b] == SIMPLE, "update hits a path vertex"
                marked[a] = marked[b] = True
            reduce_map, k1, kind1, parent1 = _reduce(kp, kind_p, parent_p, marked)
            reduction[idx] = (len(F), sum(marked), k1)
            mem = [(u, rep[u]) for u in U]
            for u in U:
                r = rep[u]
                if r >= 0:
                    rep[u] = reduce_map[r]
        else:
            U = everyone
            reduce_map = None
            k1, kind1, parent1 = kp, kind_p, parent_p
            mem = None
            saved = rep[:]

        extra = []
        for u, v in E:
            a, b = rep[u], rep[v]
            if a != b and a >= 0 and b >= 0:
                extra.append((a, b))
        if extra:
            contract_map, k, kind, parent = _contract(k1, kind1, parent1, extra)
            for u in U:
                r = rep[u]
                if r >= 0:
                    rep[u] = contract_map[r]
        else:
            contract_map = None
            k, kind, parent = k1, list(kind1), list(parent1)

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
        kinds[idx] = kind
        parents[idx] = parent
        ends[idx] = _path_ends(k, kind, parent)

        if lo < hi:
            if k == 0:
                larrow[idx] = []
                rarrow[idx] = []
            else:
                mid = (lo + hi) >> 1
                visit(2 * idx, lo, mid, k, kind, parent)
                visit(2 * idx + 1, mid + 1, hi, k, kind, parent)

        if mem is not None:
            for u, r in mem:
                rep[u] = r
        else:
            rep[:] = saved

    visit(1, 1, t, n, [SIMPLE] * n, [NONE] * n)
    return TwoEccTree(n, t, sizes, kinds, parents, ends, larrow, rarrow, root_map, tl, ls, reduction)


def comp_id_2ecc(tree: TwoEccTree, w: int, ab: ElemInterval, c: int) -> CompId:
    idx = node_index(ab, tree.t)
    if not (ab[0] <= c <= ab[1]):
        raise ValueError(f"version {c} outside {tuple(ab)}")
    if not (0 <= w < tree.sizes[idx]):
        raise ValueError(f"vertex {w} is not a vertex of S_{tuple(ab)}")
    return tree.descend(w, idx, c)
