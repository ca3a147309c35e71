"""FORALL and FOREXISTS queries in ``O(log n)``.

A query range is cut at block boundaries (blocks have ``2**D >= n`` versions).
The two partial blocks are answered by descending at most ``D`` levels below
the block node; the run of full blocks in between is one subword comparison
on the per-vertex block-symbol words.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .conn_tree import (
    CompId,
    ConnTree,
    ShortcutTable,
    build_conn_tree,
    build_shortcuts,
    shortcut_level,
)
from .fingerprints import (
    BOTTOM,
    FingerprintTable,
    SymbolWord,
    build_conn_symbol_word,
    build_twoecc_symbol_word,
    compute_conn_fingerprints,
    compute_twoecc_fingerprints,
)
from .intervals import ElemInterval, node_index
from .subword import SubwordEq
from .timeline import Lifespans, Timeline, compute_lifespans
from .twoecc_tree import SIMPLE, TwoEccTree, build_twoecc_tree


@dataclass
class QueryStats:
    """Instrumentation: tree nodes visited by the in-block descents."""

    queries: int = 0
    node_visits: int = 0
    max_visits: int = 0

    def record(self, visits: int) -> None:
        self.queries += 1
        self.node_visits += visits
        self.max_visits = max(self.max_visits, visits)


class _Counter:
    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0


@dataclass(eq=False)
class PhiTable:
    """``phi(w, P) = (Q, s, Q', s')`` for the nodes ``P`` of length at least ``2**D``.

    ``Q`` is the last node on the root path to ``P`` representing ``w`` (by
    ``s``), ``Q'`` the last one representing it by a simple vertex ``s'``.
    Stored column-wise as ``(n + 1) x 2 * blocks`` integer arrays.
    """

    D: int
    blocks: int
    Q: np.ndarray
    S: np.ndarray
    QP: np.ndarray
    SP: np.ndarray

    def at(self, w: int, idx: int) -> tuple[int, int, int, int]:
        return (int(self.Q[w, idx]), int(self.S[w, idx]), int(self.QP[w, idx]), int(self.SP[w, idx]))


def build_phi(tree: TwoEccTree) -> PhiTable:
    n, t = tree.n, tree.t
    D = shortcut_level(n)
    nb = t >> D
    shape = (n + 1, 2 * nb)
    Q = np.zeros(shape, dtype=np.int64)
    S = np.zeros(shape, dtype=np.int64)
    QP = np.zeros(shape, dtype=np.int64)
    SP = np.zeros(shape, dtype=np.int64)
    root = np.asarray([0] + list(tree.root_map[1:]), dtype=np.int64)
    Q[1:, 1] = QP[1:, 1] = 1
    S[:, 1] = SP[:, 1] = root
    for idx in range(1, nb):
        here = Q[:, idx] == idx
        here[0] = False
        s = S[:, idx]
        for child, arrows in ((2 * idx, tree.larrow), (2 * idx + 1, tree.rarrow)):
            Q[:, child] = Q[:, idx]
            S[:, child] = s
            QP[:, child] = QP[:, idx]
            SP[:, child] = SP[:, idx]
            arrow = arrows[idx]
            if not arrow or not here.any():
                continue
            arrow = np.asarray(arrow, dtype=np.int64)
            nxt = np.full(n + 1, -1, dtype=np.int64)
            nxt[here] = arrow[s[here]]
            down = nxt >= 0
            if not down.any():
                continue
            Q[down, child] = child
            S[down, child] = nxt[down]
            kinds = np.asarray(tree.kinds[child], dtype=np.int64)
            simple = down.copy()
            simple[down] = kinds[nxt[down]] == SIMPLE
            QP[simple, child] = child
            SP[simple, child] = nxt[simple]
    return PhiTable(D, nb, Q, S, QP, SP)


def _split(x: int, y: int, D: int) -> tuple[int, int]:
    # l1: smallest l with x < l * 2^D + 1; l2: largest l with l * 2^D < y
    bs = 1 << D
    return (x + bs - 1) >> D, (y - 1) >> D


class QueryEngine:
    """Answers FORALL / FOREXISTS over one timeline; either half may be absent."""

    def __init__(
        self,
        timeline: Timeline,
        conn: Optional[ConnTree] = None,
        conn_fp: Optional[FingerprintTable] = None,
        scut: Optional[ShortcutTable] = None,
        conn_word: Optional[SymbolWord] = None,
        twoecc: Optional[TwoEccTree] = None,
        twoecc_fp: Optional[FingerprintTable] = None,
        phi: Optional[PhiTable] = None,
        twoecc_word: Optional[SymbolWord] = None,
    ):
        self.timeline = timeline
        self.n, self.t0, self.t = timeline.n, timeline.t0, timeline.t
        self.D = shortcut_level(self.n)
        self.conn, self.conn_fp, self.scut, self.conn_word = conn, conn_fp, scut, conn_word
        self.twoecc, self.twoecc_fp, self.phi, self.twoecc_word = twoecc, twoecc_fp, phi, twoecc_word
        self.conn_eq = SubwordEq(conn_word.word) if conn_word is not None else None
        self.twoecc_eq = SubwordEq(twoecc_word.word) if twoecc_word is not None else None

    @classmethod
    def build(
        cls,
        tl: Timeline,
        ls: Optional[Lifespans] = None,
        forall: bool = True,
        forexists: bool = True,
    ) -> "QueryEngine":
        ls = ls if ls is not None else compute_lifespans(tl)
        parts: dict = {}
        if forall:
            tree = build_conn_tree(tl, ls)
            fp = compute_conn_fingerprints(tree)
            scut = build_shortcuts(tree)
            parts.update(conn=tree, conn_fp=fp, scut=scut, conn_word=build_conn_symbol_word(tree, fp, scut))
        if forexists:
            tree2 = build_twoecc_tree(tl, ls)
            fp2 = compute_twoecc_fingerprints(tree2)
            phi = build_phi(tree2)
            parts.update(
                twoecc=tree2, twoecc_fp=fp2, phi=phi, twoecc_word=build_twoecc_symbol_word(tree2, fp2, phi)
            )
        return cls(tl, **parts)

    def _check(self, u: int, v: int, x: int, y: int) -> None:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            raise ValueError(f"vertices ({u}, {v}) outside 1..{self.n}")
        if not (1 <= x <= y <= self.t0):
            raise ValueError(f"range [{x}, {y}] outside 1..{self.t0}")

    # ---- FORALL ---------------------------------------------------------

    def _forall_aux(self, s1: int, s2: int, x: int, y: int, idx: int, a: int, b: int, cnt: _Counter) -> bool:
        cnt.n += 1
        if s1 == s2:
            return True
        if x == a and y == b:
            H = self.conn_fp.values[idx]
            return H[s1] == H[s2]
        mid = (a + b) >> 1
        tree = self.conn
        if x <= mid:
            la = tree.larrow[idx]
            l1, l2 = la[s1], la[s2]
            if l1 < 0 or l2 < 0:
                return False
            if not self._forall_aux(l1, l2, x, min(y, mid), 2 * idx, a, mid, cnt):
                return False
        if y > mid:
            ra = tree.rarrow[idx]
            r1, r2 = ra[s1], ra[s2]
            if r1 < 0 or r2 < 0:
                return False
            if not self._forall_aux(r1, r2, max(x, mid + 1), y, 2 * idx + 1, mid + 1, b, cnt):
                return False
        return True

    def forall_aux(self, s1: int, s2: int, x: int, y: int, ab: ElemInterval) -> bool:
        """FORALL for two vertices of ``S_ab`` over ``[x, y]`` inside ``ab``."""
        idx = node_index(ab, self.t)
        a, b = ab
        if not (a <= x <= y <= b):
            raise ValueError(f"[{x}, {y}] is not inside {tuple(ab)}")
        k = self.conn.sizes[idx]
        if not (0 <= s1 < k and 0 <= s2 < k):
            raise ValueError(f"vertices ({s1}, {s2}) not in S_{tuple(ab)}")
        return self._forall_aux(s1, s2, x, y, idx, a, b, _Counter())

    def _forall_block(self, u: int, v: int, x: int, y: int, k: int, cnt: _Counter) -> bool:
        scut = self.scut
        su, pu = scut.vertex[u][k], scut.node[u][k]
        sv, pv = scut.vertex[v][k], scut.node[v][k]
        if pu != pv:
            return False
        if pu < scut.blocks:
            return su == sv
        a = (k << self.D) + 1
        return self._forall_aux(su, sv, x, y, pu, a, a + (1 << self.D) - 1, cnt)

    def forall(self, u: int, v: int, x: int, y: int, stats: Optional[QueryStats] = None) -> bool:
        """True iff ``u`` and ``v`` are connected in every version ``x..y``."""
        if self.conn is None:
            raise RuntimeError("engine was built without FORALL support")
        self._check(u, v, x, y)
        if u == v:
            return True
        cnt = _Counter()
        ans = self._forall(u, v, x, y, cnt, self.conn_eq)
        if stats is not None:
            stats.record(cnt.n)
        return ans

    def _forall(self, u: int, v: int, x: int, y: int, cnt: _Counter, eq: Optional[SubwordEq]) -> bool:
        D = self.D
        kx, ky = (x - 1) >> D, (y - 1) >> D
        if kx == ky:
            return self._forall_block(u, v, x, y, kx, cnt)
        l1, l2 = _split(x, y, D)
        if not self._forall_block(u, v, x, l1 << D, kx, cnt):
            return False
        if not self._forall_block(u, v, (l2 << D) + 1, y, ky, cnt):
            return False
        return self._middle(self.conn_word, eq, u, v, l1, l2, self._forall_whole_block)

    def _forall_whole_block(self, u: int, v: int, l: int) -> bool:
        a = (l << self.D) + 1
        return self._forall_block(u, v, a, a + (1 << self.D) - 1, l, _Counter())

    @staticmethod
    def _middle(word: SymbolWord, eq: Optional[SubwordEq], u: int, v: int, l1: int, l2: int, per_block) -> bool:
        if l1 >= l2:
            return True
        if eq is None:
            # reference path used by differential tests
            return all(per_block(u, v, l) for l in range(l1, l2))
        return eq.eq(word.offsets[u] + l1, word.offsets[v] + l1, l2 - l1)

    def forall_blockwise(self, u: int, v: int, x: int, y: int) -> bool:
        """FORALL with the middle run checked block by block instead of by subword equality."""
        self._check(u, v, x, y)
        if u == v:
            return True
        return self._forall(u, v, x, y, _Counter(), None)

    # ---- FOREXISTS ------------------------------------------------------

    def _phi_child(self, p: tuple, idx: int, child: int) -> tuple:
        Q, s, Qp, sp = p
        if Q != idx:
            return p
        tree = self.twoecc
        arrow = tree.larrow[idx] if child == 2 * idx else tree.rarrow[idx]
        nxt = arrow[s]
        if nxt < 0:
            return p
        if tree.kinds[child][nxt] == SIMPLE:
            return (child, nxt, child, nxt)
        return (child, nxt, Qp, sp)

    def phi_at(self, w: int, idx: int) -> tuple[int, int, int, int]:
        """``phi`` at any node: the stored entry of its top-level ancestor, walked down."""
        if not (1 <= w <= self.n and 1 <= idx < 2 * self.t):
            raise ValueError(f"vertex {w} / node {idx} out of range")
        top, depth = idx, 0
        while top >= 2 * self.phi.blocks:
            top >>= 1
            depth += 1
        p = self.phi.at(w, top)
        node = top
        for shift in range(depth - 1, -1, -1):
            child = 2 * node + ((idx >> shift) & 1)
            p = self._phi_child(p, node, child)
            node = child
        return p

    def _forexists_aux(self, pu: tuple, pv: tuple, x: int, y: int, idx: int, a: int, b: int, cnt: _Counter) -> bool:
        cnt.n += 1
        Qu, su, Qpu, spu = pu
        Qv, sv, Qpv, spv = pv
        if Qu != Qv:
            return False
        if Qu != idx:
            # both stopped above: constant over every version below
            return Qpu == Qpv and spu == spv
        if su == sv and self.twoecc.kinds[idx][su] == SIMPLE:
            return True
        if x == a and y == b:
            H = self.twoecc_fp.values[idx]
            hu, hv = H[su], H[sv]
            if hu != BOTTOM and hv != BOTTOM:
                return hu == hv
            return Qpu == Qpv and spu == spv
        mid = (a + b) >> 1
        if x <= mid:
            c = 2 * idx
            if not self._forexists_aux(
                self._phi_child(pu, idx, c), self._phi_child(pv, idx, c), x, min(y, mid), c, a, mid, cnt
            ):
                return False
        if y > mid:
            c = 2 * idx + 1
            if not self._forexists_aux(
                self._phi_child(pu, idx, c), self._phi_child(pv, idx, c), max(x, mid + 1), y, c, mid + 1, b, cnt
            ):
                return False
        return True

    def _forexists_block(self, u: int, v: int, x: int, y: int, k: int, cnt: _Counter) -> bool:
        phi = self.phi
        block = phi.blocks + k
        a = (k << self.D) + 1
        return self._forexists_aux(phi.at(u, block), phi.at(v, block), x, y, block, a, a + (1 << self.D) - 1, cnt)

    def _forexists_whole_block(self, u: int, v: int, l: int) -> bool:
        a = (l << self.D) + 1
        return self._forexists_block(u, v, a, a + (1 << self.D) - 1, l, _Counter())

    def _forexists(self, u: int, v: int, x: int, y: int, cnt: _Counter, eq: Optional[SubwordEq]) -> bool:
        D = self.D
        kx, ky = (x - 1) >> D, (y - 1) >> D
        if kx == ky:
            return self._forexists_block(u, v, x, y, kx, cnt)
        l1, l2 = _split(x, y, D)
        if not self._forexists_block(u, v, x, l1 << D, kx, cnt):
            return False
        if not self._forexists_block(u, v, (l2 << D) + 1, y, ky, cnt):
            return False
        return self._middle(self.twoecc_word, eq, u, v, l1, l2, self._forexists_whole_block)

    def forexists(self, u: int, v: int, x: int, y: int, stats: Optional[QueryStats] = None) -> bool:
        """True iff ``u`` and ``v`` are 2-edge-connected in every version ``x..y``."""
        if self.twoecc is None:
            raise RuntimeError("engine was built without FOREXISTS support")
        self._check(u, v, x, y)
        if u == v:
            return True
        cnt = _Counter()
        ans = self._forexists(u, v, x, y, cnt, self.twoecc_eq)
        if stats is not None:
            stats.record(cnt.n)
        return ans

    def forexists_blockwise(self, u: int, v: int, x: int, y: int) -> bool:
        self._check(u, v, x, y)
        if u == v:
            return True
        return self._forexists(u, v, x, y, _Counter(), None)

    # ---- single versions ------------------------------------------------

    def twoecc_component_of(self, v: int, c: int) -> CompId:
        """2-edge-connected component of ``v`` in version ``c``, named by its last simple representative."""
        if not (1 <= v <= self.n and 1 <= c <= self.t):
            raise ValueError(f"vertex {v} / version {c} out of range")
        phi = self.phi
        k = (c - 1) >> self.D
        Q, s, Qp, sp = phi.at(v, phi.blocks + k)
        if Q == phi.blocks + k:
            found = self.twoecc.descend(s, Q, c)
            if self.twoecc.kinds[found.node][found.vertex] == SIMPLE:
                return found
        return CompId(sp, Qp)


def block_interval(k: int, D: int) -> ElemInterval:
    a = (k << D) + 1
    return ElemInterval(a, a + (1 << D) - 1)

