"""Deterministic fingerprints of per-version component histories.

``H_P(s)`` is an integer in ``[1, |V(S_P)|]`` such that two vertices of
``S_P`` share it iff their component identifiers agree in every version of
``P``. It is computed bottom-up from the children's fingerprints and made
dense with a two-pass counting sort. In the 2-edge-connectivity variant a
path vertex whose chain stays split in some version gets ``BOTTOM`` (0).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .conn_tree import ConnTree, ShortcutTable
from .twoecc_tree import SIMPLE, TwoEccTree

BOTTOM = 0


def dense_relabel(first: list, second: list, bound_first: int, bound_second: int) -> list:
    """Rank pairs ``(first[i], second[i])`` densely from 1, equal pairs sharing a rank.

    Both coordinates are non-negative and below the given bounds; the sort is
    LSD radix with one counting pass per coordinate.
    """
    by_second: list[list[int]] = [[] for _ in range(bound_second)]
    for i, b in enumerate(second):
        by_second[b].append(i)
    by_first: list[list[int]] = [[] for _ in range(bound_first)]
    for bucket in by_second:
        for i in bucket:
            by_first[first[i]].append(i)
    labels = [0] * len(first)
    rank = 0
    prev_a = prev_b = -1
    for bucket in by_first:
        for i in bucket:
            a, b = first[i], second[i]
            if a != prev_a or b != prev_b:
                rank += 1
                prev_a, prev_b = a, b
            labels[i] = rank
    return labels


@dataclass(eq=False)
class FingerprintTable:
    """``values[idx][s]`` is ``H_P(s)`` for heap node ``idx``; ``BOTTOM`` marks a non-vanishing path vertex."""

    values: list

    def __getitem__(self, key: tuple[int, int]) -> int:
        idx, s = key
        return self.values[idx][s]


def compute_conn_fingerprints(tree: ConnTree) -> FingerprintTable:
    t = tree.t
    sizes, la_all, ra_all = tree.sizes, tree.larrow, tree.rarrow
    H: list = [None] * (2 * t)
    for idx in range(2 * t - 1, 0, -1):
        k = sizes[idx]
        if k == 0:
            H[idx] = []
            continue
        if idx >= t:
            H[idx] = list(range(1, k + 1))
            continue
        la, ra = la_all[idx], ra_all[idx]
        Hl, Hr = H[2 * idx], H[2 * idx + 1]
        first = [0] * k
        second = [0] * k
        for s in range(k):
            l, r = la[s], ra[s]
            if l < 0 or r < 0:
                first[s] = s
            else:
                first[s] = Hl[l]
                second[s] = Hr[r]
        H[idx] = dense_relabel(first, second, max(k, len(Hl) + 1), len(Hr) + 1)
    return FingerprintTable(H)


def compute_twoecc_fingerprints(tree: TwoEccTree) -> FingerprintTable:
    t = tree.t
    sizes, la_all, ra_all, kinds = tree.sizes, tree.larrow, tree.rarrow, tree.kinds
    H: list = [None] * (2 * t)
    for idx in range(2 * t - 1, 0, -1):
        k = sizes[idx]
        if k == 0:
            H[idx] = []
            continue
        kind = kinds[idx]
        leaf = idx >= t
        if not leaf:
            la, ra = la_all[idx], ra_all[idx]
            Hl, Hr = H[2 * idx], H[2 * idx + 1]
        keep = []
        first = []
        second = []
        for s in range(k):
            pair = None
            if not leaf:
                l, r = la[s], ra[s]
                if l >= 0 and r >= 0:
                    hl, hr = Hl[l], Hr[r]
                    if hl != BOTTOM and hr != BOTTOM:
                        pair = (hl, hr)
            if pair is None:
                if kind[s] != SIMPLE:
                    continue
                pair = (s, 0)
            keep.append(s)
            first.append(pair[0])
            second.append(pair[1])
        values = [BOTTOM] * k
        if keep:
            bound_first = max(k, len(Hl) + 1) if not leaf else k
            bound_second = len(Hr) + 1 if not leaf else 1
            for s, h in zip(keep, dense_relabel(first, second, bound_first, bound_second)):
                values[s] = h
        H[idx] = values
    return FingerprintTable(H)


@dataclass(eq=False)
class SymbolWord:
    """Concatenated per-vertex block symbols ``X_1 # X_2 # ... X_n``.

    ``word[offsets[v] + l]`` is vertex ``v``'s symbol for block ``l``; symbols
    are dense integers from 1, separators are distinct integers above them.
    """

    word: np.ndarray
    offsets: list
    blocks: int
    alphabet_size: int


def _assemble(rows: np.ndarray, n: int, nb: int) -> SymbolWord:
    # rows: (n * nb, width) integer tuples, vertex-major
    _, inverse = np.unique(rows, axis=0, return_inverse=True)
    symbols = inverse.reshape(-1).astype(np.int64) + 1
    alphabet = int(symbols.max()) if len(symbols) else 0
    stride = nb + 1
    word = np.empty(n * stride - 1, dtype=np.int64)
    offsets = [0] * (n + 1)
    for v in range(1, n + 1):
        start = (v - 1) * stride
        offsets[v] = start
        word[start : start + nb] = symbols[(v - 1) * nb : v * nb]
        if v < n:
            word[start + nb] = alphabet + v
    return SymbolWord(word, offsets, nb, alphabet)


def build_conn_symbol_word(tree: ConnTree, fp: FingerprintTable, scut: ShortcutTable) -> SymbolWord:
    n, nb = tree.n, scut.blocks
    H = fp.values
    rows = np.empty((n * nb, 2), dtype=np.int64)
    for v in range(1, n + 1):
        base = (v - 1) * nb
        sv, nv = scut.vertex[v], scut.node[v]
        for l in range(nb):
            rows[base + l, 0] = nv[l]
            rows[base + l, 1] = H[nv[l]][sv[l]]
    return _assemble(rows, n, nb)


def build_twoecc_symbol_word(tree: TwoEccTree, fp: FingerprintTable, phi) -> SymbolWord:
    """Block symbols from the quadruples at the block nodes.

    Encoded as ``(tag, Q, a, b)``: tag 1 with ``(a, b) = (H, 0)`` when ``w`` is
    represented at the block by a vertex with an integer fingerprint, tag 0
    with ``(a, b) = (Q', s')`` otherwise.
    """
    n, nb = tree.n, phi.blocks
    H = fp.values
    rows = np.empty((n * nb, 4), dtype=np.int64)
    for v in range(1, n + 1):
        base = (v - 1) * nb
        for l in range(nb):
            block = nb + l
            Q, s, Qp, sp = phi.at(v, block)
            h = H[Q][s] if Q == block else BOTTOM
            if h != BOTTOM:
                rows[base + l] = (1, Q, h, 0)
            else:
                rows[base + l] = (0, Q, Qp, sp)
    return _assemble(rows, n, nb)


def build_symbol_word(tree: Union[ConnTree, TwoEccTree], fp: FingerprintTable, table) -> SymbolWord:
    if isinstance(tree, TwoEccTree):
        return build_twoecc_symbol_word(tree, fp, table)
    return build_conn_symbol_word(tree, fp, table)
