"""Constant-time equality of equal-length subwords.

Suffix array by prefix doubling, LCP of adjacent suffixes, and a sparse-table
range minimum over the LCP array.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np


def _dense_rank(*keys: np.ndarray) -> np.ndarray:
    # keys given most-significant first
    order = np.lexsort(keys[::-1])
    stacked = np.stack([k[order] for k in keys])
    new_group = np.empty(len(order), dtype=bool)
    new_group[0] = True
    new_group[1:] = np.any(stacked[:, 1:] != stacked[:, :-1], axis=0)
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.cumsum(new_group) - 1
    return rank


class SubwordEq:
    def __init__(self, word: Sequence[int]):
        x = np.asarray(word, dtype=np.int64)
        self.length = n = len(x)
        if n == 0:
            self.rank = []
            self._table = []
            return
        levels = [_dense_rank(x)]
        width = 1
        while width < n and levels[-1].max() < n - 1:
            prev = levels[-1]
            shifted = np.full(n, -1, dtype=np.int64)
            shifted[: n - width] = prev[width:]
            levels.append(_dense_rank(prev, shifted))
            width *= 2
        final = levels[-1]
        if final.max() < n - 1:  # only reachable for n == 1
            final = _dense_rank(final, np.arange(n))
        sa = np.argsort(final, kind="stable")

        lcp = np.zeros(n, dtype=np.int64)
        if n > 1:
            p, q = sa[:-1], sa[1:]
            acc = np.zeros(n - 1, dtype=np.int64)
            for j in range(len(levels) - 1, -1, -1):
                step = 1 << j
                pi, qi = p + acc, q + acc
                full = (pi + step <= n) & (qi + step <= n)
                lev = levels[j]
                same = full & (lev[np.minimum(pi, n - 1)] == lev[np.minimum(qi, n - 1)])
                acc += same * step
            lcp[1:] = acc

        self.suffix_array = sa
        self.lcp = lcp
        self.rank = final.tolist()
        table = [lcp]
        span = 1
        while 2 * span <= n:
            prev = table[-1]
            table.append(np.minimum(prev[: len(prev) - span], prev[span:]))
            span *= 2
        self._table = table

    def eq(self, i: int, j: int, length: int) -> bool:
        """True iff ``word[i:i+length] == word[j:j+length]``."""
        if length < 0 or i < 0 or j < 0 or i + length > self.length or j + length > self.length:
            raise ValueError(f"subword range out of bounds: i={i}, j={j}, len={length}, |X|={self.length}")
        if length == 0 or i == j:
            return True
        a, b = self.rank[i], self.rank[j]
        if a > b:
            a, b = b, a
        a += 1
        k = (b - a + 1).bit_length() - 1
        row = self._table[k]
        return min(row[a], row[b - (1 << k) + 1]) >= length


def subword_eq_build(word: Sequence[int]) -> SubwordEq:
    return SubwordEq(word)


def subword_eq(se: SubwordEq, i: int, j: int, length: int) -> bool:
    return se.eq(i, j, length)
