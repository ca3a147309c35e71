"""Elementary intervals of the segment tree over versions ``[1, t]``.

Nodes are addressed by heap index: the root ``[1, t]`` is 1, the children of
``k`` are ``2k`` and ``2k + 1``, and the leaf ``[c, c]`` is ``t + c - 1``.
Index 0 stands for the sentinel ``[0, inf]`` above the root.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Optional

SENTINEL_INDEX = 0


class ElemInterval(NamedTuple):
    lo: int
    hi: int

    def __len__(self) -> int:  # type: ignore[override]
        return int(self.hi - self.lo + 1)

    def __contains__(self, c: object) -> bool:  # type: ignore[override]
        return isinstance(c, int) and self.lo <= c <= self.hi


SENTINEL = ElemInterval(0, math.inf)  # type: ignore[arg-type]


class Nav(NamedTuple):
    lson: Optional[ElemInterval]
    rson: Optional[ElemInterval]
    ipar: ElemInterval
    is_leaf: bool


def check_power_of_two(t: int) -> None:
    if t < 1 or t & (t - 1):
        raise ValueError(f"t must be a power of two, got {t}")


def log2_exact(t: int) -> int:
    check_power_of_two(t)
    return t.bit_length() - 1


def node_interval(idx: int, t: int) -> ElemInterval:
    """Interval covered by heap node ``idx``."""
    if idx == SENTINEL_INDEX:
        return SENTINEL
    if idx < 1 or idx >= 2 * t:
        raise ValueError(f"node index {idx} out of range for t={t}")
    depth = idx.bit_length() - 1
    length = t >> depth
    lo = (idx - (1 << depth)) * length + 1
    return ElemInterval(lo, lo + length - 1)


def node_length(idx: int, t: int) -> int:
    return t >> (idx.bit_length() - 1)


def node_index(p: ElemInterval, t: int) -> int:
    """Heap index of an elementary interval; raises if ``p`` is not elementary."""
    if p == SENTINEL:
        return SENTINEL_INDEX
    lo, hi = p
    length = hi - lo + 1
    if length < 1 or length > t or length & (length - 1) or (lo - 1) % length:
        raise ValueError(f"{tuple(p)} is not an elementary interval for t={t}")
    if lo < 1 or hi > t:
        raise ValueError(f"{tuple(p)} lies outside [1, {t}]")
    depth = (t // length).bit_length() - 1
    return (1 << depth) + (lo - 1) // length


def leaf_index(c: int, t: int) -> int:
    return t + c - 1


def interval_nav(p: ElemInterval, t: int) -> Nav:
    idx = node_index(p, t)
    if idx == SENTINEL_INDEX:
        return Nav(ElemInterval(1, t), None, SENTINEL, False)
    parent = node_interval(idx >> 1, t)
    if idx >= t:
        return Nav(None, None, parent, True)
    return Nav(node_interval(2 * idx, t), node_interval(2 * idx + 1, t), parent, False)


def _push_merging(stack: list[int], node: int) -> None:
    # lengths only grow along a climb, so a sibling can only be the last entry
    while stack and stack[-1] == node ^ 1:
        stack.pop()
        node >>= 1
    stack.append(node)


def partition_nodes(c: int, d: int, t: int) -> list[int]:
    """Heap indices of the minimal elementary partition of ``[c, d]``, left to right.

    Climbs from the leaves ``[c, c]`` and ``[d, d]`` towards their lowest common
    ancestor, taking inner siblings, and merges siblings into their parent as
    soon as both are taken.
    """
    if not (1 <= c <= d <= t):
        raise ValueError(f"need 1 <= c <= d <= t, got c={c}, d={d}, t={t}")
    a = t + c - 1
    b = t + d - 1
    if a == b:
        return [a]
    left = [a]
    right = [b]
    while (a >> 1) != (b >> 1):
        if not a & 1:
            _push_merging(left, a + 1)
        if b & 1:
            _push_merging(right, b - 1)
        a >>= 1
        b >>= 1
    if left == [a] and right == [b]:
        return [a >> 1]
    return left + right[::-1]


def partition_interval(c: int, d: int, t: int) -> list[ElemInterval]:
    return [node_interval(k, t) for k in partition_nodes(c, d, t)]
