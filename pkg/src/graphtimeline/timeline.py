"""Graph timelines: parsing, validation, padding, edge lifespans."""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .intervals import partition_nodes

Edge = tuple[int, int]
# (op, u, v) with op in {"+", "-"}; padding steps are None
Update = Optional[tuple[str, int, int]]


class TimelineError(ValueError):
    pass


class TimelineParseError(TimelineError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class TimelineValidationError(TimelineError):
    pass


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise TimelineValidationError(f"self-loop ({u}, {v}) is not allowed")
    return (u, v) if u < v else (v, u)


def padded_length(t0: int, n: int) -> int:
    t = 1
    while t < max(t0, n, 1):
        t <<= 1
    return t


@dataclass(frozen=True, eq=False)
class Timeline:
    """A validated timeline, padded with no-op steps to a power of two ``t >= n``.

    ``updates[i - 1]`` turns version ``i`` into version ``i + 1``.
    """

    n: int
    t0: int
    t: int
    initial_edges: frozenset
    updates: tuple

    @classmethod
    def build(cls, n: int, initial_edges: Iterable[Edge], updates: Sequence[Update]) -> "Timeline":
        if n < 1:
            raise TimelineValidationError(f"vertex count must be positive, got {n}")
        live: set[Edge] = set()
        for u, v in initial_edges:
            e = _checked_edge(n, u, v)
            if e in live:
                raise TimelineValidationError(f"duplicate initial edge {e}")
            live.add(e)
        init = frozenset(live)
        steps: list[Update] = []
        for i, op in enumerate(updates, start=1):
            if op is None:
                steps.append(None)
                continue
            kind, u, v = op
            e = _checked_edge(n, u, v)
            if kind == "+":
                if e in live:
                    raise TimelineValidationError(f"step {i}: edge {e} is already present")
                live.add(e)
            elif kind == "-":
                if e not in live:
                    raise TimelineValidationError(f"step {i}: edge {e} is absent")
                live.remove(e)
            else:
                raise TimelineValidationError(f"step {i}: unknown operation {kind!r}")
            steps.append((kind, e[0], e[1]))
        t0 = len(steps) + 1
        t = padded_length(t0, n)
        steps.extend([None] * (t - t0))
        return cls(n=n, t0=t0, t=t, initial_edges=init, updates=tuple(steps))

    @property
    def B(self) -> int:
        return self.t.bit_length() - 1

    def versions(self) -> Iterator[frozenset]:
        """Edge sets ``E_1 .. E_t`` by naive replay."""
        live = set(self.initial_edges)
        yield frozenset(live)
        for op in self.updates:
            if op is not None:
                kind, u, v = op
                if kind == "+":
                    live.add((u, v))
                else:
                    live.remove((u, v))
            yield frozenset(live)

    def to_text(self) -> str:
        lines = [f"timeline {self.n} {self.t0}"]
        lines += [f"init {u} {v}" for u, v in sorted(self.initial_edges)]
        lines += [f"{op[0]} {op[1]} {op[2]}" for op in self.updates[: self.t0 - 1]]
        return "\n".join(lines) + "\n"


def _checked_edge(n: int, u: int, v: int) -> Edge:
    if not (1 <= u <= n and 1 <= v <= n):
        raise TimelineValidationError(f"edge ({u}, {v}) has a vertex outside 1..{n}")
    return canonical_edge(u, v)


def parse_timeline(text: str) -> Timeline:
    header: Optional[tuple[int, int]] = None
    init: list[Edge] = []
    ops: list[Update] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag, args = parts[0], parts[1:]
        try:
            nums = [int(x) for x in args]
        except ValueError:
            raise TimelineParseError(lineno, f"non-integer argument in {line!r}") from None
        if header is None:
            if tag != "timeline" or len(nums) != 2:
                raise TimelineParseError(lineno, "expected header 'timeline <n> <t0>'")
            if nums[0] < 1 or nums[1] < 1:
                raise TimelineParseError(lineno, "n and t0 must be positive")
            header = (nums[0], nums[1])
            continue
        if len(nums) != 2:
            raise TimelineParseError(lineno, f"expected two vertices in {line!r}")
        if tag == "init":
            if ops:
                raise TimelineParseError(lineno, "'init' after the first update")
            init.append((nums[0], nums[1]))
        elif tag in ("+", "-"):
            ops.append((tag, nums[0], nums[1]))
        else:
            raise TimelineParseError(lineno, f"unknown directive {tag!r}")
    if header is None:
        raise TimelineParseError(0, "missing 'timeline' header")
    n, t0 = header
    if len(ops) != t0 - 1:
        raise TimelineParseError(0, f"expected {t0 - 1} updates, found {len(ops)}")
    return Timeline.build(n, init, ops)


@dataclass
class Lifespans:
    """Maximal alive intervals per edge, plus the derived per-version and per-node sets.

    ``step_edge[i]`` is the edge toggled between versions ``i`` and ``i + 1``
    (``None`` for padding); ``edge_sets`` maps heap index to ``E_P``.
    """

    t: int
    intervals: dict
    delta_plus: list
    delta_minus: list
    permanent_count: int
    step_edge: list
    edge_sets: dict = field(default_factory=dict)

    def alive(self, e: Edge, i: int) -> bool:
        spans = self.intervals.get(e, ())
        k = bisect_right(spans, (i, self.t + 1)) - 1
        return k >= 0 and spans[k][0] <= i <= spans[k][1]

    def changed_edges(self, lo: int, hi: int) -> list[Edge]:
        """``C`` for ``[lo, hi]``: edges with a lifespan starting in ``(lo, hi]`` or ending in ``[lo, hi)``."""
        se = self.step_edge
        return [se[i] for i in range(lo, hi) if se[i] is not None]


def compute_lifespans(tl: Timeline) -> Lifespans:
    t = tl.t
    start: dict[Edge, int] = {e: 1 for e in tl.initial_edges}
    intervals: dict[Edge, list] = {}
    plus: list[list[Edge]] = [[] for _ in range(t + 2)]
    minus: list[list[Edge]] = [[] for _ in range(t + 2)]
    step_edge: list[Optional[Edge]] = [None] * (t + 1)
    plus[1].extend(sorted(tl.initial_edges))
    for i, op in enumerate(tl.updates, start=1):
        if op is None:
            continue
        kind, u, v = op
        e = (u, v)
        step_edge[i] = e
        if kind == "+":
            start[e] = i + 1
            plus[i + 1].append(e)
        else:
            intervals.setdefault(e, []).append((start.pop(e), i))
            minus[i].append(e)
    for e, a in start.items():
        intervals.setdefault(e, []).append((a, t))
        minus[t].append(e)
    for spans in intervals.values():
        spans.sort()
    permanent = sum(1 for spans in intervals.values() if spans == [(1, t)])
    ls = Lifespans(
        t=t,
        intervals=intervals,
        delta_plus=plus,
        delta_minus=minus,
        permanent_count=permanent,
        step_edge=step_edge,
    )
    ls.edge_sets = partition_all_lifespans(ls, t)
    return ls


def partition_all_lifespans(ls: Lifespans, t: int) -> dict:
    edge_sets: dict[int, list[Edge]] = {}
    for e in sorted(ls.intervals):
        for lo, hi in ls.intervals[e]:
            for node in partition_nodes(lo, hi, t):
                edge_sets.setdefault(node, []).append(e)
    return edge_sets
