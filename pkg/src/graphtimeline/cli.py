"""Command-line front end: ``python -m graphtimeline <command> ...``."""
from __future__ import annotations

import argparse
import csv
import random
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from .conn_tree import build_conn_tree
from .exists import build_exists, exists
from .oracle import Oracle, gen_timeline
from .query import QueryEngine
from .timeline import TimelineError, compute_lifespans, parse_timeline
from .triangles import graph_to_timeline, parse_graph, report_triangles

KINDS = ("FORALL", "FOREXISTS", "EXISTS")


@dataclass
class RunConfig:
    command: str
    input: Optional[Path] = None
    queries: Optional[Path] = None
    graph: Optional[Path] = None
    output: Optional[Path] = None
    alpha: float = 0.5
    seed: int = 0
    n: int = 20
    t: int = 128
    query_count: int = 1000
    use_oracle: bool = False
    threads: int = 1
    max_count: int = 1 << 62
    sizes_n: list = field(default_factory=lambda: [64])
    sizes_t: list = field(default_factory=lambda: [1 << 12, 1 << 14])
    runs: int = 3
    warmup: int = 1


class Answerer:
    """Builds the structure for each query kind the first time it is needed."""

    def __init__(self, tl, alpha: float, use_oracle: bool = False):
        self.tl = tl
        self.alpha = alpha
        self.use_oracle = use_oracle
        self._ls = None
        self._fa = self._fe = self._ex = self._oracle = None

    def _lifespans(self):
        if self._ls is None:
            self._ls = compute_lifespans(self.tl)
        return self._ls

    def prepare(self, kinds) -> None:
        if self.use_oracle:
            if self._oracle is None:
                self._oracle = Oracle(self.tl)
            return
        if "FORALL" in kinds and self._fa is None:
            self._fa = QueryEngine.build(self.tl, self._lifespans(), forall=True, forexists=False)
        if "FOREXISTS" in kinds and self._fe is None:
            self._fe = QueryEngine.build(self.tl, self._lifespans(), forall=False, forexists=True)
        if "EXISTS" in kinds and self._ex is None:
            tree = self._fa.conn if self._fa is not None else build_conn_tree(self.tl, self._lifespans())
            self._ex = build_exists(tree, self.alpha)

    def __call__(self, kind: str, u: int, v: int, a: int, b: int) -> bool:
        if self.use_oracle:
            return self._oracle.answer(kind, u, v, a, b)
        if kind == "FORALL":
            return self._fa.forall(u, v, a, b)
        if kind == "FOREXISTS":
            return self._fe.forexists(u, v, a, b)
        return exists(self._ex, u, v, a, b)


def parse_queries(text: str) -> list[tuple[str, int, int, int, int]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        words = line.split("#", 1)[0].split()
        if not words:
            continue
        if len(words) != 5 or words[0] not in KINDS:
            raise ValueError(f"line {lineno}: expected '<FORALL|FOREXISTS|EXISTS> u v a b'")
        try:
            u, v, a, b = map(int, words[1:])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer argument") from None
        out.append((words[0], u, v, a, b))
    return out


def run_build(cfg: RunConfig) -> int:
    tl = parse_timeline(cfg.input.read_text())
    t0 = time.perf_counter()
    ls = compute_lifespans(tl)
    eng = QueryEngine.build(tl, ls)
    es = build_exists(eng.conn, cfg.alpha)
    ms = (time.perf_counter() - t0) * 1e3
    print(f"n={tl.n} t0={tl.t0} t={tl.t} permanent={ls.permanent_count}")
    print(f"conn vertices={eng.conn.total_size()} 2ecc vertices={eng.twoecc.total_size()}")
    print(f"exists blocks={len(es.blocks)} block_length={es.block_length}")
    print(f"build_ms={ms:.1f}")
    return 0


def run_query(cfg: RunConfig) -> int:
    tl = parse_timeline(cfg.input.read_text())
    queries = parse_queries(cfg.queries.read_text())
    ans = Answerer(tl, cfg.alpha, cfg.use_oracle)
    ans.prepare({q[0] for q in queries})
    if cfg.threads > 1:
        with ThreadPoolExecutor(cfg.threads) as pool:
            results = list(pool.map(lambda q: ans(*q), queries))
    else:
        results = [ans(*q) for q in queries]
    out = "".join("1\n" if r else "0\n" for r in results)
    if cfg.output is not None:
        cfg.output.write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def random_queries(rng: random.Random, n: int, t0: int, count: int) -> list[tuple[int, int, int, int]]:
    out = []
    for _ in range(count):
        u, v = rng.randint(1, n), rng.randint(1, n)
        x = rng.randint(1, t0)
        y = rng.randint(x, min(t0, x + rng.choice((0, 3, 30, t0))))
        out.append((u, v, x, y))
    return out


def run_check(cfg: RunConfig) -> int:
    rng = random.Random(cfg.seed)
    tl = gen_timeline(cfg.seed, cfg.n, cfg.t)
    fast = Answerer(tl, cfg.alpha)
    fast.prepare(KINDS)
    oracle = Oracle(tl)
    for u, v, x, y in random_queries(rng, tl.n, tl.t0, cfg.query_count):
        for kind in KINDS:
            got, want = fast(kind, u, v, x, y), oracle.answer(kind, u, v, x, y)
            if got != want:
                print(f"mismatch: seed={cfg.seed} n={cfg.n} t={cfg.t} {kind} {u} {v} {x} {y} got={int(got)} want={int(want)}")
                return 1
    print(f"ok: {cfg.query_count * len(KINDS)} queries agree (seed={cfg.seed}, n={cfg.n}, t={cfg.t})")
    return 0


def _time_ms(fn: Callable[[], object]) -> tuple[float, object]:
    t0 = time.perf_counter()
    res = fn()
    return (time.perf_counter() - t0) * 1e3, res


def run_bench(cfg: RunConfig) -> int:
    sink = cfg.output.open("w", newline="") if cfg.output is not None else sys.stdout
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["kind", "n", "t", "m", "alpha", "build_ms", "query_ns"])
    for n in cfg.sizes_n:
        for t in cfg.sizes_t:
            tl = gen_timeline(cfg.seed, n, t)
            m = compute_lifespans(tl).permanent_count
            qs = random_queries(random.Random(cfg.seed), n, tl.t0, cfg.query_count)
            builders = {
                "FORALL": lambda: QueryEngine.build(tl, forexists=False),
                "FOREXISTS": lambda: QueryEngine.build(tl, forall=False),
                "EXISTS": lambda: build_exists(build_conn_tree(tl, compute_lifespans(tl)), cfg.alpha),
            }
            for kind in KINDS:
                build_times, query_times = [], []
                for run in range(cfg.warmup + cfg.runs):
                    ms, obj = _time_ms(builders[kind])
                    if kind == "FORALL":
                        call = obj.forall
                    elif kind == "FOREXISTS":
                        call = obj.forexists
                    else:
                        call = lambda u, v, x, y, es=obj: exists(es, u, v, x, y)  # noqa: E731
                    t0 = time.perf_counter_ns()
                    for q in qs:
                        call(*q)
                    per_query = (time.perf_counter_ns() - t0) / max(1, len(qs))
                    if run >= cfg.warmup:
                        build_times.append(ms)
                        query_times.append(per_query)
                writer.writerow(
                    [kind, n, t, m, cfg.alpha, f"{statistics.median(build_times):.3f}", f"{statistics.median(query_times):.1f}"]
                )
                sink.flush()
    if sink is not sys.stdout:
        sink.close()
    return 0


def run_triangles(cfg: RunConfig) -> int:
    g = parse_graph(cfg.graph.read_text())
    tt = graph_to_timeline(g)
    es = build_exists(build_conn_tree(tt.timeline, compute_lifespans(tt.timeline)), cfg.alpha)
    for u, v, w in report_triangles(tt, es, cfg.max_count):
        print(u, v, w)
    return 0


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphtimeline", description="Connectivity queries over graph timelines.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build all structures and print their sizes")
    b.add_argument("-i", "--input", type=Path, required=True)
    b.add_argument("--alpha", type=float, default=0.5)

    q = sub.add_parser("query", help="answer a query file")
    q.add_argument("-i", "--input", type=Path, required=True)
    q.add_argument("-q", "--queries", type=Path, required=True)
    q.add_argument("-o", "--output", type=Path)
    q.add_argument("--alpha", type=float, default=0.5)
    q.add_argument("--oracle", dest="use_oracle", action="store_true", help="answer with the brute-force oracle")
    q.add_argument("--threads", type=int, default=1)

    c = sub.add_parser("check", help="compare against the oracle on a random timeline")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--n", type=int, default=20)
    c.add_argument("--t", type=int, default=128)
    c.add_argument("--queries", dest="query_count", type=int, default=1000)
    c.add_argument("--alpha", type=float, default=0.5)

    be = sub.add_parser("bench", help="time builds and queries, CSV out")
    be.add_argument("--n", dest="sizes_n", type=_int_list, default=[64], help="comma-separated")
    be.add_argument("--t", dest="sizes_t", type=_int_list, default=[1 << 12, 1 << 14], help="comma-separated")
    be.add_argument("--alpha", type=float, default=0.5)
    be.add_argument("--seed", type=int, default=0)
    be.add_argument("--queries", dest="query_count", type=int, default=2000)
    be.add_argument("--runs", type=int, default=3)
    be.add_argument("--warmup", type=int, default=1)
    be.add_argument("-o", "--output", type=Path)

    tr = sub.add_parser("triangles", help="list triangles of a graph file")
    tr.add_argument("-g", "--graph", type=Path, required=True)
    tr.add_argument("--max-count", dest="max_count", type=int, default=1 << 62)
    tr.add_argument("--alpha", type=float, default=0.5)
    return p


COMMANDS = {
    "build": run_build,
    "query": run_query,
    "check": run_check,
    "bench": run_bench,
    "triangles": run_triangles,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        return COMMANDS[cfg.command](cfg)
    except (TimelineError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
