"""Scaling experiments: query latency vs t, build time vs t, and the EXISTS trade-off.

    python3 scripts/scaling.py [--quick]

Prints plain tables; nothing is written to disk.
"""
import argparse
import math
import random
import statistics
import time

from graphtimeline.conn_tree import build_conn_tree
from graphtimeline.exists import ExistsStats, build_exists, exists
from graphtimeline.fingerprints import compute_conn_fingerprints
from graphtimeline.oracle import gen_timeline
from graphtimeline.query import QueryEngine, QueryStats
from graphtimeline.timeline import compute_lifespans


def queries(tl, n, count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        x = rng.randint(1, tl.t0)
        out.append((rng.randint(1, n), rng.randint(1, n), x, rng.randint(x, tl.t0)))
    return out


def median_ms(fn, runs):
    out = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        out.append((time.perf_counter() - t0) * 1e3)
    return statistics.median(out)


def forall_latency(exps, n=64):
    print(f"FORALL latency, n={n}")
    print(f"{'t':>8} {'build_ms':>10} {'query_ns':>10} {'max_visits':>10}")
    for B in exps:
        tl = gen_timeline(5, n, 1 << B, avg_degree=3.0)
        t0 = time.perf_counter()
        eng = QueryEngine.build(tl, forexists=False)
        build = (time.perf_counter() - t0) * 1e3
        qs = queries(tl, n, 10_000, B)
        for q in qs[:1000]:
            eng.forall(*q)
        stats = QueryStats()
        t0 = time.perf_counter_ns()
        for q in qs:
            eng.forall(*q, stats)
        per = (time.perf_counter_ns() - t0) / len(qs)
        print(f"{1 << B:>8} {build:>10.0f} {per:>10.0f} {stats.max_visits:>10}")


def build_scaling(exps, n=64, runs=3):
    print(f"\nconn tree + fingerprints build, n={n}")
    print(f"{'t':>8} {'ms':>10} {'ratio':>7}")
    prev = None
    for B in exps:
        tl = gen_timeline(6, n, 1 << B, avg_degree=3.0)
        ls = compute_lifespans(tl)
        ms = median_ms(lambda: compute_conn_fingerprints(build_conn_tree(tl, ls)), runs)
        print(f"{1 << B:>8} {ms:>10.0f} {'' if prev is None else f'{ms / prev:.2f}':>7}")
        prev = ms


def exists_tradeoff(exps, alphas, runs=3):
    print("\nEXISTS structure, n = sqrt(t)")
    print(f"{'t':>8} {'alpha':>6} {'blocks':>7} {'build_ms':>10} {'mean_probes':>12} {'max_probes':>11} {'query_us':>9}")
    for B in exps:
        t = 1 << B
        n = round(math.sqrt(t))
        tl = gen_timeline(7, n, t, avg_degree=2.0)
        tree = build_conn_tree(tl, compute_lifespans(tl))
        qs = queries(tl, n, 3000, B)
        for alpha in alphas:
            es = build_exists(tree, alpha, clamp=False)
            ms = median_ms(lambda: build_exists(tree, alpha, clamp=False), runs)
            stats = ExistsStats()
            t0 = time.perf_counter_ns()
            for q in qs:
                exists(es, *q, stats=stats)
            us = (time.perf_counter_ns() - t0) / len(qs) / 1e3
            print(
                f"{t:>8} {alpha:>6.2f} {len(es.blocks):>7} {ms:>10.0f} "
                f"{stats.probes / stats.queries:>12.1f} {stats.max_probes:>11} {us:>9.1f}"
            )


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--quick", action="store_true", help="smaller sizes, for a smoke run")
    args = p.parse_args()
    if args.quick:
        forall_latency([10, 12])
        build_scaling([10, 11])
        exists_tradeoff([10], [0.25, 0.5])
    else:
        forall_latency([12, 14, 16, 18])
        build_scaling([13, 14, 15, 16])
        exists_tradeoff([12, 14, 16], [0.25, 0.5, 0.75])


if __name__ == "__main__":
    main()
