#!/usr/bin/env python3
"""Compare the compiled BFS kernel against the pure Python fallback.

Builds a synthetic corpus, then times bounded neighborhood queries
(the hot loop behind every pairwise comparison) and a full pipeline
pass (threshold clustering at 1 and 3) on both kernels.

Usage: python benchmarks/bench_kernels.py [--blocks N] [--queries N]
"""

import argparse
import time

from nameclust.cluster import cluster_block
from nameclust.gold import build_blocks, build_gold_standard
from nameclust.graph import build_graph, pubs_within
from nameclust.kernels import DEFAULT_KERNEL
from nameclust.synth import SynthConfig, generate_corpus


def time_queries(graph, pubs, n_queries):
    start = time.perf_counter()
    touched = 0
    for i in range(n_queries):
        touched += len(pubs_within(graph, pubs[i % len(pubs)], 2, None))
    return time.perf_counter() - start, touched


def time_clustering(graph, blocks):
    start = time.perf_counter()
    for block in blocks:
        cluster_block(block, graph, 1)
        cluster_block(block, graph, 3)
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--blocks", type=int, default=60)
    ap.add_argument("--queries", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    records = generate_corpus(SynthConfig(
        blocks=args.blocks, authors_per_block=(2, 4),
        pubs_per_author=(30, 80), bridge_rate=0.2, seed=args.seed))
    blocks = list(build_blocks(build_gold_standard(records)))
    print(f"corpus: {len(records)} records, {args.blocks} blocks")

    kernels = ["pure"]
    if DEFAULT_KERNEL == "compiled":
        kernels.insert(0, "compiled")
    else:
        print("compiled kernel not built; timing pure only")

    results = {}
    for kernel in kernels:
        graph = build_graph(records, kernel=kernel)
        pubs = graph.pub_keys
        q_time, touched = time_queries(graph, pubs, args.queries)
        c_time = time_clustering(graph, blocks)
        results[kernel] = (q_time, c_time)
        print(f"{kernel:>9}: {args.queries} order-2 queries in {q_time:.3f}s "
              f"({args.queries / q_time:,.0f}/s, {touched} pubs reached), "
              f"clustering pass {c_time:.3f}s")

    if len(results) == 2:
        qs = results["pure"][0] / results["compiled"][0]
        cs = results["pure"][1] / results["compiled"][1]
        print(f"speedup: {qs:.1f}x on queries, {cs:.1f}x on the clustering pass")


if __name__ == "__main__":
    main()
