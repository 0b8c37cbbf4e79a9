import random

import pytest

import oracles
from conftest import rec
from nameclust.cluster import (
    DisjointSet,
    cluster_block,
    count_comparisons,
    write_clusters_tsv,
)
from nameclust.gold import Block, BlockSet, build_blocks, build_gold_standard
from nameclust.graph import build_graph
from nameclust.synth import SynthConfig, generate_corpus


def _block(key, labels):
    return Block(block_key=key, members=frozenset(labels), gold_label=labels)


def _blockset(*sizes):
    blocks = []
    for i, m in enumerate(sizes):
        labels = {f"b{i}/p{j}": f"k{i}" for j in range(m)}
        blocks.append(_block(f"key{i}", labels))
    return BlockSet(blocks=blocks)


def test_count_comparisons():
    assert count_comparisons(_blockset(3, 2)) == 4
    assert count_comparisons(_blockset(1)) == 0
    assert count_comparisons(_blockset(5, 5, 5)) == 30


def test_disjoint_set():
    ds = DisjointSet("abcde")
    assert ds.union("a", "b")
    assert ds.union("b", "c")
    assert not ds.union("a", "c")
    groups = sorted(sorted(g) for g in ds.groups())
    assert groups == [["a", "b", "c"], ["d"], ["e"]]


@pytest.fixture
def fig1_setup(fig1_records):
    graph = build_graph(fig1_records)
    blocks = {b.block_key: b for b in build_blocks(build_gold_standard(fig1_records))}
    return graph, blocks


def test_threshold1_merges_shared_coauthor(fig1_setup):
    graph, blocks = fig1_setup
    c = cluster_block(blocks["Daniel Schall"], graph, 1)
    assert c.assignment["k/p1"] == c.assignment["k/p2"]
    assert len(c.clusters) == 1


def test_threshold3_merges_coauthor_of_coauthor(fig1_setup):
    graph, blocks = fig1_setup
    c1 = cluster_block(blocks["Eric Dubois"], graph, 1)
    assert len(c1.clusters) == 2  # too far at threshold 1
    c3 = cluster_block(blocks["Eric Dubois"], graph, 3)
    assert c3.assignment["k/p3"] == c3.assignment["k/p4"]
    assert len(c3.clusters) == 1


def test_all_infinite_gives_singletons():
    records = [
        rec("p1", "X Y 0001", "A A"),
        rec("p2", "X Y 0001", "B B"),
        rec("p3", "X Y 0002", "C C"),
    ]
    graph = build_graph(records)
    block = build_blocks(build_gold_standard(records)).blocks[0]
    c = cluster_block(block, graph, 3)
    assert len(c.clusters) == 3
    assert c.comparisons == 3


def test_cluster_ids_are_lowest_record_id(fig1_setup):
    graph, blocks = fig1_setup
    c = cluster_block(blocks["Daniel Schall"], graph, 1)
    assert set(c.clusters) == {"k/p1"}


def _synthetic_setup(seed, blocks=8):
    records = generate_corpus(SynthConfig(
        blocks=blocks, authors_per_block=(1, 4), pubs_per_author=(2, 12),
        bridge_rate=0.25, seed=seed))
    graph = build_graph(records)
    block_set = build_blocks(build_gold_standard(records))
    return records, graph, block_set


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("threshold", [1, 3])
def test_components_equivalence(seed, threshold):
    records, graph, block_set = _synthetic_setup(seed)
    nxg = oracles.build_nx_graph(records)
    for block in block_set:
        c = cluster_block(block, graph, threshold)
        got = sorted((frozenset(v) for v in c.clusters.values()), key=sorted)
        want = oracles.oracle_components(
            nxg, block.members, block.block_key, threshold)
        assert got == want, block.block_key


@pytest.mark.parametrize("seed", range(4))
def test_threshold3_coarsens_threshold1(seed):
    _, graph, block_set = _synthetic_setup(seed)
    for block in block_set:
        fine = cluster_block(block, graph, 1)
        coarse = cluster_block(block, graph, 3)
        for members in fine.clusters.values():
            targets = {coarse.assignment[rid] for rid in members}
            assert len(targets) == 1


def test_comparison_budget():
    _, graph, block_set = _synthetic_setup(5)
    for block in block_set:
        c = cluster_block(block, graph, 3)
        assert c.comparisons == block.m * (block.m - 1) // 2


def test_order_independence():
    # permuting pair evaluation order never changes the partition: check
    # by comparing against a shuffled-pair brute run through the oracle
    records, graph, block_set = _synthetic_setup(9, blocks=3)
    from nameclust.cluster import BlockDistanceOracle, DisjointSet as DS, groups_to_clustering

    for block in block_set:
        base = cluster_block(block, graph, 3)
        members = sorted(block.members)
        pairs = [(p, q) for i, p in enumerate(members) for q in members[i + 1:]]
        rng = random.Random(17)
        rng.shuffle(pairs)
        oracle = BlockDistanceOracle(graph, block.block_key, 3)
        ds = DS(members)
        for p, q in pairs:
            if oracle.pub_distance(p, q) <= 3:
                ds.union(p, q)
        shuffled = groups_to_clustering(block.block_key, ds.groups())
        assert sorted(map(sorted, shuffled.clusters.values())) == \
            sorted(map(sorted, base.clusters.values()))


def test_tsv_export(tmp_path, fig1_setup):
    graph, blocks = fig1_setup
    clusterings = [cluster_block(b, graph, 3) for b in blocks.values()]
    path = tmp_path / "clusters.tsv"
    write_clusters_tsv(clusterings, blocks, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "block_key\trecord_id\tcluster_id\tgold_key"
    assert "Daniel Schall\tk/p1\tk/p1\tDaniel Schall 0001" in lines
    assert len(lines) == 1 + sum(b.m for b in blocks.values())
