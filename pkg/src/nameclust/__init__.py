"""Homonym author-name disambiguation over co-authorship networks."""

__version__ = "0.1.0"

from .bcubed import BcubedScores, EvalConfig, block_scores, corpus_scores, item_scores
from .cluster import Clustering, DisjointSet, cluster_block, count_comparisons
from .community import (
    LouvainConfig,
    Partition,
    WeightedPubGraph,
    build_similarity_graph,
    louvain,
    modularity,
    refine_clustering,
)
from .dblp_xml import parse_dblp
from .gold import Block, BlockSet, GoldStandard, build_blocks, build_gold_standard, sample_blocks
from .graph import INFINITE, BipartiteGraph, build_graph, pub_distance, pubs_within
from .records import AuthorMention, RawRecord, parse_mention
from .synth import SynthConfig, generate_corpus

__all__ = [
    "AuthorMention",
    "BcubedScores",
    "BipartiteGraph",
    "Block",
    "BlockSet",
    "Clustering",
    "DisjointSet",
    "EvalConfig",
    "GoldStandard",
    "INFINITE",
    "LouvainConfig",
    "Partition",
    "RawRecord",
    "SynthConfig",
    "WeightedPubGraph",
    "block_scores",
    "build_blocks",
    "build_gold_standard",
    "build_graph",
    "build_similarity_graph",
    "cluster_block",
    "corpus_scores",
    "count_comparisons",
    "generate_corpus",
    "item_scores",
    "louvain",
    "modularity",
    "parse_dblp",
    "parse_mention",
    "pub_distance",
    "pubs_within",
    "refine_clustering",
    "sample_blocks",
]
