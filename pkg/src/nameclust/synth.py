"""Seeded synthetic corpora with planted authors for desk-scale runs.

Each block is one ambiguous name shared by several planted authors.
Every author draws co-authors from a private pool, which makes that
author's publications a connected order-1 subgraph; bridge edges are
introduced by a per-block pool of "common" co-authors that any author
may hit at the configured rate, mimicking spurious links between
different people's work.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .records import AuthorMention, RawRecord, parse_mention


@dataclass(frozen=True)
class SynthConfig:
    blocks: int = 10
    authors_per_block: tuple[int, int] = (2, 4)
    pubs_per_author: tuple[int, int] = (5, 15)
    # private co-author pool size as a fraction of the author's pub count
    pool_factor: float = 0.4
    coauthors_per_pub: tuple[int, int] = (2, 3)
    bridge_rate: float = 0.0
    shared_pool_size: int = 4
    seed: int = 0


def generate_corpus(cfg: SynthConfig) -> list[RawRecord]:
    """Deterministic per seed; gold ids ride on the focal mentions."""
    if not 0.0 <= cfg.bridge_rate <= 1.0:
        raise ValueError("bridge rate must be in [0, 1]")
    rng = random.Random(cfg.seed)
    records: list[RawRecord] = []
    for b in range(cfg.blocks):
        block_name = f"Ambiguous Name{b:03d}"
        shared_pool = [f"Common Coauthor{b:03d}-{s}" for s in range(cfg.shared_pool_size)]
        n_authors = rng.randint(*cfg.authors_per_block)
        for a in range(1, n_authors + 1):
            n_pubs = rng.randint(*cfg.pubs_per_author)
            pool_size = max(2, round(cfg.pool_factor * n_pubs))
            pool = [f"Private Coauthor{b:03d}-{a:04d}-{i}" for i in range(pool_size)]
            for j in range(n_pubs):
                coauthors = rng.sample(pool, min(rng.randint(*cfg.coauthors_per_pub), pool_size))
                if rng.random() < cfg.bridge_rate:
                    coauthors.append(rng.choice(shared_pool))
                mentions = [parse_mention(f"{block_name} {a:04d}")]
                mentions.extend(
                    AuthorMention(surface_name=name, gold_id=None, raw=name)
                    for name in coauthors
                )
                records.append(
                    RawRecord(
                        record_id=f"synth/b{b:03d}/a{a:04d}/p{j:04d}",
                        kind="article",
                        title=f"Synthetic paper {b}-{a}-{j}",
                        venue=f"Venue {b % 7}",
                        year=2000 + (j % 20),
                        mentions=tuple(mentions),
                    )
                )
    return records
