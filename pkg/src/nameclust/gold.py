"""Gold standard extraction and homonym blocks."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import DataIntegrityError
from .records import gold_key


@dataclass
class GoldStandard:
    """block_key -> gold author key -> set of record ids."""

    entries: dict[str, dict[str, set[str]]] = field(default_factory=dict)

    @property
    def author_count(self) -> int:
        return sum(len(keys) for keys in self.entries.values())


@dataclass(frozen=True)
class Block:
    block_key: str
    members: frozenset[str]
    gold_label: dict[str, str]

    @property
    def m(self) -> int:
        return len(self.members)

    @property
    def gold_classes(self) -> dict[str, frozenset[str]]:
        classes: dict[str, set[str]] = {}
        for rid, key in self.gold_label.items():
            classes.setdefault(key, set()).add(rid)
        return {k: frozenset(v) for k, v in classes.items()}


@dataclass
class BlockSet:
    blocks: list[Block]

    @property
    def n(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def build_gold_standard(records, min_gold_authors: int = 1) -> GoldStandard:
    """Collect suffix-identified mentions into the evaluation universe.

    A block is retained when it has at least ``min_gold_authors`` distinct
    gold identities (default 1: any name with at least one disambiguated
    author).
    """
    entries: dict[str, dict[str, set[str]]] = {}
    for rec in records:
        for mention in rec.mentions:
            if mention.gold_id is None:
                continue
            block = entries.setdefault(mention.surface_name, {})
            block.setdefault(gold_key(mention), set()).add(rec.record_id)
    if min_gold_authors > 1:
        entries = {
            key: authors
            for key, authors in entries.items()
            if len(authors) >= min_gold_authors
        }
    return GoldStandard(entries=entries)


def build_blocks(gold: GoldStandard) -> BlockSet:
    blocks = []
    for block_key in sorted(gold.entries):
        labels: dict[str, str] = {}
        for author_key, rids in gold.entries[block_key].items():
            for rid in rids:
                prev = labels.get(rid)
                if prev is not None and prev != author_key:
                    raise DataIntegrityError(
                        f"record {rid!r} carries both {prev!r} and "
                        f"{author_key!r} in block {block_key!r}"
                    )
                labels[rid] = author_key
        blocks.append(
            Block(
                block_key=block_key,
                members=frozenset(labels),
                gold_label=labels,
            )
        )
    return BlockSet(blocks=blocks)


def sample_blocks(bs: BlockSet, count: int, seed: int) -> BlockSet:
    """Uniform sample without replacement, deterministic per seed."""
    if count > bs.n:
        raise ValueError(f"cannot sample {count} of {bs.n} blocks")
    ordered = sorted(bs.blocks, key=lambda b: b.block_key)
    chosen = random.Random(seed).sample(ordered, count)
    chosen.sort(key=lambda b: b.block_key)
    return BlockSet(blocks=chosen)


def write_gold(gold: GoldStandard, path) -> None:
    obj = {
        bk: {ak: sorted(rids) for ak, rids in authors.items()}
        for bk, authors in gold.entries.items()
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, ensure_ascii=False, sort_keys=True, indent=1)
        fh.write("\n")


def read_gold(path) -> GoldStandard:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    return GoldStandard(
        entries={
            bk: {ak: set(rids) for ak, rids in authors.items()}
            for bk, authors in obj.items()
        }
    )
