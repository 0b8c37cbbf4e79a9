"""Publication records, author mentions, and the canonical JSONL format."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import MalformedMentionError

KINDS = (
    "article",
    "inproceedings",
    "proceedings",
    "book",
    "incollection",
    "phdthesis",
    "mastersthesis",
    "www",
    "other",
)

# trailing " NNNN" (one space, exactly four digits) marks a manually
# disambiguated homonym; three or five digits do not count
_SUFFIX_RE = re.compile(r"^(.*\S) (\d{4})$")


@dataclass(frozen=True)
class AuthorMention:
    surface_name: str
    gold_id: str | None
    raw: str = field(compare=False)


@dataclass(frozen=True)
class RawRecord:
    record_id: str
    kind: str
    title: str
    venue: str | None
    year: int | None
    mentions: tuple[AuthorMention, ...]


def normalize_name(name: str) -> str:
    """Trim and collapse internal whitespace. No diacritic folding."""
    return " ".join(name.split())


def parse_mention(raw: str) -> AuthorMention:
    """Split a printed author name into surface name and optional gold id.

    "Wei Li 0002" -> ("Wei Li", "0002"); "Wei Li 123" has no suffix.
    """
    name = normalize_name(raw)
    if not name:
        raise MalformedMentionError(f"empty author mention: {raw!r}")
    m = _SUFFIX_RE.match(name)
    if m:
        return AuthorMention(surface_name=m.group(1), gold_id=m.group(2), raw=raw)
    return AuthorMention(surface_name=name, gold_id=None, raw=raw)


def gold_key(mention: AuthorMention) -> str:
    assert mention.gold_id is not None
    return f"{mention.surface_name} {mention.gold_id}"


def record_to_json(rec: RawRecord) -> str:
    obj = {
        "id": rec.record_id,
        "kind": rec.kind,
        "title": rec.title,
        "venue": rec.venue,
        "year": rec.year,
        "authors": [
            {"name": m.surface_name, "gold_id": m.gold_id} for m in rec.mentions
        ],
    }
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def record_from_json(line: str) -> RawRecord:
    obj = json.loads(line)
    mentions = []
    for a in obj["authors"]:
        raw = a["name"] if a["gold_id"] is None else f"{a['name']} {a['gold_id']}"
        mentions.append(
            AuthorMention(surface_name=a["name"], gold_id=a["gold_id"], raw=raw)
        )
    return RawRecord(
        record_id=obj["id"],
        kind=obj["kind"],
        title=obj["title"],
        venue=obj["venue"],
        year=obj["year"],
        mentions=tuple(mentions),
    )


def write_records(records, path) -> int:
    """Write records as one JSON object per line. Returns the count."""
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_to_json(rec))
            fh.write("\n")
            n += 1
    return n


def read_records(path):
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield record_from_json(line)
