import pytest

from nameclust.records import AuthorMention, RawRecord


def rec(record_id, *names, kind="article"):
    mentions = tuple(
        AuthorMention(surface_name=" ".join(n.split()[:-1]), gold_id=n.split()[-1], raw=n)
        if n.split()[-1].isdigit() and len(n.split()[-1]) == 4
        else AuthorMention(surface_name=n, gold_id=None, raw=n)
        for n in names
    )
    return RawRecord(record_id=record_id, kind=kind, title=f"T {record_id}",
                     venue=None, year=2015, mentions=mentions)


@pytest.fixture
def fig1_records():
    """Small network mirroring the worked distance examples:

    p1 and p2 share the co-author 'Shared X' (distance 1 for the block
    'Daniel Schall'); p3 and p4 connect only through a co-author of a
    co-author via p5 (distance 3 for the block 'Eric Dubois').
    """
    return [
        rec("k/p1", "Daniel Schall 0001", "Shared X"),
        rec("k/p2", "Daniel Schall 0001", "Shared X"),
        rec("k/p3", "Eric Dubois 0001", "Alice A"),
        rec("k/p4", "Eric Dubois 0001", "Bob B"),
        rec("k/p5", "Alice A", "Bob B"),
    ]
