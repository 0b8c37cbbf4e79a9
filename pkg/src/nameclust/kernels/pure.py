"""Pure Python bounded BFS over the bipartite adjacency.

Fallback for builds without the compiled extension; identical contract
and visitation order.
"""

from __future__ import annotations


def neighbors_within(pub_lists, auth_lists, src, max_hops, excluded):
    """Publications reachable from ``src`` in at most ``max_hops`` pub hops.

    ``pub_lists[p]`` holds author ids adjacent to publication ``p``;
    ``auth_lists[a]`` holds publication ids adjacent to author ``a``.
    The author node ``excluded`` (or -1 for none) is never traversed.
    Returns parallel lists (pubs, hop counts); ``src`` is not included.
    """
    seen_pubs = {src}
    seen_auths = set()
    frontier = [src]
    out_pubs = []
    out_hops = []
    for hop in range(1, max_hops + 1):
        nxt = []
        for p in frontier:
            for a in pub_lists[p]:
                if a == excluded or a in seen_auths:
                    continue
                seen_auths.add(a)
                for q in auth_lists[a]:
                    if q in seen_pubs:
                        continue
                    seen_pubs.add(q)
                    nxt.append(q)
                    out_pubs.append(q)
                    out_hops.append(hop)
        if not nxt:
            break
        frontier = nxt
    return out_pubs, out_hops
