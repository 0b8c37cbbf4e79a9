# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bounded BFS over the bipartite CSR adjacency.

Mirrors nameclust.kernels.pure exactly, including visitation order.
Scratch arrays live in a per-graph workspace so hot queries allocate
nothing; visited marks use a stamp counter instead of clearing.
"""


def neighbors_within(long long[::1] pub_ptr, int[::1] pub_adj,
                     long long[::1] auth_ptr, int[::1] auth_adj,
                     long long[::1] pub_seen, long long[::1] auth_seen,
                     long long stamp, int src, int max_hops, int excluded,
                     int[::1] frontier, int[::1] nxt,
                     int[::1] out_pubs, signed char[::1] out_hops):
    """Fill out_pubs/out_hops with reachable publications; return count."""
    cdef Py_ssize_t n_front = 1
    cdef Py_ssize_t n_next, i, j, k
    cdef int p, a, q
    cdef int hop
    cdef Py_ssize_t n_out = 0

    pub_seen[src] = stamp
    frontier[0] = src
    for hop in range(1, max_hops + 1):
        n_next = 0
        for i in range(n_front):
            p = frontier[i]
            for j in range(pub_ptr[p], pub_ptr[p + 1]):
                a = pub_adj[j]
                if a == excluded or auth_seen[a] == stamp:
                    continue
                auth_seen[a] = stamp
                for k in range(auth_ptr[a], auth_ptr[a + 1]):
                    q = auth_adj[k]
                    if pub_seen[q] == stamp:
                        continue
                    pub_seen[q] = stamp
                    nxt[n_next] = q
                    n_next += 1
                    out_pubs[n_out] = q
                    out_hops[n_out] = <signed char> hop
                    n_out += 1
        if n_next == 0:
            break
        frontier, nxt = nxt, frontier
        n_front = n_next
    return n_out
