# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``kernels.pure``.

Same algorithms, same deterministic search order, bit-identical answers;
any change must be mirrored in the pure module.  Vertex sets are 64-bit
words, so n is capped at 63 upstream.
"""

BACKEND = "fast"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MAXPAIRS = 16

ctypedef unsigned long long u64


cdef struct ColorState:
    int n
    int colors[MAXN]
    int avail[MAXN]
    int nbrs[MAXN][MAXN]
    int nbr_count[MAXN]


cdef bint _color_solve(ColorState* st) nogil:
    cdef int best = -1, best_k = 5, v, k, c, bit, i, u, ti
    cdef int trail[MAXN]
    cdef int trail_len
    cdef bint dead
    for v in range(st.n):
        if st.colors[v] == -1:
            k = __builtin_popcountll(<unsigned long long> st.avail[v])
            if k < best_k:
                best_k = k
                best = v
                if k <= 1:
                    break
    if best == -1:
        return True
    if best_k == 0:
        return False
    v = best
    for c in range(4):
        bit = 1 << c
        if not st.avail[v] & bit:
            continue
        st.colors[v] = c
        trail_len = 0
        dead = False
        for i in range(st.nbr_count[v]):
            u = st.nbrs[v][i]
            if st.colors[u] == -1 and st.avail[u] & bit:
                st.avail[u] &= ~bit
                trail[trail_len] = u
                trail_len += 1
                if st.avail[u] == 0:
                    dead = True
                    break
        if not dead and _color_solve(st):
            return True
        for ti in range(trail_len):
            st.avail[trail[ti]] |= bit
        st.colors[v] = -1
    return False


def four_color_masks(int n, adj):
    """Exact proper 4-coloring; colors are 0..3, or None."""
    if n == 0:
        return []
    cdef ColorState st
    cdef int v, w, cnt
    cdef u64 mask, b
    st.n = n
    for v in range(n):
        st.colors[v] = -1
        st.avail[v] = 0b1111
        cnt = 0
        mask = <u64> adj[v]
        while mask:
            b = mask & (0 - mask)
            st.nbrs[v][cnt] = __builtin_ctzll(b)
            cnt += 1
            mask ^= b
        st.nbr_count[v] = cnt
    if _color_solve(&st):
        return [st.colors[v] for v in range(n)]
    return None


cdef struct LinkState:
    int n
    int k
    u64 adj[MAXN]
    int pair_s[MAXPAIRS]
    int pair_t[MAXPAIRS]
    int suffix_lb[MAXPAIRS + 1]
    u64 forbidden
    u64 ep_mask
    int interior[MAXPAIRS][MAXN]
    int interior_len[MAXPAIRS]


cdef int _bfs_dist(LinkState* st, int s, int t, u64 block) nogil:
    cdef u64 seen, frontier, nxt, f, b, tbit
    cdef int d
    if s == t:
        return 0
    tbit = (<u64> 1) << t
    if st.adj[s] & tbit:
        return 1
    seen = ((<u64> 1) << s) | block
    frontier = st.adj[s] & ~seen
    d = 1
    while frontier:
        if frontier & tbit:
            return d
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            b = f & (0 - f)
            nxt |= st.adj[__builtin_ctzll(b)]
            f ^= b
        frontier = nxt & ~seen
        d += 1
    return -1


cdef bint _reachable_all(LinkState* st, int i, u64 used) nogil:
    cdef int j, s, t
    cdef u64 block
    for j in range(i, st.k):
        s = st.pair_s[j]
        t = st.pair_t[j]
        block = (used | st.forbidden) & ~(((<u64> 1) << s) | ((<u64> 1) << t))
        if _bfs_dist(st, s, t, block) < 0:
            return False
    return True


cdef bint _route(LinkState* st, int i, u64 used, int budget) nogil:
    if i == st.k:
        return True
    if not _reachable_all(st, i, used):
        return False
    st.interior_len[i] = 0
    return _extend(st, i, st.pair_s[i], 0, 0, used, budget)


cdef bint _extend(LinkState* st, int i, int v, int length, u64 interior, u64 used, int budget) nogil:
    cdef int t = st.pair_t[i]
    cdef int limit = budget - st.suffix_lb[i + 1]
    cdef u64 mask = st.adj[v]
    cdef u64 b, bit
    cdef int w
    while mask:
        b = mask & (0 - mask)
        w = __builtin_ctzll(b)
        mask ^= b
        if w == t:
            if length + 1 > limit:
                continue
            if _route(st, i + 1, used | interior, budget - (length + 1)):
                return True
            st.interior_len[i] = length  # restore after deeper failure
            continue
        bit = (<u64> 1) << w
        if (used | interior) & bit:
            continue
        if length + 1 >= limit:
            continue
        st.interior[i][length] = w
        st.interior_len[i] = length + 1
        if _extend(st, i, w, length + 1, interior | bit, used, budget):
            return True
        st.interior_len[i] = length
    return False


def linkage_masks(int n, adj, pairs, forbidden):
    """Exact vertex-disjoint linkage; mirrors kernels.pure.linkage_masks."""
    cdef LinkState st
    cdef int k = len(pairs)
    cdef int i, s, t, d, total, ub, free_count
    cdef u64 block, full
    if k == 0:
        return []
    if k > MAXPAIRS:
        raise ValueError("too many pairs for the compiled kernel")
    st.n = n
    st.k = k
    st.forbidden = <u64> forbidden
    st.ep_mask = 0
    for i in range(n):
        st.adj[i] = <u64> adj[i]
    for i in range(k):
        s, t = pairs[i]
        st.pair_s[i] = s
        st.pair_t[i] = t
        st.ep_mask |= ((<u64> 1) << s) | ((<u64> 1) << t)

    cdef int lbs[MAXPAIRS]
    for i in range(k):
        s = st.pair_s[i]
        t = st.pair_t[i]
        block = (st.forbidden | st.ep_mask) & ~(((<u64> 1) << s) | ((<u64> 1) << t))
        d = _bfs_dist(&st, s, t, block)
        if d < 0:
            return None
        lbs[i] = d
    st.suffix_lb[k] = 0
    for i in range(k - 1, -1, -1):
        st.suffix_lb[i] = st.suffix_lb[i + 1] + lbs[i]

    full = ((<u64> 1) << n) - 1 if n < 64 else <u64> 0xFFFFFFFFFFFFFFFF
    free_count = n - __builtin_popcountll((st.ep_mask | st.forbidden) & full)
    ub = free_count + k

    total = st.suffix_lb[0]
    while total <= ub:
        for i in range(k):
            st.interior_len[i] = 0
        if _route(&st, 0, st.ep_mask | st.forbidden, total):
            out = []
            for i in range(k):
                path = [st.pair_s[i]]
                for d in range(st.interior_len[i]):
                    path.append(st.interior[i][d])
                path.append(st.pair_t[i])
                out.append(path)
            return out
        total += 1
    return None
