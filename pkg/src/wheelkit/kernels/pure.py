"""Pure-Python search kernels over bitmask adjacency.

These are the hot loops of the whole package: exact 4-coloring and exact
vertex-disjoint linkage.  A compiled twin lives in ``_fast.pyx``; the two
must return bit-identical answers, so any change here must be mirrored
there.  Vertex counts are capped at 63 so vertex sets fit in one word.

Both kernels are deterministic:
- coloring picks the uncolored vertex with the fewest admissible colors
  (ties by index) and tries colors in ascending order;
- linkage runs iterative deepening on the total path length and grows
  paths by ascending neighbor index.
"""

from __future__ import annotations

BACKEND = "pure"

_FULL = 0b1111


def four_color_masks(n: int, adj: list[int]) -> list[int] | None:
    """Exact proper 4-coloring; colors are 0..3, or None if none exists.

    Backtracking with forced-move propagation: assigning a color removes
    it from uncolored neighbors, and a neighbor left with no admissible
    color fails the branch immediately.
    """
    if n == 0:
        return []
    colors = [-1] * n
    avail = [_FULL] * n
    nbrs = [_bits(adj[v]) for v in range(n)]

    def solve() -> bool:
        best = -1
        best_k = 5
        for v in range(n):
            if colors[v] == -1:
                k = _popcount(avail[v])
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
        mask = avail[v]
        for c in range(4):
            bit = 1 << c
            if not mask & bit:
                continue
            colors[v] = c
            trail = []
            dead = False
            for u in nbrs[v]:
                if colors[u] == -1 and avail[u] & bit:
                    avail[u] &= ~bit
                    trail.append(u)
                    if avail[u] == 0:
                        dead = True
                        break
            if not dead and solve():
                return True
            for u in trail:
                avail[u] |= bit
            colors[v] = -1
        return False

    return colors[:] if solve() else None


def linkage_masks(
    n: int,
    adj: list[int],
    pairs: list[tuple[int, int]],
    forbidden: int,
) -> list[list[int]] | None:
    """Exact vertex-disjoint linkage for the given terminal pairs.

    Finds simple paths, one per pair, whose interiors avoid `forbidden`,
    every pair endpoint, and each other.  Paths may share endpoints only
    where the pairs themselves do.  Complete: returns None only when no
    linkage exists.  Iterative deepening on the total edge count makes the
    first witness a minimum-total one.
    """
    k = len(pairs)
    if k == 0:
        return []
    ep_mask = 0
    for s, t in pairs:
        ep_mask |= (1 << s) | (1 << t)

    # Static per-pair lower bounds: BFS distance ignoring the other paths
    # (admissible).  Interiors may not use forbidden vertices or foreign
    # endpoints, so those are excluded from the frontier except at the
    # pair's own endpoints.
    lbs = []
    for s, t in pairs:
        block = (forbidden | ep_mask) & ~((1 << s) | (1 << t))
        d = _bfs_dist(n, adj, s, t, block)
        if d < 0:
            return None
        lbs.append(d)
    suffix_lb = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_lb[i] = suffix_lb[i + 1] + lbs[i]

    free = n - _popcount((ep_mask | forbidden) & ((1 << n) - 1))
    ub = free + k
    paths: list[list[int]] = [[] for _ in range(k)]
    nbrs = [_bits(adj[v]) for v in range(n)]

    def reachable_all(i: int, used: int) -> bool:
        for j in range(i, k):
            s, t = pairs[j]
            block = (used | forbidden) & ~((1 << s) | (1 << t))
            if _bfs_dist(n, adj, s, t, block) < 0:
                return False
        return True

    def route(i: int, used: int, budget: int) -> bool:
        if i == k:
            return True
        if not reachable_all(i, used):
            return False
        s, t = pairs[i]
        limit = budget - suffix_lb[i + 1]

        def extend(v: int, length: int, interior: int) -> bool:
            for w in nbrs[v]:
                if w == t:
                    if length + 1 > limit:
                        continue
                    paths[i] = _path_from(s, t, interior_order)
                    if route(i + 1, used | interior, budget - (length + 1)):
                        return True
                    continue
                bit = 1 << w
                # used already contains forbidden and all pair endpoints
                if (used | interior) & bit:
                    continue
                if length + 1 >= limit:
                    continue
                interior_order.append(w)
                if extend(w, length + 1, interior | bit):
                    return True
                interior_order.pop()
            return False

        interior_order: list[int] = []
        # Direct edge s-t handled inside extend (w == t at length 0).
        return extend(s, 0, 0)

    total = suffix_lb[0]
    while total <= ub:
        if route(0, ep_mask | forbidden, total):
            return [p[:] for p in paths]
        total += 1
    return None


# -- helpers ---------------------------------------------------------------


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def _bfs_dist(n: int, adj: list[int], s: int, t: int, block: int) -> int:
    """Shortest path length from s to t with interior vertices outside
    `block`; -1 when unreachable."""
    if s == t:
        return 0
    if adj[s] & (1 << t):
        return 1
    seen = (1 << s) | block
    frontier = adj[s] & ~seen
    d = 1
    while frontier:
        # t is never expanded through: reaching it returns immediately.
        if frontier & (1 << t):
            return d
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~seen
        d += 1
    return -1


def _path_from(s: int, t: int, interior_order: list[int]) -> list[int]:
    return [s] + interior_order + [t]
