"""Exact 4-coloring and the forced/greedy extension schedules.

Colors are the integers 1..4.  "Greedy" always means: give the vertex the
least color in 1..4 that no already-colored neighbor uses; the schedules
shipped in `recipes` only need existence, but a fixed rule keeps every
run deterministic.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from wheelkit import kernels
from wheelkit.errors import InputDomainError, ResourceLimitError
from wheelkit.graph import Graph, Vertex

COLORS = (1, 2, 3, 4)
DEFAULT_COLOR_LIMIT = 32


class Coloring:
    """A partial assignment of vertices to colors 1..4."""

    __slots__ = ("_map",)

    def __init__(self, assignment: Mapping[Vertex, int] = ()):
        m = dict(assignment)
        for v, c in m.items():
            if c not in COLORS:
                raise InputDomainError(f"color {c!r} for {v!r} outside 1..4")
        self._map = m

    def color(self, v: Vertex) -> int | None:
        return self._map.get(v)

    @property
    def domain(self) -> frozenset[Vertex]:
        return frozenset(self._map)

    def as_dict(self) -> dict[Vertex, int]:
        return dict(self._map)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coloring) and self._map == other._map

    def __repr__(self) -> str:
        return f"Coloring({self._map!r})"


def is_proper(g: Graph, coloring: Coloring, *, total: bool = False) -> bool:
    """Independent propriety check: no edge with both ends colored equal."""
    cmap = coloring.as_dict()
    if total and set(cmap) != set(g.vertices):
        return False
    for u, v in g.edges:
        cu, cv = cmap.get(u), cmap.get(v)
        if cu is not None and cu == cv:
            return False
    return True


def four_color(g: Graph, *, limit: int = DEFAULT_COLOR_LIMIT) -> Coloring | None:
    """A total proper 4-coloring, or None; exact backtracking search."""
    if g.n > limit:
        raise ResourceLimitError(f"coloring search capped at {limit} vertices, got {g.n}")
    if g.n > kernels.MAX_KERNEL_VERTICES:
        raise ResourceLimitError("kernel vertex limit exceeded")
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.n
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]
    res = kernels.four_color_masks(g.n, adj)
    if res is None:
        return None
    out = Coloring({v: res[idx[v]] + 1 for v in g.vertices})
    assert is_proper(g, out, total=True)
    return out


def extend_greedy(g: Graph, base: Coloring, order: Iterable[Vertex]) -> Coloring | None:
    """Greedily color `order`, which must cover exactly the uncolored set.

    Each vertex receives the least color absent from its already-colored
    neighbors; None as soon as some vertex sees all four colors.
    """
    seq = list(order)
    uncolored = set(g.vertices) - base.domain
    if set(seq) != uncolored or len(seq) != len(uncolored):
        raise InputDomainError("order must cover exactly the uncolored vertices")
    return _greedy(g, base.as_dict(), seq)


def _greedy(g: Graph, cmap: dict[Vertex, int], seq: list[Vertex]) -> Coloring | None:
    for v in seq:
        seen = {cmap[u] for u in g.neighbors(v) if u in cmap}
        free = [c for c in COLORS if c not in seen]
        if not free:
            return None
        cmap[v] = free[0]
    return Coloring(cmap)


def assign_then_extend(
    g: Graph,
    base: Coloring,
    forced: Mapping[Vertex, int],
    order: Iterable[Vertex],
) -> Coloring | None:
    """Apply forced assignments, then greedily color `order`.

    The forced colors must be proper against the base coloring and against
    each other; the greedy order must cover whatever is still uncolored.
    The returned coloring is re-checked for propriety.
    """
    cmap = base.as_dict()
    for v, c in forced.items():
        if not g.has_vertex(v):
            raise InputDomainError(f"unknown vertex {v!r}")
        if v in cmap:
            raise InputDomainError(f"forced vertex {v!r} is already colored")
        if c not in COLORS:
            raise InputDomainError(f"forced color {c!r} outside 1..4")
    staged = dict(cmap)
    for v, c in forced.items():
        for u in g.neighbors(v):
            if staged.get(u) == c:
                raise InputDomainError(
                    f"forced color {c} at {v!r} clashes with neighbor {u!r}"
                )
        staged[v] = c
    seq = list(order)
    remaining = set(g.vertices) - set(staged)
    if set(seq) != remaining or len(seq) != len(remaining):
        raise InputDomainError("order must cover exactly the still-uncolored vertices")
    out = _greedy(g, staged, seq)
    if out is None:
        return None
    if not is_proper(g, out):
        return None
    return out
