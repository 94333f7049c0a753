"""Wheel subgraphs and the terminal-goodness predicate.

A wheel is a rim cycle plus a center off the cycle joined to it by at
least three spoke edges.  For a terminal set S (never containing the
center), a wheel is S-good when every S-vertex lying on the wheel is a
graph-neighbor of the center; the spoke edge itself is not required.
"""

from __future__ import annotations

from dataclasses import dataclass

from wheelkit.errors import InputDomainError, ResourceLimitError
from wheelkit.graph import Graph, Vertex, vkey

DEFAULT_WHEEL_LIMIT = 12


@dataclass(frozen=True)
class Wheel:
    center: Vertex
    rim: tuple[Vertex, ...]  # the cycle W - center, in cyclic order
    spokes: frozenset[Vertex]

    def vertex_set(self) -> frozenset[Vertex]:
        return frozenset(self.rim) | {self.center}


def is_wheel(g: Graph, w: Wheel) -> bool:
    """True iff all wheel invariants hold inside g."""
    if len(w.spokes) < 3:
        return False
    if w.center in w.rim:
        return False
    if len(set(w.rim)) != len(w.rim) or len(w.rim) < 3:
        return False
    if not all(g.has_vertex(x) for x in w.rim) or not g.has_vertex(w.center):
        return False
    for i, x in enumerate(w.rim):
        if not g.has_edge(x, w.rim[(i + 1) % len(w.rim)]):
            return False
    rimset = set(w.rim)
    return all(s in rimset and g.has_edge(w.center, s) for s in w.spokes)


def is_s_good(g: Graph, w: Wheel, s) -> bool:
    """True iff every S-vertex on the wheel is adjacent to its center."""
    sset = set(s)
    if w.center in sset:
        raise InputDomainError(
            "a wheel centered at a terminal has no defined goodness; "
            "the terminal set lives in the graph minus the center"
        )
    nbrs = set(g.neighbors(w.center))
    return all(v in nbrs for v in sset & set(w.rim))


def find_s_good_wheel(tg, *, limit: int = DEFAULT_WHEEL_LIMIT) -> Wheel | None:
    """Exhaustive search for an S-good wheel in a terminal graph.

    Complete at the configured bound: None is returned only when no
    S-good wheel exists.  Candidate centers (never terminals) are tried
    by descending degree, rim cycles by increasing length; the first
    witness found is returned.
    """
    g: Graph = tg.graph
    sset = set(tg.terminals)
    if g.n > limit:
        raise ResourceLimitError(f"wheel search capped at {limit} vertices, got {g.n}")
    centers = sorted((v for v in g.vertices if v not in sset), key=lambda v: (-g.degree(v), vkey(v)))
    for center in centers:
        if g.degree(center) < 3:
            continue
        rest = g.induced([v for v in g.vertices if v != center])
        spoke_ok = set(g.neighbors(center))
        bad_rim = sset - spoke_ok  # any rim vertex here breaks S-goodness
        w = _first_good_rim(rest, center, spoke_ok, bad_rim)
        if w is not None:
            return w
    return None


def _first_good_rim(rest: Graph, center: Vertex, spoke_ok: set, bad_rim: set) -> Wheel | None:
    """Shortest rim cycle (in canonical order) avoiding bad_rim and
    carrying at least three center-neighbors."""
    order = {v: i for i, v in enumerate(rest.vertices)}

    def extend(path: list[Vertex], used: set[Vertex], target_len: int):
        if len(path) == target_len:
            if rest.has_edge(path[-1], path[0]) and order[path[1]] < order[path[-1]]:
                if sum(1 for v in path if v in spoke_ok) >= 3:
                    yield tuple(path)
            return
        for w in rest.neighbors(path[-1]):
            if w in used or order[w] <= order[path[0]] or w in bad_rim:
                continue
            path.append(w)
            used.add(w)
            yield from extend(path, used, target_len)
            used.remove(w)
            path.pop()

    for length in range(3, rest.n + 1):
        for start in rest.vertices:
            if start in bad_rim:
                continue
            for rim in extend([start], {start}, length):
                spokes = frozenset(v for v in rim if v in spoke_ok)
                return Wheel(center, rim, spokes)
    return None


def wheel_from_cofacial(emb, x: Vertex) -> Wheel | None:
    """The wheel formed by everything cofacial with x, when that closure
    is a wheel centered at x (its link is a single cycle)."""
    from wheelkit.planarity import cofacial_closure

    closure = cofacial_closure(emb, x)
    nbrs = [v for v in closure.vertices if closure.has_edge(x, v)]
    if len(nbrs) < 3:
        return None
    link_vs = [v for v in closure.vertices if v != x]
    link = closure.induced(link_vs)
    if any(link.degree(v) != 2 for v in link.vertices) or not link.is_connected():
        return None
    if link.m != link.n:
        return None
    # Walk the cycle into an explicit cyclic order.
    start = link.vertices[0]
    rim = [start]
    prev = None
    while True:
        cands = [v for v in link.neighbors(rim[-1]) if v != prev]
        nxt = cands[0]
        if nxt == start:
            break
        prev = rim[-1]
        rim.append(nxt)
    if len(rim) != link.n:
        return None
    spokes = frozenset(nbrs)
    return Wheel(x, tuple(rim), spokes) if set(nbrs) <= set(rim) else None
