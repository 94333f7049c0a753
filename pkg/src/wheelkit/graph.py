"""Immutable simple graphs and the surgery operations used everywhere else.

Vertex ids are opaque strings.  Derived graphs keep the original ids, and
new ids are always caller-supplied; nothing in this module invents names.
Vertices and edges are kept in a deterministic canonical order so that
serialized output is byte-stable across runs.

All operations are pure: inputs are never mutated, equal inputs give
identical outputs, and values are safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator

from wheelkit.errors import InputDomainError

Vertex = str
Edge = tuple[Vertex, Vertex]


def vkey(v: Vertex) -> tuple[int, str]:
    """Canonical vertex sort key; numeric-looking ids order naturally."""
    return (len(v), v)


def norm_edge(u: Vertex, v: Vertex) -> Edge:
    """The canonical (ordered) form of the undirected edge {u, v}."""
    if u == v:
        raise InputDomainError(f"self-loop at {u!r}")
    return (u, v) if vkey(u) < vkey(v) else (v, u)


@total_ordering
class Graph:
    """A finite simple undirected graph with string vertex ids."""

    __slots__ = ("_vertices", "_edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Iterable = ()):
        vs = set(vertices)
        es = set()
        for e in edges:
            u, v = e
            if not isinstance(u, str) or not isinstance(v, str):
                raise InputDomainError(f"vertex ids must be strings: {e!r}")
            es.add(norm_edge(u, v))
            vs.add(u)
            vs.add(v)
        self._vertices: tuple[Vertex, ...] = tuple(sorted(vs, key=vkey))
        self._edges: tuple[Edge, ...] = tuple(sorted(es, key=lambda e: (vkey(e[0]), vkey(e[1]))))
        adj: dict[Vertex, set[Vertex]] = {v: set() for v in self._vertices}
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[Vertex, tuple[Vertex, ...]] = {
            v: tuple(sorted(ns, key=vkey)) for v, ns in adj.items()
        }
        self._hash = hash((self._vertices, self._edges))

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: Vertex) -> bool:
        return v in self._adj

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        if v not in self._adj:
            raise InputDomainError(f"unknown vertex {v!r}")
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    # -- derived graphs ---------------------------------------------------

    def induced(self, vs: Iterable[Vertex]) -> "Graph":
        keep = set(vs)
        unknown = keep - set(self._vertices)
        if unknown:
            raise InputDomainError(f"unknown vertex ids: {sorted(unknown, key=vkey)}")
        return Graph(keep, (e for e in self._edges if e[0] in keep and e[1] in keep))

    def components(self) -> tuple[frozenset[Vertex], ...]:
        seen: set[Vertex] = set()
        out = []
        for start in self._vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __lt__(self, other: "Graph") -> bool:
        return (self._vertices, self._edges) < (other._vertices, other._edges)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- surgery operations ---------------------------------------------------


def remove(g: Graph, vertices: Iterable[Vertex] = (), edges: Iterable = ()) -> Graph:
    """Delete a vertex set and an edge set.

    The result is the subgraph induced on the surviving vertices, minus the
    listed edges.  Listed edges must join two surviving vertices; they need
    not actually be present.
    """
    s = set(vertices)
    unknown = s - set(g.vertices)
    if unknown:
        raise InputDomainError(f"unknown vertex ids: {sorted(unknown, key=vkey)}")
    drop = set()
    for e in edges:
        u, v = e
        if u in s or v in s:
            raise InputDomainError(f"edge {e!r} touches a deleted vertex")
        if not (g.has_vertex(u) and g.has_vertex(v)):
            raise InputDomainError(f"edge {e!r} has an unknown endpoint")
        drop.add(norm_edge(u, v))
    keep = [v for v in g.vertices if v not in s]
    return Graph(keep, (e for e in g.edges if e[0] not in s and e[1] not in s and e not in drop))


def add(g: Graph, vertices: Iterable[Vertex] = (), edges: Iterable = ()) -> Graph:
    """Add fresh vertices and new edges; simplicity is enforced.

    New vertex ids must be disjoint from the existing ones, and every new
    edge must join two distinct vertices of the enlarged graph without
    duplicating an existing edge (or another new edge).
    """
    new_vs = list(vertices)
    clash = set(new_vs) & set(g.vertices)
    if clash:
        raise InputDomainError(f"vertex ids already present: {sorted(clash, key=vkey)}")
    if len(set(new_vs)) != len(new_vs):
        raise InputDomainError("duplicate ids in new vertex set")
    allowed = set(g.vertices) | set(new_vs)
    new_es = set()
    for e in edges:
        u, v = e
        if u not in allowed or v not in allowed:
            raise InputDomainError(f"edge {e!r} has an unknown endpoint")
        ne = norm_edge(u, v)
        if g.has_edge(u, v) or ne in new_es:
            raise InputDomainError(f"duplicate edge {ne!r}")
        new_es.add(ne)
    return Graph(allowed, list(g.edges) + sorted(new_es))


def identify(g: Graph, u: Vertex, w: Vertex, name: Vertex) -> Graph:
    """Merge u and w into a single vertex `name`; parallel edges collapse."""
    if u == w:
        raise InputDomainError("cannot identify a vertex with itself")
    for x in (u, w):
        if not g.has_vertex(x):
            raise InputDomainError(f"unknown vertex {x!r}")
    if name in set(g.vertices) - {u, w}:
        raise InputDomainError(f"id {name!r} already names another vertex")
    merged_nbrs = (set(g.neighbors(u)) | set(g.neighbors(w))) - {u, w}
    keep = [v for v in g.vertices if v not in (u, w)]
    es = [e for e in g.edges if u not in e and w not in e]
    es += [norm_edge(name, x) for x in merged_nbrs]
    return Graph(keep + [name], es)


def union(g1: Graph, g2: Graph) -> Graph:
    """Vertex-wise and edge-wise union (shared ids are glued)."""
    return Graph(set(g1.vertices) | set(g2.vertices), set(g1.edges) | set(g2.edges))


# -- cycles and arcs -------------------------------------------------------


@dataclass(frozen=True)
class CycleArc:
    """A cyclically ordered vertex sequence with two marked vertices.

    The stored order is the cycle's fixed orientation (declared clockwise
    by whoever built it; this module never infers orientation).
    """

    cycle: tuple[Vertex, ...]
    u: Vertex
    v: Vertex

    def __post_init__(self):
        if len(self.cycle) < 3:
            raise InputDomainError("a cycle needs at least 3 vertices")
        if len(set(self.cycle)) != len(self.cycle):
            raise InputDomainError("cycle sequence repeats a vertex")
        for x in (self.u, self.v):
            if x not in self.cycle:
                raise InputDomainError(f"{x!r} is not on the cycle")

    def rebase(self, u: Vertex, v: Vertex) -> "CycleArc":
        """The same oriented cycle with new marked endpoints."""
        return CycleArc(self.cycle, u, v)


def cycle_arc(g: Graph, cycle: Iterable[Vertex], u: Vertex, v: Vertex) -> CycleArc:
    """Build a CycleArc after checking the cycle actually lives in g."""
    cyc = tuple(cycle)
    for i, x in enumerate(cyc):
        y = cyc[(i + 1) % len(cyc)]
        if not g.has_edge(x, y):
            raise InputDomainError(f"consecutive cycle vertices {x!r},{y!r} not adjacent")
    return CycleArc(cyc, u, v)


def arc(c: CycleArc) -> tuple[Vertex, ...]:
    """The subpath of the cycle from u to v along the stored orientation.

    Returns the single vertex when u == v, and wraps past the end of the
    stored sequence when necessary.
    """
    if c.u == c.v:
        return (c.u,)
    i = c.cycle.index(c.u)
    j = c.cycle.index(c.v)
    n = len(c.cycle)
    length = (j - i) % n
    return tuple(c.cycle[(i + k) % n] for k in range(length + 1))


# -- small constructors (shared by tests, the catalog, and generators) -----


def path_graph(names: Iterable[Vertex]) -> Graph:
    ns = list(names)
    return Graph(ns, [(ns[i], ns[i + 1]) for i in range(len(ns) - 1)])


def cycle_graph(names: Iterable[Vertex]) -> Graph:
    ns = list(names)
    if len(ns) < 3:
        raise InputDomainError("cycle needs at least 3 vertices")
    return Graph(ns, [(ns[i], ns[(i + 1) % len(ns)]) for i in range(len(ns))])


def complete_graph(names: Iterable[Vertex]) -> Graph:
    ns = list(names)
    return Graph(ns, combinations(ns, 2))


def enumerate_cycles(g: Graph, length: int) -> Iterator[tuple[Vertex, ...]]:
    """All simple cycles of exactly `length` vertices, each emitted once.

    Canonical form: starts at its vkey-smallest vertex, and of the two
    traversal directions the one whose second vertex sorts below the last
    is emitted.  Enumeration order is deterministic.
    """
    order = {v: i for i, v in enumerate(g.vertices)}

    def extend(path: list[Vertex], used: set[Vertex]) -> Iterator[tuple[Vertex, ...]]:
        if len(path) == length:
            if g.has_edge(path[-1], path[0]) and order[path[1]] < order[path[-1]]:
                yield tuple(path)
            return
        for w in g.neighbors(path[-1]):
            if w in used or order[w] <= order[path[0]]:
                continue
            path.append(w)
            used.add(w)
            yield from extend(path, used)
            used.remove(w)
            path.pop()

    for start in g.vertices:
        yield from extend([start], {start})
