"""The six-member obstruction catalog and rooted isomorphism.

Each member is a disc-planar terminal graph on five boundary terminals
t1..t5 (clockwise) with an independent terminal set and no terminal-good
wheel; the invariant suite in `verify_catalog` certifies all of that by
machine.  Member Y additionally marks the unique terminal with three
interior neighbors.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from wheelkit.graph import Graph, Vertex, vkey
from wheelkit.planarity import TerminalGraph, is_disc_planar
from wheelkit.wheels import find_s_good_wheel

from dataclasses import dataclass

TERMINALS = ("t1", "t2", "t3", "t4", "t5")


@dataclass(frozen=True)
class CatalogMember:
    name: str
    tg: TerminalGraph
    special_vertex: Vertex | None = None


def _member(name: str, interior: tuple[Vertex, ...], edges, special: Vertex | None = None) -> CatalogMember:
    g = Graph(TERMINALS + interior, edges)
    return CatalogMember(name, TerminalGraph(g, TERMINALS, ordered=True), special)


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogMember, ...]:
    """The six obstruction graphs, smallest first."""
    w1 = _member("W1", ("u",), [("u", t) for t in ("t1", "t2", "t3", "t4")])
    w2 = _member("W2", ("u",), [("u", t) for t in TERMINALS])
    x1 = _member(
        "X1",
        ("u", "v"),
        [("u", "v")]
        + [("u", t) for t in ("t1", "t2", "t3")]
        + [("v", t) for t in ("t3", "t4", "t5", "t1")],
    )
    x2 = _member(
        "X2",
        ("u", "v"),
        [("u", "v")]
        + [("u", t) for t in ("t1", "t2", "t3")]
        + [("v", t) for t in ("t3", "t4", "t5")],
    )
    y = _member(
        "Y",
        ("u", "v", "w"),
        [("u", "v"), ("v", "w")]
        + [("u", t) for t in ("t1", "t2", "t3")]
        + [("v", t) for t in ("t1", "t3", "t4")]
        + [("w", t) for t in ("t1", "t4", "t5")],
        special="t1",
    )
    z = _member(
        "Z",
        ("z", "u", "v", "w"),
        [("z", "u"), ("z", "v"), ("z", "w"), ("u", "v"), ("v", "w")]
        + [("z", t) for t in ("t1", "t2", "t5")]
        + [("u", t) for t in ("t2", "t3")]
        + [("v", t) for t in ("t3", "t4")]
        + [("w", t) for t in ("t4", "t5")],
    )
    return (w1, w2, x1, x2, y, z)


def verify_catalog() -> list[str]:
    """Run every catalog invariant; returns a list of failure messages."""
    problems = []
    members = catalog()
    sizes = sorted(m.tg.graph.n for m in members)
    if sizes != [6, 6, 7, 7, 8, 9]:
        problems.append(f"vertex-count multiset is {sizes}, expected [6,6,7,7,8,9]")
    for m in members:
        g, ts = m.tg.graph, m.tg.terminals
        if not is_disc_planar(m.tg):
            problems.append(f"{m.name}: not disc-planar in the given boundary order")
        if any(g.has_edge(a, b) for i, a in enumerate(ts) for b in ts[i + 1 :]):
            problems.append(f"{m.name}: terminal set is not independent")
        if find_s_good_wheel(m.tg) is not None:
            problems.append(f"{m.name}: contains a terminal-good wheel")
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if rooted_isomorphic(a.tg, b.tg):
                problems.append(f"{a.name} and {b.name} are rooted-isomorphic")
    y = next(m for m in members if m.name == "Y")
    interior = set(y.tg.graph.vertices) - set(y.tg.terminals)
    three = [
        t
        for t in y.tg.terminals
        if sum(1 for x in y.tg.graph.neighbors(t) if x in interior) == 3
    ]
    if three != [y.special_vertex]:
        problems.append(f"Y: degree-3 terminal is {three}, expected [{y.special_vertex}]")
    return problems


# -- rooted isomorphism ------------------------------------------------------


def rooted_isomorphic(a: TerminalGraph, b: TerminalGraph) -> bool:
    """Graph isomorphism mapping terminals(a) onto terminals(b) setwise."""
    ga, gb = a.graph, b.graph
    if ga.n != gb.n or ga.m != gb.m or len(a.terminals) != len(b.terminals):
        return False
    ta, tb = set(a.terminals), set(b.terminals)

    def profile(g: Graph, tset):
        return sorted(
            (v in tset, g.degree(v), sorted(g.degree(u) for u in g.neighbors(v)))
            for v in g.vertices
        )

    if profile(ga, ta) != profile(gb, tb):
        return False

    order = sorted(ga.vertices, key=lambda v: (-ga.degree(v), vkey(v)))
    cands: dict[Vertex, list[Vertex]] = {}
    for v in order:
        key = (v in ta, ga.degree(v), sorted(ga.degree(u) for u in ga.neighbors(v)))
        cands[v] = [
            w
            for w in gb.vertices
            if (w in tb, gb.degree(w), sorted(gb.degree(u) for u in gb.neighbors(w))) == key
        ]

    mapping: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in cands[v]:
            if w in used:
                continue
            ok = True
            for u in ga.neighbors(v):
                if u in mapping and not gb.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                # non-neighbors must stay non-neighbors (same edge count
                # makes one direction enough, but check both for safety)
                for u, img in mapping.items():
                    if ga.has_edge(v, u) != gb.has_edge(w, img):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    return backtrack(0)


def matches_catalog(tg: TerminalGraph) -> CatalogMember | None:
    """The unique catalog member rooted-isomorphic to tg, if any."""
    for m in catalog():
        if rooted_isomorphic(tg, m.tg):
            return m
    return None
