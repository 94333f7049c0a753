"""k-separations, vertex connectivity, and the planar-side trichotomy.

A k-separation is a pair of edge-disjoint subgraphs covering the host
graph whose vertex sets overlap in exactly k vertices, each side owning
an exclusive vertex or edge.  The canonical enumerator assigns edges
inside the cut to side2 and emits only separations whose sides both own
an exclusive vertex; the exhaustive mode emits the full definition
universe (both cut-edge assignments, plus sides whose only exclusive
content is a cut-internal edge) for oracle comparisons.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from wheelkit.catalog import CatalogMember, matches_catalog
from wheelkit.errors import InputDomainError, PreconditionError
from wheelkit.graph import Graph, Vertex, vkey
from wheelkit.planarity import TerminalGraph, is_disc_planar
from wheelkit.wheels import Wheel, find_s_good_wheel


@dataclass(frozen=True)
class Separation:
    side1: Graph
    side2: Graph

    @property
    def cut(self) -> tuple[Vertex, ...]:
        shared = set(self.side1.vertices) & set(self.side2.vertices)
        return tuple(sorted(shared, key=vkey))

    @property
    def order(self) -> int:
        return len(self.cut)


def validate_separation(g: Graph, sep: Separation) -> None:
    """Check the definition against the host graph; raise on violation."""
    e1, e2 = sep.side1.edge_set(), sep.side2.edge_set()
    if e1 & e2:
        raise InputDomainError("sides share an edge")
    if e1 | e2 != g.edge_set():
        raise InputDomainError("sides do not partition the edge set")
    if set(sep.side1.vertices) | set(sep.side2.vertices) != set(g.vertices):
        raise InputDomainError("sides do not cover the vertex set")
    for a, b in ((sep.side1, sep.side2), (sep.side2, sep.side1)):
        exclusive = set(a.vertices) - set(b.vertices)
        if not a.edges and not exclusive:
            raise InputDomainError("a side owns neither a vertex nor an edge")


def is_separation(g: Graph, sep: Separation) -> bool:
    try:
        validate_separation(g, sep)
    except InputDomainError:
        return False
    return True


def enumerate_separations(g: Graph, k: int, *, mode: str = "canonical") -> Iterator[Separation]:
    """All k-separations up to swapping sides.

    canonical: for every k-cut, every split of the components of G - cut
    into two groups; cut-internal edges go to side2.  A group may be
    empty only when its side still owns a cut-internal edge (the
    definition admits such sides; a complete graph's (n-1)-separations
    are of this shape).
    exhaustive: additionally every cut-edge assignment, for oracle
    comparisons against the raw definition.
    """
    if k < 0:
        raise InputDomainError("separation order must be nonnegative")
    if mode not in ("canonical", "exhaustive"):
        raise InputDomainError(f"unknown mode {mode!r}")
    seen = set()
    for cut in combinations(g.vertices, k):
        cset = set(cut)
        rest = g.induced([v for v in g.vertices if v not in cset])
        comps = sorted(rest.components(), key=lambda c: sorted(c, key=vkey))
        inner = [e for e in g.edges if e[0] in cset and e[1] in cset]
        n = len(comps)
        for r in range(0, n + 1):
            for group in combinations(range(n), r):
                a = set().union(*(comps[i] for i in group)) if group else set()
                b = set().union(*(comps[i] for i in range(n) if i not in group)) if n - r else set()
                if mode == "canonical":
                    splits = [tuple(False for _ in inner)]  # all inner edges to side2
                else:
                    from itertools import product

                    splits = product((False, True), repeat=len(inner))
                for split in splits:
                    sep = _build(g, a, b, cset, inner, split)
                    if sep is None:
                        continue
                    key = _sep_key(sep)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield sep


def _build(g, a, b, cset, inner, split):
    e1 = [e for e in g.edges if set(e) <= a | cset and not set(e) <= cset]
    e2 = [e for e in g.edges if set(e) <= b | cset and not set(e) <= cset]
    for e, to_side1 in zip(inner, split):
        (e1 if to_side1 else e2).append(e)
    if (not a and not e1) or (not b and not e2):
        return None
    s1 = Graph(a | cset, e1)
    s2 = Graph(b | cset, e2)
    if _side_sort_key(s2) < _side_sort_key(s1):
        s1, s2 = s2, s1
    return Separation(s1, s2)


def _side_sort_key(side: Graph):
    return (side.vertices, side.edges)


def _sep_key(sep: Separation):
    return (sep.side1.vertices, sep.side1.edges, sep.side2.vertices, sep.side2.edges)


# -- connectivity -------------------------------------------------------------


def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex connectivity >= k; complete graphs count as (n-1)-connected."""
    if k <= 0:
        return True
    n = g.n
    if n == 0:
        return False
    if g.m == n * (n - 1) // 2:
        return n - 1 >= k
    if not g.is_connected():
        return False
    if n <= k:
        return False  # incomplete graph on <= k vertices
    for size in range(1, k):
        for cut in combinations(g.vertices, size):
            rest = g.induced([v for v in g.vertices if v not in cut])
            if rest.n and not rest.is_connected():
                return False
    return True


# -- the trichotomy check ------------------------------------------------------


class Verdict(enum.Enum):
    GOOD_WHEEL = "good-wheel"
    SMALL = "small"
    CATALOG = "catalog"
    NONE = "none"


@dataclass(frozen=True)
class TrichotomyResult:
    verdict: Verdict
    wheel: Wheel | None = None
    member: CatalogMember | None = None


def check_trichotomy(g: Graph, sep: Separation) -> TrichotomyResult:
    """Which clause of the planar-side alternative does side1 satisfy?

    The clauses overlap, so the verdict reports the first that holds in
    the order SMALL (order 4, five vertices), GOOD_WHEEL, CATALOG.  NONE
    means none holds; that can happen on arbitrary graphs but never on
    the shipped corpora.
    """
    validate_separation(g, sep)
    if sep.order not in (4, 5):
        raise PreconditionError(f"separation order must be 4 or 5, got {sep.order}")
    side1, cut = sep.side1, sep.cut
    if not set(side1.vertices) - set(sep.side2.vertices):
        raise PreconditionError("side1 has no exclusive vertex")
    tg = TerminalGraph(side1, cut, ordered=False)
    if not is_disc_planar(tg):
        raise PreconditionError("side1 is not disc-planar over the cut")

    if sep.order == 4 and side1.n == 5:
        return TrichotomyResult(Verdict.SMALL)
    wheel = find_s_good_wheel(tg)
    if wheel is not None:
        return TrichotomyResult(Verdict.GOOD_WHEEL, wheel=wheel)
    if sep.order == 5:
        member = matches_catalog(tg)
        if member is not None:
            if member.special_vertex is None:
                return TrichotomyResult(Verdict.CATALOG, member=member)
            # The eight-vertex member constrains its fan terminal: it must
            # have host degree at least 5.
            interior = set(side1.vertices) - set(cut)
            fan = [
                t
                for t in cut
                if sum(1 for x in side1.neighbors(t) if x in interior) == 3
            ]
            if fan and all(g.degree(t) >= 5 for t in fan):
                return TrichotomyResult(Verdict.CATALOG, member=member)
    return TrichotomyResult(Verdict.NONE)
