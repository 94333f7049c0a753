"""Brute-force oracles: slow, independent routes used to cross-check the
library search paths.

Nothing here calls the fast implementations.  The oracles enumerate raw
search spaces (all color assignments, all simple-path systems, all
subgraph pairs, all rotation systems) and filter by definition, so they
stay valid even if every optimization elsewhere is wrong.
"""

from __future__ import annotations

from itertools import combinations, product

from wheelkit.errors import InputDomainError
from wheelkit.graph import Graph, Vertex, vkey
from wheelkit.wheels import Wheel

COLORS = (1, 2, 3, 4)


def brute_four_color(g: Graph) -> dict[Vertex, int] | None:
    """Try all 4^n assignments in lexicographic order."""
    vs = g.vertices
    for combo in product(COLORS, repeat=len(vs)):
        cmap = dict(zip(vs, combo))
        if all(cmap[u] != cmap[v] for u, v in g.edges):
            return cmap
    return None


def all_simple_paths(g: Graph, s: Vertex, t: Vertex, banned: frozenset) -> list[tuple[Vertex, ...]]:
    """Every simple s-t path whose interior avoids `banned`."""
    out: list[tuple[Vertex, ...]] = []

    def walk(path: list[Vertex], used: set[Vertex]):
        cur = path[-1]
        for w in g.neighbors(cur):
            if w == t:
                out.append(tuple(path + [t]))
                continue
            if w in used or w in banned:
                continue
            path.append(w)
            used.add(w)
            walk(path, used)
            used.remove(w)
            path.pop()

    walk([s], {s})
    return out


def brute_disjoint_paths(g: Graph, pairs, forbidden=()) -> tuple[tuple[Vertex, ...], ...] | None:
    """Enumerate per-pair path lists, then search all combinations."""
    pairs = [tuple(p) for p in pairs]
    endpoints = {x for p in pairs for x in p}
    banned = frozenset(forbidden) | frozenset(endpoints)
    choices = [all_simple_paths(g, s, t, banned - {s, t}) for s, t in pairs]

    def pick(i: int, used_interiors: set[Vertex]) -> list | None:
        if i == len(pairs):
            return []
        for p in choices[i]:
            interior = set(p[1:-1])
            if interior & used_interiors:
                continue
            rest = pick(i + 1, used_interiors | interior)
            if rest is not None:
                return [p] + rest
        return None

    got = pick(0, set())
    return tuple(got) if got is not None else None


def brute_k5_subdivision(g: Graph) -> bool:
    """All 5-subsets (no degree pruning) x all path systems."""
    for combo in combinations(g.vertices, 5):
        pairs = [(combo[i], combo[j]) for i, j in combinations(range(5), 2)]
        if brute_disjoint_paths(g, pairs) is not None:
            return True
    return False


def brute_separations(g: Graph, k: int) -> set:
    """The full definition universe of k-separations, up to side swap.

    Every (A, B, C) with |C| = k, A and B unlinked by edges, plus every
    assignment of C-internal edges, filtered by side nonemptiness.  Each
    separation is a canonical pair of (vertices, edges) side descriptions.
    """
    vs = g.vertices
    out = set()
    for cut in combinations(vs, k):
        cset = set(cut)
        rest = [v for v in vs if v not in cset]
        inner = [e for e in g.edges if e[0] in cset and e[1] in cset]
        for assign in product((0, 1), repeat=len(rest)):
            a = {v for v, side in zip(rest, assign) if side == 0}
            b = set(rest) - a
            if any((u in a and v in b) or (u in b and v in a) for u, v in g.edges):
                continue
            ea_base = frozenset(
                e for e in g.edges if set(e) <= a | cset and not set(e) <= cset
            )
            eb_base = frozenset(
                e for e in g.edges if set(e) <= b | cset and not set(e) <= cset
            )
            for split in product((0, 1), repeat=len(inner)):
                ea = set(ea_base)
                eb = set(eb_base)
                for e, side in zip(inner, split):
                    (ea if side == 0 else eb).add(e)
                if not (a or ea) or not (b or eb):
                    continue
                s1 = (frozenset(a | cset), frozenset(ea))
                s2 = (frozenset(b | cset), frozenset(eb))
                out.add((s1, s2) if _side_key(s1) <= _side_key(s2) else (s2, s1))
    return out


def _side_key(side):
    vs, es = side
    return (sorted(vs, key=vkey), sorted(es))


def brute_wheel_search(g: Graph, s) -> Wheel | None:
    """All centers x all cycles, filtered afterwards; no pruning."""
    sset = set(s)
    for center in g.vertices:
        if center in sset:
            continue
        rest = g.induced([v for v in g.vertices if v != center])
        nbrs = set(g.neighbors(center))
        for cyc in _all_cycles(rest):
            spokes = frozenset(v for v in cyc if v in nbrs)
            if len(spokes) < 3:
                continue
            if all(v in nbrs for v in sset & set(cyc)):
                return Wheel(center, cyc, spokes)
    return None


def _all_cycles(g: Graph):
    order = {v: i for i, v in enumerate(g.vertices)}

    def extend(path, used):
        if len(path) >= 3 and g.has_edge(path[-1], path[0]) and order[path[1]] < order[path[-1]]:
            yield tuple(path)
        for w in g.neighbors(path[-1]):
            if w in used or order[w] <= order[path[0]]:
                continue
            path.append(w)
            used.add(w)
            yield from extend(path, used)
            used.remove(w)
            path.pop()

    for v in g.vertices:
        yield from extend([v], {v})


# -- rotation-system disc-planarity oracle -----------------------------------


def brute_disc_planar(g: Graph, terminals) -> bool:
    """Disc-planarity by enumerating rotation systems.

    Genus 0 is checked per component via Euler's formula on traced faces;
    the terminals of each component must share a face.  With at most three
    terminals every cyclic boundary order is equivalent up to rotation and
    reflection, so co-faciality decides disc-planarity outright; larger
    terminal sets are refused (the fence construction covers them, and the
    agreement corpus stops at three).
    """
    ts = tuple(terminals)
    if len(ts) > 3:
        raise InputDomainError("rotation oracle only supports up to 3 terminals")
    if len(ts) < 1:
        raise InputDomainError("need at least one terminal")
    for comp in g.components():
        sub = g.induced(comp)
        if not _component_disc_ok(sub, [t for t in ts if t in comp]):
            return False
    return True


def _component_disc_ok(g: Graph, ts) -> bool:
    if g.m > max(0, 3 * g.n - 6) and g.n >= 3:
        return False  # Euler bound: not even planar
    if g.m == 0:
        return True
    from itertools import permutations as perms

    vs = g.vertices
    rot_choices = []
    for v in vs:
        ns = list(g.neighbors(v))
        if len(ns) <= 2:
            rot_choices.append([tuple(ns)])
        else:
            first = ns[0]
            rot_choices.append([(first,) + p for p in perms(ns[1:])])
    target_faces = 2 - g.n + g.m  # Euler, connected
    for combo in product(*rot_choices):
        rotation = dict(zip(vs, combo))
        faces = _trace(rotation)
        if len(faces) != target_faces:
            continue
        if not ts:
            return True
        for face in faces:
            fvs = {u for u, _ in face}
            if all(t in fvs for t in ts):
                return True
    return False


def _trace(rotation):
    idx = {v: {u: i for i, u in enumerate(ns)} for v, ns in rotation.items()}
    seen = set()
    faces = []
    for u in rotation:
        for v in rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                face.append(d)
                a, b = d
                ns = rotation[b]
                d = (b, ns[(idx[b][a] + 1) % len(ns)])
            faces.append(tuple(face))
    return faces
