"""Planarity, disc-planarity of terminal pairs, and combinatorial embeddings.

An embedding is a rotation system (a cyclic order of neighbors at every
vertex); faces come from dart tracing.  "Clockwise" is, by convention,
the direction dart tracing walks a face boundary with the outer face to
its left; the package applies it consistently but it has no geometric
content.

Disc-planarity of a terminal pair (G, S):
- unordered: G plus one fresh apex adjacent to all of S must be planar;
- ordered: a fence is added instead (fresh vertices f_i joined to
  consecutive terminals and to each other in a ring, plus a hub adjacent
  to all f_i), which pins the cyclic boundary order up to rotation and
  reflection.  Correctness of the fence reduction is cross-checked
  against a brute-force rotation-system oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from wheelkit.errors import InputDomainError, PreconditionError
from wheelkit.graph import CycleArc, Graph, Vertex, add, norm_edge, vkey

Dart = tuple[Vertex, Vertex]


@dataclass(frozen=True)
class TerminalGraph:
    """A graph with a distinguished terminal sequence.

    `ordered=True` means the terminal order prescribes the cyclic order on
    the disc boundary; unordered terminal graphs only require some order.
    """

    graph: Graph
    terminals: tuple[Vertex, ...]
    ordered: bool = True

    def __post_init__(self):
        if len(set(self.terminals)) != len(self.terminals):
            raise InputDomainError("duplicate terminals")
        for t in self.terminals:
            if not self.graph.has_vertex(t):
                raise InputDomainError(f"terminal {t!r} not in graph")


class Embedding:
    """A rotation system with traced faces and a distinguished outer face."""

    def __init__(self, rotation: dict[Vertex, tuple[Vertex, ...]], outer_dart: Dart | None = None):
        self.rotation = rotation
        self.faces: tuple[tuple[Dart, ...], ...] = _trace_faces(rotation)
        self._face_of_dart: dict[Dart, int] = {}
        for i, f in enumerate(self.faces):
            for d in f:
                self._face_of_dart[d] = i
        if outer_dart is not None:
            self.outer_face = self._face_of_dart[outer_dart]
        else:
            self.outer_face = 0 if self.faces else -1

    def face_vertices(self, i: int) -> tuple[Vertex, ...]:
        return tuple(u for u, _ in self.faces[i])

    def faces_incident(self, v: Vertex) -> tuple[int, ...]:
        out = []
        for i, f in enumerate(self.faces):
            if any(u == v for u, _ in f):
                out.append(i)
        return tuple(out)

    def face_count(self) -> int:
        """Face count with the unbounded face shared across components."""
        comps_with_edges = _edge_component_count(self.rotation)
        if comps_with_edges == 0:
            return 1
        return len(self.faces) - comps_with_edges + 1


def _trace_faces(rotation: dict[Vertex, tuple[Vertex, ...]]) -> tuple[tuple[Dart, ...], ...]:
    nxt_index = {
        v: {u: i for i, u in enumerate(ns)} for v, ns in rotation.items()
    }
    darts = sorted(
        ((u, v) for u, ns in rotation.items() for v in ns),
        key=lambda d: (vkey(d[0]), vkey(d[1])),
    )
    seen: set[Dart] = set()
    faces = []
    for start in darts:
        if start in seen:
            continue
        face = []
        d = start
        while True:
            face.append(d)
            seen.add(d)
            u, v = d
            ns = rotation[v]
            i = nxt_index[v][u]
            d = (v, ns[(i + 1) % len(ns)])
            if d == start:
                break
        faces.append(tuple(face))
    return tuple(faces)


def _edge_component_count(rotation) -> int:
    seen: set[Vertex] = set()
    count = 0
    for v, ns in rotation.items():
        if v in seen or not ns:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in rotation[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


# -- planarity tests --------------------------------------------------------


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    """Standard planarity test (backed by networkx's left-right check)."""
    ok, _ = nx.check_planarity(_to_networkx(g), counterexample=False)
    return bool(ok)


def _fresh_names(g: Graph, count: int, stem: str) -> list[Vertex]:
    taken = set(g.vertices)
    out = []
    i = 0
    while len(out) < count:
        name = f"__{stem}{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def _apex_augmented(g: Graph, terminals) -> tuple[Graph, Vertex]:
    (apex,) = _fresh_names(g, 1, "apex")
    return add(g, [apex], [(apex, t) for t in terminals]), apex


def _fence_augmented(g: Graph, terminals) -> tuple[Graph, list[Vertex]]:
    k = len(terminals)
    names = _fresh_names(g, k + 1, "fence")
    fs, hub = names[:k], names[k]
    edges = set()
    for i, f in enumerate(fs):
        edges.add(norm_edge(f, terminals[i]))
        edges.add(norm_edge(f, terminals[(i + 1) % k]))
        if k > 1:
            edges.add(norm_edge(f, fs[(i + 1) % k]))
        edges.add(norm_edge(f, hub))
    return add(g, fs + [hub], sorted(edges)), names


def is_disc_planar(tg: TerminalGraph) -> bool:
    """Can the graph be drawn in a closed disc with S on the boundary?

    Ordered terminal graphs must realize the given cyclic boundary order
    (up to rotation and reflection); unordered ones may use any order.
    """
    if len(tg.terminals) < 1:
        raise InputDomainError("disc-planarity needs at least one terminal")
    if tg.ordered and len(tg.terminals) > 2:
        aug, _ = _fence_augmented(tg.graph, tg.terminals)
    else:
        aug, _ = _apex_augmented(tg.graph, tg.terminals)
    return is_planar(aug)


def embed(g: Graph) -> Embedding:
    """A deterministic combinatorial embedding of a planar graph."""
    ok, emb = nx.check_planarity(_to_networkx(g), counterexample=False)
    if not ok:
        raise PreconditionError("graph is not planar")
    rotation = {
        v: tuple(emb.neighbors_cw_order(v)) if g.degree(v) else ()
        for v in g.vertices
    }
    return Embedding(rotation)


def _restrict_rotation(rotation, keep: set[Vertex]):
    return {v: tuple(u for u in ns if u in keep) for v, ns in rotation.items() if v in keep}


def _witness_dart_after_deletion(rotation, removed: set[Vertex]) -> Dart | None:
    """A dart of the restricted embedding bordering the face that the
    removed (connected) vertex set used to occupy."""
    for y in sorted(rotation, key=vkey):
        if y in removed:
            continue
        ns = rotation[y]
        if not any(x in removed for x in ns):
            continue
        keep = [x for x in ns if x not in removed]
        if not keep:
            continue
        d = len(ns)
        for i, x in enumerate(ns):
            if x in removed:
                for step in range(1, d):
                    z = ns[(i + step) % d]
                    if z not in removed:
                        return (y, z)
    return None


def embed_terminal(tg: TerminalGraph) -> Embedding:
    """A disc embedding: the outer face is the one holding the boundary.

    Built by embedding the apex/fence augmentation and deleting the
    augmentation vertices; the merged face left behind is the disc
    boundary face.
    """
    if not is_disc_planar(tg):
        raise PreconditionError("terminal pair is not disc-planar")
    if tg.ordered and len(tg.terminals) > 2:
        aug, names = _fence_augmented(tg.graph, tg.terminals)
        removed = set(names)
    else:
        aug, apex = _apex_augmented(tg.graph, tg.terminals)
        removed = {apex}
    ok, emb = nx.check_planarity(_to_networkx(aug), counterexample=False)
    assert ok
    rot_aug = {
        v: tuple(emb.neighbors_cw_order(v)) if aug.degree(v) else ()
        for v in aug.vertices
    }
    witness = _witness_dart_after_deletion(rot_aug, removed)
    rotation = _restrict_rotation(rot_aug, set(tg.graph.vertices))
    return Embedding(rotation, outer_dart=witness)


# -- faces, outer cycles, cofacial closures ---------------------------------


def cofacial_closure(emb: Embedding, x: Vertex) -> Graph:
    """The union of all faces incident with x, as a subgraph."""
    if x not in emb.rotation:
        raise InputDomainError(f"unknown vertex {x!r}")
    vs: set[Vertex] = {x}
    es = set()
    for i in emb.faces_incident(x):
        for u, v in emb.faces[i]:
            vs.add(u)
            vs.add(v)
            es.add(norm_edge(u, v))
    return Graph(vs, es)


def outer_cycle(tg: TerminalGraph, dset) -> CycleArc:
    """The facial cycle of G[D] bounding the face holding the disc boundary.

    D must induce a 2-connected subgraph of a disc-planar terminal graph.
    Everything outside D is deleted from the embedding one component at a
    time, starting from the component carrying the boundary terminals; the
    face that region merges into is tracked through the deletions.  The
    cycle is returned in the orientation the face trace produces, with
    both arc endpoints parked on its first vertex (rebase to taste).
    """
    d = set(dset)
    g = tg.graph
    for v in d:
        if not g.has_vertex(v):
            raise InputDomainError(f"unknown vertex {v!r}")
    sub = g.induced(d)
    if not _is_two_connected(sub):
        raise PreconditionError(
            "D does not induce a 2-connected subgraph; no outer cycle exists"
        )
    aug, apex = _apex_augmented(g, tg.terminals)
    if not is_planar(aug):
        raise PreconditionError("terminal pair is not disc-planar")
    ok, emb = nx.check_planarity(_to_networkx(aug), counterexample=False)
    assert ok
    rotation = {
        v: tuple(emb.neighbors_cw_order(v)) if aug.degree(v) else ()
        for v in aug.vertices
    }
    # The boundary region is the component of the augmented graph minus D
    # that contains the apex; delete it first and take a dart on the face
    # it merges into.
    boundary_side = _component_of(aug, apex, banned=d)
    witness = _witness_dart_after_deletion(rotation, boundary_side)
    if witness is None:
        raise PreconditionError("no vertex of D touches the boundary region")
    keep = set(aug.vertices) - boundary_side
    rotation = _restrict_rotation(rotation, keep)
    # Peel off the remaining non-D components.  Deleting a component only
    # merges faces, so the witness dart keeps bordering the boundary face
    # unless the deleted component was incident to it, in which case the
    # corner rule hands us a dart on the merged face.
    leftover = Graph(keep, _edges_of(rotation)).induced(keep - d)
    junk = sorted(leftover.components(), key=lambda c: sorted(c, key=vkey))
    for comp in junk:
        faces = _trace_faces(rotation)
        wface = next(f for f in faces if witness in f)
        incident = any(u in comp for face_dart in wface for u in face_dart)
        new_witness = _witness_dart_after_deletion(rotation, set(comp))
        keep -= set(comp)
        rotation = _restrict_rotation(rotation, keep)
        if incident:
            if new_witness is None:
                raise PreconditionError("boundary face collapsed while peeling")
            witness = new_witness
    restricted = Embedding(rotation, outer_dart=witness)
    walk = restricted.face_vertices(restricted.outer_face)
    if len(set(walk)) != len(walk) or any(v not in d for v in walk):
        raise PreconditionError(
            "the boundary-side face of D is not a simple cycle through D"
        )
    return CycleArc(tuple(walk), walk[0], walk[0])


def _edges_of(rotation) -> list:
    return [(u, v) for u, ns in rotation.items() for v in ns if vkey(u) < vkey(v)]


def _component_of(g: Graph, start: Vertex, banned: set[Vertex]) -> set[Vertex]:
    comp = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in comp and y not in banned:
                comp.add(y)
                stack.append(y)
    return comp


def _is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    return all(
        g.induced([u for u in g.vertices if u != v]).is_connected() for v in g.vertices
    )
