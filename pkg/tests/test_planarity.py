import pytest

from wheelkit.errors import InputDomainError, PreconditionError
from wheelkit.graph import Graph, add, complete_graph, cycle_graph, remove
from wheelkit.planarity import (
    Embedding,
    TerminalGraph,
    cofacial_closure,
    embed,
    embed_terminal,
    is_disc_planar,
    is_planar,
    outer_cycle,
)


def k33():
    return Graph(
        "a b c x y z".split(),
        [(u, v) for u in "abc" for v in "xyz"],
    )


def octahedron():
    g = complete_graph(list("123456"))
    return remove(g, edges=[("1", "6"), ("2", "5"), ("3", "4")])


def icosahedron():
    # standard adjacency list, 12 vertices / 30 edges
    adj = {
        0: (1, 2, 3, 4, 5),
        1: (0, 2, 5, 6, 7),
        2: (0, 1, 3, 7, 8),
        3: (0, 2, 4, 8, 9),
        4: (0, 3, 5, 9, 10),
        5: (0, 1, 4, 6, 10),
        6: (1, 5, 7, 10, 11),
        7: (1, 2, 6, 8, 11),
        8: (2, 3, 7, 9, 11),
        9: (3, 4, 8, 10, 11),
        10: (4, 5, 6, 9, 11),
        11: (6, 7, 8, 9, 10),
    }
    edges = {tuple(sorted((str(u), str(v)))) for u, ns in adj.items() for v in ns}
    return Graph([str(i) for i in range(12)], edges)


def test_planarity_standards():
    assert is_planar(complete_graph(list("abcd")))
    assert not is_planar(complete_graph(list("abcde")))
    assert not is_planar(k33())
    assert is_planar(octahedron())
    assert is_planar(icosahedron())


def test_face_counts_match_euler():
    for g, expect in ((cycle_graph(list("abcd")), 2), (complete_graph(list("abcd")), 4), (octahedron(), 8)):
        emb = embed(g)
        assert emb.face_count() == expect
        assert g.n - g.m + emb.face_count() == 2


def test_embed_nonplanar_errors():
    with pytest.raises(PreconditionError):
        embed(complete_graph(list("abcde")))


def test_embed_deterministic():
    g = octahedron()
    assert embed(g).rotation == embed(g).rotation


def test_disconnected_face_count():
    g = Graph(edges=[("a", "b"), ("b", "c"), ("a", "c"), ("x", "y"), ("y", "z"), ("x", "z")])
    emb = embed(g)
    # two triangles: 2 inner faces plus one shared unbounded face
    assert emb.face_count() == 3
    assert g.n - g.m + emb.face_count() == 1 + 2


def test_disc_planar_c5_all_terminals_ordered():
    c5 = cycle_graph([f"v{i}" for i in range(1, 6)])
    tg = TerminalGraph(c5, tuple(f"v{i}" for i in range(1, 6)), ordered=True)
    assert is_disc_planar(tg)


def test_disc_planar_rejects_k4_all_terminals():
    k4 = complete_graph(list("abcd"))
    tg = TerminalGraph(k4, tuple("abcd"), ordered=False)
    assert not is_disc_planar(tg)  # k4 plus an apex is K5


def test_disc_planar_order_matters():
    # C4 with boundary order matching the cycle works, a transposed order fails
    c4 = cycle_graph(["a", "b", "c", "d"])
    good = TerminalGraph(c4, ("a", "b", "c", "d"), ordered=True)
    bad = TerminalGraph(c4, ("a", "c", "b", "d"), ordered=True)
    assert is_disc_planar(good)
    assert not is_disc_planar(bad)


def test_disc_planar_rotation_reflection_invariant():
    c4 = cycle_graph(["a", "b", "c", "d"])
    orders = [("b", "c", "d", "a"), ("d", "c", "b", "a"), ("c", "d", "a", "b")]
    for o in orders:
        assert is_disc_planar(TerminalGraph(c4, o, ordered=True))


def test_disc_planar_needs_a_terminal():
    with pytest.raises(InputDomainError):
        is_disc_planar(TerminalGraph(cycle_graph(list("abc")), (), ordered=False))


def test_disc_planar_monotone_under_deletion():
    g = octahedron()
    ts = ("1", "2")
    if is_disc_planar(TerminalGraph(g, ts, ordered=False)):
        for e in g.edges:
            smaller = remove(g, edges=[e])
            assert is_disc_planar(TerminalGraph(smaller, ts, ordered=False))


def test_embed_terminal_outer_face_has_boundary_order():
    c5 = cycle_graph([f"v{i}" for i in range(1, 6)])
    ts = tuple(f"v{i}" for i in range(1, 6))
    emb = embed_terminal(TerminalGraph(c5, ts, ordered=True))
    walk = [v for v, _ in emb.faces[emb.outer_face]]
    assert len(walk) == 5 and set(walk) == set(ts)
    # boundary order is the terminal order up to rotation/reflection
    i = walk.index("v1")
    rot = tuple(walk[(i + k) % 5] for k in range(5))
    assert rot == ts or rot == (ts[0],) + tuple(reversed(ts[1:]))


def test_cofacial_closure_c5_is_whole_cycle():
    c5 = cycle_graph([f"v{i}" for i in range(1, 6)])
    emb = embed(c5)
    assert cofacial_closure(emb, "v1") == c5


def test_cofacial_closure_k4_is_whole_graph():
    k4 = complete_graph(list("abcd"))
    emb = embed(k4)
    assert cofacial_closure(emb, "a") == k4


def test_cofacial_closure_icosahedron_is_five_wheel():
    g = icosahedron()
    emb = embed(g)
    closure = cofacial_closure(emb, "0")
    assert closure.n == 6 and closure.m == 10
    assert closure.degree("0") == 5


def test_outer_cycle_of_wheel_rim():
    rim = ["r1", "r2", "r3", "r4"]
    g = add(cycle_graph(rim), {"c"}, [("c", r) for r in rim])
    g = add(g, {"t"}, [("t", "r1")])
    tg = TerminalGraph(g, ("t",), ordered=False)
    cyc = outer_cycle(tg, rim)
    assert set(cyc.cycle) == set(rim) and len(cyc.cycle) == 4


def test_outer_cycle_rejects_tree():
    g = Graph(edges=[("a", "b"), ("b", "c"), ("t", "a")])
    tg = TerminalGraph(g, ("t",), ordered=False)
    with pytest.raises(PreconditionError):
        outer_cycle(tg, ["a", "b", "c"])


def test_outer_cycle_of_nine_vertex_member_interior():
    from wheelkit.catalog import catalog

    z = next(m for m in catalog() if m.name == "Z")
    cyc = outer_cycle(z.tg, ["z", "u", "v", "w"])
    assert set(cyc.cycle) == {"z", "u", "v", "w"} and len(cyc.cycle) == 4
    # the interior chord z-v stays off the outer cycle: u and w are the
    # cycle neighbors of both z and v
    i = cyc.cycle.index("z")
    assert {cyc.cycle[(i + 1) % 4], cyc.cycle[(i - 1) % 4]} == {"u", "w"}


def test_face_tracing_partitions_darts():
    for g in (complete_graph(list("abcd")), octahedron(), cycle_graph(list("abcde"))):
        emb = embed(g)
        darts = [d for face in emb.faces for d in face]
        assert len(darts) == 2 * g.m
        assert len(set(darts)) == len(darts)
        assert set(darts) == {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}


def test_embed_terminal_catalog_members_have_boundary_in_order():
    from wheelkit.catalog import catalog

    for m in catalog():
        emb = embed_terminal(m.tg)
        walk = [v for v, _ in emb.faces[emb.outer_face]]
        tset = set(m.tg.terminals)
        visits = [v for v in walk if v in tset]
        active = [t for t in m.tg.terminals if m.tg.graph.degree(t) > 0]
        # every attached terminal shows up exactly once on the boundary face
        assert sorted(visits) == sorted(active), m.name
        if len(visits) >= 3:
            i = visits.index(active[0])
            rot = visits[i:] + visits[:i]
            assert rot == active or rot == [active[0]] + list(reversed(active[1:])), m.name


# -- property tests ------------------------------------------------------------

from hypothesis import given, settings, strategies as st

from tests.test_graph import graphs


@given(graphs(max_n=6), st.data())
@settings(max_examples=60, deadline=None)
def test_unordered_disc_planarity_monotone_under_deletion(g, data):
    if g.n < 1:
        return
    ts = tuple(data.draw(st.sets(st.sampled_from(list(g.vertices)), min_size=1, max_size=3)))
    if not is_disc_planar(TerminalGraph(g, ts, ordered=False)):
        return
    for e in g.edges:
        smaller = remove(g, edges=[e])
        assert is_disc_planar(TerminalGraph(smaller, ts, ordered=False))


@given(graphs(max_n=6), st.data())
@settings(max_examples=60, deadline=None)
def test_ordered_disc_planarity_rotation_reflection_invariant(g, data):
    if g.n < 3:
        return
    k = data.draw(st.integers(min_value=3, max_value=min(5, g.n)))
    ts = tuple(data.draw(st.permutations(list(g.vertices))))[:k]
    base = is_disc_planar(TerminalGraph(g, ts, ordered=True))
    shift = data.draw(st.integers(min_value=0, max_value=k - 1))
    rotated = ts[shift:] + ts[:shift]
    reflected = (ts[0],) + tuple(reversed(ts[1:]))
    assert is_disc_planar(TerminalGraph(g, rotated, ordered=True)) == base
    assert is_disc_planar(TerminalGraph(g, reflected, ordered=True)) == base
