import random

from wheelkit.catalog import catalog, matches_catalog, rooted_isomorphic
from wheelkit.generate import (
    generate_terminal_planar,
    random_planar_graph,
    random_wheel_host,
    rooted_canonical_form,
)
from wheelkit.planarity import TerminalGraph, is_disc_planar, is_planar
from wheelkit.subdivisions import find_disjoint_paths, wheel_plus_paths_to_k5
from wheelkit.wheels import is_wheel


def test_stream_emits_both_six_vertex_members():
    found = set()
    for tg in generate_terminal_planar(6, 5, filters=("s-independent",)):
        m = matches_catalog(TerminalGraph(tg.graph, tg.terminals, ordered=False))
        if m is not None:
            found.add(m.name)
    assert {"W1", "W2"} <= found


def test_stream_isomorph_free_and_disc_planar():
    seen = []
    for tg in generate_terminal_planar(5, 4):
        assert is_disc_planar(tg)
        seen.append(tg)
    keys = [rooted_canonical_form(tg) for tg in seen]
    assert len(keys) == len(set(keys))
    # spot-check true pairwise non-isomorphism on a slice
    sample = seen[:40]
    for i, a in enumerate(sample):
        for b in sample[i + 1 :]:
            assert not rooted_isomorphic(a, b)


def test_stream_counts_small():
    # n = s = 5 with independent terminals: the edgeless graph only
    tgs = list(generate_terminal_planar(5, 5, filters=("s-independent",)))
    assert len(tgs) == 1 and tgs[0].graph.m == 0


def test_filters_reject_everything():
    assert list(generate_terminal_planar(5, 5, filters=(lambda tg: False,))) == []


def test_random_planar_graphs_are_planar_and_reproducible():
    for seed in range(5):
        g1 = random_planar_graph(10, random.Random(seed))
        g2 = random_planar_graph(10, random.Random(seed))
        assert g1 == g2
        assert is_planar(g1)


def test_random_wheel_hosts_build_k5():
    ok = 0
    for seed in range(10):
        rng = random.Random(seed)
        g, wheel, corners = random_wheel_host(rng)
        assert is_wheel(g, wheel)
        w1, w2, w3, w4 = corners
        ps = find_disjoint_paths(
            g,
            [(w1, w3), (w2, w4)],
            forbidden=set(wheel.vertex_set()) - {w1, w2, w3, w4},
            limit=16,
        )
        if ps is None:
            continue
        sub = wheel_plus_paths_to_k5(g, wheel, corners, ps)
        ok += 1
        assert sub is not None
    assert ok >= 8  # planted linkages should nearly always be recoverable
