"""Backend agreement: the compiled kernels must return bit-identical
answers to the pure-Python twins on a seeded corpus."""

import random
from itertools import combinations

import pytest

from wheelkit import kernels
from wheelkit.kernels import pure

fast = pytest.importorskip("wheelkit.kernels._fast")


def random_instance(rng, n):
    adj = [0] * n
    for a, b in combinations(range(n), 2):
        if rng.random() < rng.choice((0.3, 0.5, 0.8)):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def test_backend_is_compiled_by_default():
    assert kernels.BACKEND in ("fast", "pure")
    assert fast.BACKEND == "fast"


def test_four_color_agreement():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randrange(1, 11)
        adj = random_instance(rng, n)
        assert pure.four_color_masks(n, adj) == fast.four_color_masks(n, adj)


def test_linkage_agreement():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(4, 11)
        adj = random_instance(rng, n)
        vs = list(range(n))
        rng.shuffle(vs)
        pairs = [(vs[0], vs[1]), (vs[2], vs[3])]
        forb = 0
        for v in vs[4:]:
            if rng.random() < 0.2:
                forb |= 1 << v
        assert pure.linkage_masks(n, adj, pairs, forb) == fast.linkage_masks(n, adj, pairs, forb)


def test_linkage_agreement_k5_pairs():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randrange(5, 9)
        adj = random_instance(rng, n)
        branch = list(range(5))
        pairs = [(i, j) for i, j in combinations(branch, 2)]
        assert pure.linkage_masks(n, adj, pairs, 0) == fast.linkage_masks(n, adj, pairs, 0)


def test_empty_and_trivial_cases():
    assert pure.four_color_masks(0, []) == fast.four_color_masks(0, []) == []
    assert pure.linkage_masks(3, [2, 1, 0], [], 0) == fast.linkage_masks(3, [2, 1, 0], [], 0) == []
    adj = [0b010, 0b101, 0b010]
    assert pure.linkage_masks(3, adj, [(0, 2)], 0) == fast.linkage_masks(3, adj, [(0, 2)], 0)
