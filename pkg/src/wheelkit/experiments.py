"""Batch verification experiments over the package's finite claims.

Each experiment checks one machine-checkable property on a corpus of
instances and reports instance counts, counterexamples (serialized), and
wall time.  Reports are deterministic for a fixed seed and configuration.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations

from wheelkit import gio
from wheelkit.catalog import catalog, verify_catalog
from wheelkit.errors import InputDomainError
from wheelkit.gadgets import apply_gadget, foreign_edges, gadget_library, lift_subdivision
from wheelkit.generate import (
    generate_terminal_planar,
    random_planar_graph,
    random_wheel_host,
)
from wheelkit.graph import Graph, remove
from wheelkit.oracles import (
    brute_disc_planar,
    brute_disjoint_paths,
    brute_four_color,
    brute_k5_subdivision,
    brute_separations,
)
from wheelkit.planarity import TerminalGraph, embed, is_disc_planar, is_planar
from wheelkit.recipes import verify_all_recipes
from wheelkit.coloring import four_color
from wheelkit.separations import (
    Separation,
    Verdict,
    check_trichotomy,
    enumerate_separations,
)
from wheelkit.subdivisions import (
    find_disjoint_paths,
    find_k5_subdivision,
    is_valid_subdivision,
    validate_subdivision,
    wheel_plus_paths_to_k5,
)
from wheelkit.graph import add, union


@dataclass
class Config:
    seed: int = 20191105
    oracle_bound: int = 8
    search_bound: int = 12
    generation_bound: int = 9
    instances: int = 200

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "oracle_bound": self.oracle_bound,
            "search_bound": self.search_bound,
            "generation_bound": self.generation_bound,
            "instances": self.instances,
        }


@dataclass
class ExperimentReport:
    name: str
    instances: int
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.instances > 0 and not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "experiment": self.name,
            "instances": self.instances,
            "pass": self.passed,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed, 3),
            "config": self.config,
        }


def _report(name, cfg):
    return ExperimentReport(name=name, instances=0, config=cfg.as_dict())


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    names = [str(i) for i in range(n)]
    edges = [(a, b) for a, b in combinations(names, 2) if rng.random() < p]
    return Graph(names, edges)


# -- experiments ---------------------------------------------------------------


def run_catalog_no_good_wheel(cfg: Config) -> ExperimentReport:
    rep = _report("catalog-no-good-wheel", cfg)
    t0 = time.perf_counter()
    problems = verify_catalog()
    rep.instances = len(catalog())
    rep.counterexamples = problems
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_wheel_k5_construction(cfg: Config) -> ExperimentReport:
    rep = _report("wheel-k5-construction", cfg)
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    want = 100
    while rep.instances < want:
        g, wheel, corners = random_wheel_host(rng)
        w1, w2, w3, w4 = corners
        ps = find_disjoint_paths(
            g,
            [(w1, w3), (w2, w4)],
            forbidden=set(wheel.vertex_set()) - set(corners),
            limit=16,
        )
        if ps is None:
            continue  # noise edges occasionally block the planted linkage
        rep.instances += 1
        try:
            sub = wheel_plus_paths_to_k5(g, wheel, corners, ps)
            validate_subdivision(g, sub)
        except Exception as exc:  # counterexample, not a crash
            rep.counterexamples.append(f"{gio.to_graph6(g)}: {exc}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_lift_all_gadgets(cfg: Config) -> ExperimentReport:
    rep = _report("lift-all-gadgets", cfg)
    t0 = time.perf_counter()
    for case in gadget_library():
        rule = case.rule
        for host in case.hosts:
            gp = apply_gadget(host, rule)
            foreign = sorted(foreign_edges(host, rule))
            for r in range(len(foreign) + 1):
                for keep in combinations(foreign, r):
                    banned = [e for e in foreign if e not in keep]
                    trimmed = remove(gp, edges=[e for e in banned if gp.has_edge(*e)])
                    sub = find_k5_subdivision(trimmed)
                    if sub is None:
                        continue
                    rep.instances += 1
                    try:
                        out = lift_subdivision(host, rule, sub)
                        if not is_valid_subdivision(host, out):
                            raise InputDomainError("lift output failed validation")
                    except Exception as exc:
                        rep.counterexamples.append(f"{rule.name}: {exc}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_coloring_recipes(cfg: Config) -> ExperimentReport:
    rep = _report("coloring-recipes", cfg)
    t0 = time.perf_counter()
    for report in verify_all_recipes():
        rep.instances += report.cases
        rep.counterexamples.extend(f"{report.name}: {f}" for f in report.failures)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _structured_small_graphs() -> list[Graph]:
    """Hand-picked shapes that exercise the searches' edge cases."""
    from wheelkit.graph import complete_graph, cycle_graph, path_graph

    k5 = complete_graph(list("abcde"))
    k5_minus = remove(k5, edges=[("a", "b")])
    sub_k5 = add(k5_minus, {"m"}, [("a", "m"), ("m", "b")])
    wheel7 = add(cycle_graph([f"r{i}" for i in range(7)]), {"c"},
                 [("c", f"r{i}") for i in range(7)])
    k33 = Graph("a b c x y z".split(), [(u, v) for u in "abc" for v in "xyz"])
    grid24 = Graph(
        [f"{r}{c}" for r in range(2) for c in range(4)],
        [(f"{r}{c}", f"{r}{c + 1}") for r in range(2) for c in range(3)]
        + [(f"0{c}", f"1{c}") for c in range(4)],
    )
    return [
        k5,
        k5_minus,
        sub_k5,
        wheel7,
        k33,
        add(k33, (), [("a", "b")]),
        grid24,
        complete_graph(list("abcdefgh")),
        cycle_graph(list("abcdefgh")),
        path_graph(list("abcde")),
    ]


def run_oracle_equivalence(cfg: Config) -> ExperimentReport:
    rep = _report("oracle-equivalence", cfg)
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    n_each = cfg.instances
    structured = _structured_small_graphs()

    # four_color vs exhaustive enumeration
    for i in range(n_each):
        if i < len(structured):
            g = structured[i]
        else:
            g = _random_graph(rng, rng.randrange(3, cfg.oracle_bound + 1), rng.uniform(0.2, 0.9))
        rep.instances += 1
        ours = four_color(g)
        brute = brute_four_color(g)
        if (ours is None) != (brute is None):
            rep.counterexamples.append(f"four-color: {gio.to_graph6(g)}")

    # disjoint paths vs brute force
    for _ in range(n_each):
        g = _random_graph(rng, rng.randrange(4, cfg.oracle_bound + 1), rng.uniform(0.3, 0.8))
        vs = list(g.vertices)
        rng.shuffle(vs)
        if len(vs) < 4:
            continue
        pairs = [(vs[0], vs[1]), (vs[2], vs[3])]
        rep.instances += 1
        ours = find_disjoint_paths(g, pairs)
        brute = brute_disjoint_paths(g, pairs)
        if (ours is None) != (brute is None):
            rep.counterexamples.append(f"linkage: {gio.to_graph6(g)} pairs {pairs}")

    # K5-subdivision vs brute force
    for i in range(n_each):
        if i < len(structured):
            g = structured[i]
        else:
            g = _random_graph(rng, rng.randrange(5, cfg.oracle_bound + 1), rng.uniform(0.3, 0.85))
        rep.instances += 1
        ours = find_k5_subdivision(g)
        brute = brute_k5_subdivision(g)
        if (ours is not None) != brute:
            rep.counterexamples.append(f"k5: {gio.to_graph6(g)}")

    # separations vs the definition filter
    for _ in range(n_each):
        g = _random_graph(rng, rng.randrange(4, min(7, cfg.oracle_bound) + 1), rng.uniform(0.3, 0.8))
        k = rng.randrange(1, 4)
        rep.instances += 1
        got = {
            (s.side1.vertices, s.side1.edges, s.side2.vertices, s.side2.edges)
            for s in enumerate_separations(g, k, mode="exhaustive")
        }
        want = set()
        for (v1, e1), (v2, e2) in brute_separations(g, k):
            s1, s2 = Graph(v1, e1), Graph(v2, e2)
            if (s2.vertices, s2.edges) < (s1.vertices, s1.edges):
                s1, s2 = s2, s1
            want.add((s1.vertices, s1.edges, s2.vertices, s2.edges))
        if got != want:
            rep.counterexamples.append(f"separations: {gio.to_graph6(g)} k={k}")

    rep.elapsed = time.perf_counter() - t0
    return rep


def run_planar_no_k5(cfg: Config) -> ExperimentReport:
    rep = _report("planar-no-k5", cfg)
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)
    for _ in range(cfg.instances):
        n = rng.randrange(5, 13)
        g = random_planar_graph(n, rng, keep_fraction=rng.uniform(0.6, 1.0))
        rep.instances += 1
        if find_k5_subdivision(g, limit=cfg.search_bound) is not None:
            rep.counterexamples.append(f"k5-in-planar: {gio.to_graph6(g)}")
            continue
        emb = embed(g)
        comps = len(g.components())
        if g.n - g.m + emb.face_count() != 1 + comps:
            rep.counterexamples.append(f"euler: {gio.to_graph6(g)}")
        if not is_planar(g):
            rep.counterexamples.append(f"planarity-flip: {gio.to_graph6(g)}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def _unlabeled_canon(g: Graph) -> tuple:
    """Canonical adjacency bits, permuting only within refinement classes."""
    n = g.n
    profile = {
        v: (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors(v))))
        for v in g.vertices
    }
    classes: dict = {}
    for v in g.vertices:
        classes.setdefault(profile[v], []).append(v)
    ordered_classes = [classes[k] for k in sorted(classes)]
    idx = {v: i for i, v in enumerate(g.vertices)}
    bits_of = {
        v: frozenset(idx[u] for u in g.neighbors(v)) for v in g.vertices
    }
    best = None
    for perm_parts in _class_perms(ordered_classes):
        orderv = [v for part in perm_parts for v in part]
        pos = {v: i for i, v in enumerate(orderv)}
        bits = 0
        for u, v in g.edges:
            i, j = sorted((pos[u], pos[v]))
            bits |= 1 << (i * n + j)
        if best is None or bits < best:
            best = bits
    return (n, best)


def _class_perms(parts):
    if not parts:
        yield []
        return
    head, rest = parts[0], parts[1:]
    for p in permutations(head):
        for tail in _class_perms(rest):
            yield [list(p)] + tail


def small_graph_classes(n_max: int) -> list[Graph]:
    """One representative per isomorphism class, all graphs up to n_max."""
    out = []
    for n in range(1, n_max + 1):
        names = [str(i) for i in range(n)]
        pairs = list(combinations(names, 2))
        level = {_unlabeled_canon(Graph(names, ())): Graph(names, ())}
        while level:
            out.extend(level.values())
            nxt: dict = {}
            for g in level.values():
                for a, b in pairs:
                    if g.has_edge(a, b):
                        continue
                    bigger = add(g, (), [(a, b)])
                    key = _unlabeled_canon(bigger)
                    if key not in nxt:
                        nxt[key] = bigger
            level = nxt
    return out


def run_disc_planar_oracle(cfg: Config) -> ExperimentReport:
    rep = _report("disc-planar-oracle", cfg)
    t0 = time.perf_counter()
    seen_rooted = set()
    for g in small_graph_classes(6):
        for size in (1, 2, 3):
            if size > g.n:
                continue
            for ts in combinations(g.vertices, size):
                tg = TerminalGraph(g, ts, ordered=True)
                from wheelkit.generate import rooted_canonical_form

                key = rooted_canonical_form(tg)
                if key in seen_rooted:
                    continue
                seen_rooted.add(key)
                rep.instances += 1
                fence = is_disc_planar(tg)
                oracle = brute_disc_planar(g, ts)
                if fence != oracle:
                    rep.counterexamples.append(
                        f"disc-planar: {gio.to_graph6(g)} S={ts} fence={fence} oracle={oracle}"
                    )
    rep.elapsed = time.perf_counter() - t0
    return rep


def run_trichotomy_regression(cfg: Config) -> ExperimentReport:
    rep = _report("trichotomy-regression", cfg)
    t0 = time.perf_counter()
    rng = random.Random(cfg.seed)

    def hub_side(ts):
        edges = [(t, h) for t in ts for h in ("h1", "h2")] + [("h1", "h2")]
        return Graph(set(ts) | {"h1", "h2"}, edges)

    # catalog members glued as the planar side of an order-5 separation
    for m in catalog():
        side2 = hub_side(m.tg.terminals)
        g = union(m.tg.graph, side2)
        rep.instances += 1
        res = check_trichotomy(g, Separation(m.tg.graph, side2))
        if res.verdict is not Verdict.CATALOG:
            rep.counterexamples.append(f"catalog-glue {m.name}: {res.verdict.value}")

    # order-4 sides with five vertices
    for edges in (
        [("u", "t1"), ("u", "t2"), ("u", "t3"), ("u", "t4")],
        [("u", "t1"), ("u", "t2"), ("u", "t3"), ("u", "t4"), ("t1", "t2")],
        [("u", "t1"), ("u", "t2"), ("u", "t3"), ("u", "t4"), ("t1", "t2"), ("t3", "t4")],
    ):
        ts = ("t1", "t2", "t3", "t4")
        side1 = Graph(set(ts) | {"u"}, edges)
        side2 = hub_side(ts)
        g = union(side1, side2)
        rep.instances += 1
        res = check_trichotomy(g, Separation(side1, side2))
        if res.verdict is not Verdict.SMALL:
            rep.counterexamples.append(f"small-side: {res.verdict.value}")

    # seeded wheel-bearing sides (orders 4 and 5)
    for _ in range(40):
        order = rng.choice((4, 5))
        ts = tuple(f"t{i}" for i in range(1, order + 1))
        rim_len = rng.randrange(4, 7)
        rim = [f"r{i}" for i in range(rim_len)]
        side1 = add(
            Graph(rim, [(rim[i], rim[(i + 1) % rim_len]) for i in range(rim_len)]),
            {"c"},
            [("c", r) for r in rim],
        )
        attach = []
        for i, t in enumerate(ts):
            attach.append((t, rim[i % rim_len]))
        side1 = add(side1, set(ts), attach)
        if side1.n <= order + 1:
            continue
        side2 = hub_side(ts)
        g = union(side1, side2)
        tg = TerminalGraph(side1, ts, ordered=False)
        if not is_disc_planar(tg):
            continue
        rep.instances += 1
        res = check_trichotomy(g, Separation(side1, side2))
        if res.verdict is not Verdict.GOOD_WHEEL:
            rep.counterexamples.append(f"wheel-side: {res.verdict.value}")

    rep.elapsed = time.perf_counter() - t0
    return rep


def run_gen_catalog_members(cfg: Config) -> ExperimentReport:
    rep = _report("gen-catalog-members", cfg)
    t0 = time.perf_counter()
    from wheelkit.catalog import matches_catalog

    found = set()
    for tg in generate_terminal_planar(6, 5, filters=("s-independent",)):
        rep.instances += 1
        m = matches_catalog(tg)
        if m is not None:
            found.add(m.name)
    for name in ("W1", "W2"):
        if name not in found:
            rep.counterexamples.append(f"stream missed catalog member {name}")
    rep.elapsed = time.perf_counter() - t0
    return rep


EXPERIMENTS = {
    "catalog-no-good-wheel": run_catalog_no_good_wheel,
    "wheel-k5-construction": run_wheel_k5_construction,
    "lift-all-gadgets": run_lift_all_gadgets,
    "coloring-recipes": run_coloring_recipes,
    "oracle-equivalence": run_oracle_equivalence,
    "planar-no-k5": run_planar_no_k5,
    "disc-planar-oracle": run_disc_planar_oracle,
    "trichotomy-regression": run_trichotomy_regression,
    "gen-catalog-members": run_gen_catalog_members,
}


def run_experiment(name: str, cfg: Config | None = None) -> ExperimentReport:
    if name not in EXPERIMENTS:
        raise InputDomainError(
            f"unknown experiment {name!r}; known: {', '.join(sorted(EXPERIMENTS))}"
        )
    return EXPERIMENTS[name](cfg or Config())
