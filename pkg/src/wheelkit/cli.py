"""Command-line interface.

Graphs are read from files in graph6 or edge-list format (`-` for stdin);
terminal sets come from the edge list's trailing ``S:`` line or from
``--terminals``.  Reports are JSON on stdout (or --out).  Exit status:
0 success / property holds, 1 counterexample or property fails, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from wheelkit import gio
from wheelkit.catalog import catalog, matches_catalog
from wheelkit.coloring import four_color
from wheelkit.errors import WheelkitError
from wheelkit.experiments import EXPERIMENTS, Config, run_experiment
from wheelkit.gadgets import apply_gadget, gadget_case, gadget_library, lift_subdivision
from wheelkit.generate import FILTERS, generate_terminal_planar
from wheelkit.graph import Graph
from wheelkit.planarity import TerminalGraph, embed, is_disc_planar, is_planar
from wheelkit.separations import Separation, check_trichotomy, enumerate_separations
from wheelkit.subdivisions import find_k5_subdivision
from wheelkit.wheels import find_s_good_wheel


def _read(path: str):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return gio.sniff_graph(text)


def _emit(payload, out):
    text = json.dumps(payload, indent=2, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _terminals(args, parsed) -> tuple:
    if getattr(args, "terminals", None):
        g, _ = parsed
        names = args.terminals.split(",")
        return tuple(g.vertices[int(t)] if t.isdigit() else t for t in names)
    _, ts = parsed
    return ts or ()


def cmd_planar(args):
    g, _ = _read(args.graph)
    emb_faces = None
    if is_planar(g):
        emb = embed(g)
        emb_faces = [list(emb.face_vertices(i)) for i in range(len(emb.faces))]
        _emit({"planar": True, "faces": emb_faces}, args.out)
        return 0
    _emit({"planar": False, "faces": None}, args.out)
    return 1


def cmd_faces(args):
    g, _ = _read(args.graph)
    emb = embed(g)
    _emit(
        {
            "planar": True,
            "faces": [list(emb.face_vertices(i)) for i in range(len(emb.faces))],
            "face_count": emb.face_count(),
        },
        args.out,
    )
    return 0


def cmd_disc_planar(args):
    parsed = _read(args.graph)
    g, _ = parsed
    ts = _terminals(args, parsed)
    tg = TerminalGraph(g, ts, ordered=not args.unordered)
    ok = is_disc_planar(tg)
    _emit({"disc_planar": ok, "ordered": tg.ordered, "terminals": list(ts)}, args.out)
    return 0 if ok else 1


def cmd_good_wheel(args):
    parsed = _read(args.graph)
    g, _ = parsed
    ts = _terminals(args, parsed)
    tg = TerminalGraph(g, ts, ordered=False)
    w = find_s_good_wheel(tg, limit=args.limit)
    if w is None:
        _emit({"found": False}, args.out)
        return 1
    _emit(
        {"found": True, "center": w.center, "rim": list(w.rim), "spokes": sorted(w.spokes)},
        args.out,
    )
    return 0


def cmd_k5(args):
    g, _ = _read(args.graph)
    sub = find_k5_subdivision(g, limit=args.limit)
    if sub is None:
        _emit({"found": False}, args.out)
        return 1
    _emit({"found": True, "branch": list(sub.branch), "paths": [list(p) for p in sub.paths]}, args.out)
    return 0


def cmd_color(args):
    g, _ = _read(args.graph)
    col = four_color(g)
    if col is None:
        _emit({"colorable": False, "assignment": None}, args.out)
        return 1
    _emit({"colorable": True, "assignment": col.as_dict()}, args.out)
    return 0


def cmd_separations(args):
    g, _ = _read(args.graph)
    out = []
    for sep in enumerate_separations(g, args.k, mode=args.mode):
        if args.planar_side:
            side = TerminalGraph(sep.side1, sep.cut, ordered=False)
            if not is_disc_planar(side):
                continue
        out.append(
            {
                "cut": list(sep.cut),
                "side1": {"vertices": list(sep.side1.vertices), "edges": [list(e) for e in sep.side1.edges]},
                "side2": {"vertices": list(sep.side2.vertices), "edges": [list(e) for e in sep.side2.edges]},
            }
        )
        if args.max and len(out) >= args.max:
            break
    _emit({"order": args.k, "count": len(out), "separations": out}, args.out)
    return 0


def cmd_trichotomy(args):
    g, _ = _read(args.graph)
    cut = tuple(args.cut.split(","))
    exclusive = set(args.side.split(","))
    cutset = set(cut)
    side1_vs = exclusive | cutset
    for e in g.edges:
        u, v = e
        if (u in exclusive) != (v in exclusive) and not (u in side1_vs and v in side1_vs):
            print(f"error: edge {e} crosses the claimed separation", file=sys.stderr)
            return 2
    induced = g.induced(side1_vs)
    side1_edges = [e for e in induced.edges if not set(e) <= cutset]
    side1 = Graph(side1_vs, side1_edges)
    side2 = Graph(
        set(g.vertices) - exclusive,
        [e for e in g.edges if e not in set(side1_edges)],
    )
    res = check_trichotomy(g, Separation(side1, side2))
    payload = {"verdict": res.verdict.value}
    if res.wheel:
        payload["wheel"] = {"center": res.wheel.center, "rim": list(res.wheel.rim)}
    if res.member:
        payload["member"] = res.member.name
    _emit(payload, args.out)
    return 0 if res.verdict.value != "none" else 1


def cmd_catalog(args):
    if args.action == "list":
        _emit(
            [
                {
                    "name": m.name,
                    "vertices": m.tg.graph.n,
                    "terminals": list(m.tg.terminals),
                    "special_vertex": m.special_vertex,
                }
                for m in catalog()
            ],
            args.out,
        )
        return 0
    if args.action == "dump":
        payload = {}
        for m in catalog():
            if args.format == "graph6":
                payload[m.name] = gio.to_graph6(m.tg.graph)
            elif args.format == "dot":
                payload[m.name] = gio.to_dot(m.tg.graph, m.tg.terminals)
            else:
                payload[m.name] = gio.to_edgelist(m.tg.graph, m.tg.terminals)
        _emit(payload, args.out)
        return 0
    # match
    parsed = _read(args.graph)
    g, _ = parsed
    ts = _terminals(args, parsed)
    m = matches_catalog(TerminalGraph(g, ts, ordered=False))
    _emit({"match": m.name if m else None}, args.out)
    return 0 if m else 1


def cmd_lift(args):
    case = gadget_case(args.rule)
    if args.demo:
        g = case.hosts[min(args.host, len(case.hosts) - 1)]
    else:
        if not args.graph:
            print("error: need a graph file or --demo", file=sys.stderr)
            return 2
        g, _ = _read(args.graph)
        if args.map:
            rename = {}
            for item in args.map.split(","):
                rule_name, _, input_name = item.partition("=")
                rename[input_name.strip()] = rule_name.strip()
            g = Graph(
                [rename.get(v, v) for v in g.vertices],
                [(rename.get(u, u), rename.get(v, v)) for u, v in g.edges],
            )
    gp = apply_gadget(g, case.rule)
    sub = find_k5_subdivision(gp, limit=args.limit)
    if sub is None:
        _emit({"reduced_has_k5": False}, args.out)
        return 1
    lifted = lift_subdivision(g, case.rule, sub)
    _emit(
        {
            "reduced_has_k5": True,
            "branch": list(lifted.branch),
            "paths": [list(p) for p in lifted.paths],
        },
        args.out,
    )
    return 0


def cmd_gen(args):
    count = 0
    lines = []
    for tg in generate_terminal_planar(args.n_max, args.s_size, filters=tuple(args.filter or ())):
        lines.append(gio.to_edgelist(tg.graph, tg.terminals))
        count += 1
        if args.max and count >= args.max:
            break
    _emit({"count": count, "graphs": lines}, args.out)
    return 0


def cmd_verify(args):
    cfg = Config()
    if args.config:
        for line in open(args.config):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if hasattr(cfg, key):
                setattr(cfg, key, int(value.strip()))
    if args.seed is not None:
        cfg.seed = args.seed
    names = sorted(EXPERIMENTS) if args.experiment == "all" else [args.experiment]
    reports = [run_experiment(n, cfg) for n in names]
    _emit([r.as_dict() for r in reports], args.out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wheelkit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="graph file (graph6 or edge list), - for stdin")
        p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("planar", help="planarity plus a face report")
    common(p)
    p.set_defaults(func=cmd_planar)

    p = sub.add_parser("faces", help="faces of a planar embedding")
    common(p)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("disc-planar", help="disc-planarity of a terminal graph")
    common(p)
    p.add_argument("--terminals", help="comma-separated terminal ids (else S: line)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--ordered", action="store_true", default=True)
    mode.add_argument("--unordered", action="store_true")
    p.set_defaults(func=cmd_disc_planar)

    p = sub.add_parser("good-wheel", help="search for a terminal-good wheel")
    common(p)
    p.add_argument("--terminals")
    p.add_argument("--limit", type=int, default=12)
    p.set_defaults(func=cmd_good_wheel)

    p = sub.add_parser("k5", help="exact K5-subdivision search")
    common(p)
    p.add_argument("--limit", type=int, default=12)
    p.set_defaults(func=cmd_k5)

    p = sub.add_parser("color", help="exact 4-coloring")
    common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("separations", help="enumerate k-separations")
    common(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--planar-side", action="store_true", help="keep only disc-planar side1")
    p.add_argument("--mode", choices=("canonical", "exhaustive"), default="canonical")
    p.add_argument("--max", type=int, default=0, help="stop after this many")
    p.set_defaults(func=cmd_separations)

    p = sub.add_parser("trichotomy", help="planar-side trichotomy verdict")
    common(p)
    p.add_argument("--cut", required=True, help="comma-separated cut vertex ids")
    p.add_argument("--side", required=True, help="comma-separated side1 exclusive vertices")
    p.set_defaults(func=cmd_trichotomy)

    p = sub.add_parser("catalog", help="obstruction catalog")
    p.add_argument("action", choices=("list", "dump", "match"))
    p.add_argument("graph", nargs="?", help="graph to match")
    p.add_argument("--format", choices=("graph6", "dot", "edgelist"), default="edgelist")
    p.add_argument("--terminals")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("lift", help="apply a gadget rule and lift the K5 witness")
    p.add_argument("graph", nargs="?", help="host graph file; vertex names via --map")
    p.add_argument("--out")
    p.add_argument("--rule", required=True, choices=[c.rule.name for c in gadget_library()])
    p.add_argument("--map", help="rule-to-input vertex map, e.g. u=0,v=1,v1=2")
    p.add_argument("--demo", action="store_true", help="run on the shipped corpus host")
    p.add_argument("--host", type=int, default=0, help="corpus host index for --demo")
    p.add_argument("--limit", type=int, default=12)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("gen", help="stream small disc-planar terminal graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--s-size", type=int, required=True)
    p.add_argument("--filter", action="append", choices=sorted(FILTERS))
    p.add_argument("--max", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run a named verification experiment")
    p.add_argument("experiment", choices=sorted(EXPERIMENTS) + ["all"])
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except WheelkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
