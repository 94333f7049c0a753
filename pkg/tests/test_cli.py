import json

import pytest

from wheelkit.cli import main
from wheelkit.gio import to_edgelist, to_graph6
from wheelkit.graph import add, complete_graph, cycle_graph
from wheelkit.catalog import catalog


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_planar_k4(tmp_path, capsys):
    path = write(tmp_path, "k4.g6", to_graph6(complete_graph(list("abcd"))) + "\n")
    code, payload = run(capsys, "planar", path)
    assert code == 0 and payload["planar"] is True
    assert len(payload["faces"]) == 4


def test_planar_k5_fails(tmp_path, capsys):
    path = write(tmp_path, "k5.g6", to_graph6(complete_graph(list("abcde"))) + "\n")
    code, payload = run(capsys, "planar", path)
    assert code == 1 and payload["planar"] is False


def test_disc_planar_with_terminal_line(tmp_path, capsys):
    c5 = cycle_graph([f"v{i}" for i in range(5)])
    path = write(tmp_path, "c5.txt", to_edgelist(c5, terminals=tuple(c5.vertices)))
    code, payload = run(capsys, "disc-planar", path)
    assert code == 0 and payload["disc_planar"] is True


def test_k5_subcommand(tmp_path, capsys):
    path = write(tmp_path, "k5.g6", to_graph6(complete_graph(list("abcde"))) + "\n")
    code, payload = run(capsys, "k5", path)
    assert code == 0 and payload["found"] and len(payload["paths"]) == 10


def test_color_subcommand(tmp_path, capsys):
    path = write(tmp_path, "k5.g6", to_graph6(complete_graph(list("abcde"))) + "\n")
    code, payload = run(capsys, "color", path)
    assert code == 1 and payload["colorable"] is False


def test_good_wheel_subcommand(tmp_path, capsys):
    rim = ["r1", "r2", "r3", "r4"]
    g = add(cycle_graph(rim), {"c"}, [("c", r) for r in rim])
    path = write(tmp_path, "wheel.txt", to_edgelist(g))
    code, payload = run(capsys, "good-wheel", path)
    assert code == 0 and payload["found"]


def test_separations_subcommand(tmp_path, capsys):
    path = write(tmp_path, "c6.txt", to_edgelist(cycle_graph([f"v{i}" for i in range(6)])))
    code, payload = run(capsys, "separations", path, "-k", "2")
    assert code == 0 and payload["count"] > 0


def test_catalog_list_and_match(tmp_path, capsys):
    code, payload = run(capsys, "catalog", "list")
    assert code == 0 and len(payload) == 6
    w1 = next(m for m in catalog() if m.name == "W1")
    path = write(tmp_path, "w1.txt", to_edgelist(w1.tg.graph, w1.tg.terminals))
    code, payload = run(capsys, "catalog", "match", path)
    assert code == 0 and payload["match"] == "W1"


def test_trichotomy_subcommand(tmp_path, capsys):
    w1 = next(m for m in catalog() if m.name == "W1")
    from wheelkit.graph import Graph, union

    ts = w1.tg.terminals
    side2 = Graph(edges=[(t, h) for t in ts for h in ("h1", "h2")] + [("h1", "h2")])
    g = union(w1.tg.graph, side2)
    idx = {v: str(i) for i, v in enumerate(g.vertices)}
    path = write(tmp_path, "glued.txt", to_edgelist(g))
    code, payload = run(
        capsys,
        "trichotomy",
        path,
        "--cut",
        ",".join(idx[t] for t in ts),
        "--side",
        idx["u"],
    )
    assert code == 0 and payload["verdict"] == "catalog"


def test_lift_demo(capsys):
    code, payload = run(capsys, "lift", "--rule", "pair_chord", "--demo")
    assert code == 0
    assert payload["reduced_has_k5"] is True and len(payload["paths"]) == 10


def test_lift_with_mapped_file(tmp_path, capsys):
    from wheelkit.gadgets import gadget_case

    case = gadget_case("pair_chord")
    host = case.hosts[0]
    idx = {v: str(i) for i, v in enumerate(host.vertices)}
    path = write(tmp_path, "host.txt", to_edgelist(host))
    mapping = ",".join(f"{v}={idx[v]}" for v in ("u", "v", "v1", "v2", "v3", "v4"))
    code, payload = run(capsys, "lift", "--rule", "pair_chord", "--map", mapping, path)
    assert code == 0 and payload["reduced_has_k5"] is True


def test_gen_subcommand(capsys):
    code, payload = run(capsys, "gen", "--n-max", "5", "--s-size", "4", "--max", "5")
    assert code == 0 and payload["count"] == 5


def test_verify_subcommand(capsys):
    code, payload = run(capsys, "verify", "catalog-no-good-wheel")
    assert code == 0 and payload[0]["pass"] is True


def test_verify_with_config_file(tmp_path, capsys):
    cfg = write(tmp_path, "bench.cfg", "seed = 99\ninstances = 20\n")
    code, payload = run(capsys, "verify", "planar-no-k5", "--config", cfg)
    assert code == 0
    assert payload[0]["config"]["seed"] == 99
    assert payload[0]["instances"] == 20


def test_usage_error_exit_2(tmp_path):
    assert main(["k5", str(tmp_path / "missing.g6")]) == 2
