import json
import xml.etree.ElementTree as ET

import pytest

from trunkforge.cli import main, reproduction_checks
from trunkforge.morse import parse_word
from trunkforge.moves import parse_trace, replay

INFLATED = "u1 u2 n1 u2 n1 u2 n1 n1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def test_invariants_round_circle(capsys):
    code, out, _ = run(capsys, "invariants", "-w", "u1 n1")
    assert code == 0
    d = kv(out)
    assert (d["width"], d["bridge"], d["trunk"]) == ("2", "1", "2")
    assert set(d) == {"width", "bridge", "trunk", "thick", "thin", "profile"}


def test_invariants_catalog_stack(capsys):
    code, out, _ = run(capsys, "invariants", "--catalog", "4_1#8_5")
    d = kv(out)
    assert code == 0 and (d["width"], d["bridge"], d["trunk"]) == ("24", "4", "6")
    assert d["profile"] == "2,4,2,4,6,4,2"


def test_invariants_decomposition(capsys):
    code, out, _ = run(capsys, "invariants", "--thick", "8,16,16,8", "--thin", "4,14,4")
    d = kv(out)
    assert code == 0 and (d["width"], d["bridge"], d["trunk"]) == ("206", "13", "16")


def test_invariants_template_entry_uses_decomposition(capsys):
    code, out, _ = run(capsys, "invariants", "-c", "k'_4_1_3_3")
    assert code == 0 and kv(out)["width"] == "216"


def test_json_sorted(capsys):
    code, out, _ = run(capsys, "invariants", "-w", "u1 u2 n1 n1", "--format", "json")
    doc = json.loads(out)
    assert list(doc) == sorted(doc)
    assert doc["profile"] == [2, 4, 2] and doc["width"] == 8


def test_stack(capsys):
    _, out, _ = run(capsys, "stack", "4_1", "8_5")
    a = kv(out)
    _, out, _ = run(capsys, "stack", "8_5", "4_1")
    b = kv(out)
    triple = lambda d: (d["width"], d["bridge"], d["trunk"])  # noqa: E731
    assert triple(a) == triple(b) == ("24", "4", "6")
    assert a["word"] != b["word"]
    _, out, _ = run(capsys, "stack", "unknot", "unknot")
    assert kv(out)["word"] == "u1 n1"


def test_expand_and_realize(capsys):
    _, out, _ = run(capsys, "expand", "--thick", "4", "--thin", "")
    assert kv(out)["profile"] == "2,4,2"
    _, out, _ = run(capsys, "realize", "--profile", "2,4,6,4,2")
    w = parse_word(kv(out)["word"])
    assert w.components == 1 and w.crossings == 0


def test_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "invariants", "-w", "u1 n2")
    assert code == 2 and "event" in err
    assert run(capsys, "invariants", "-w", "u1 x1")[0] == 2
    assert run(capsys, "invariants", "-w", "u1 u1 n1 n1")[0] == 3
    assert run(capsys, "invariants", "-w", "u1 u1 n1 n1", "--allow-links")[0] == 0
    assert run(capsys, "invariants", "-c", "K_3_0_3_3")[0] == 2
    assert run(capsys, "invariants", "-c", "no_such_knot")[0] == 2
    assert run(capsys, "render", "-f", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "orbit-min", "-c", "4_1#8_5", "--depth", "3", "--max-frontier", "5")[0] == 4
    assert run(capsys, "search", "-w", INFLATED, "--strategy", "bfs", "--depth", "3",
               "--max-frontier", "2", "--strict")[0] == 4


def test_search_bfs(capsys, tmp_path):
    trace = tmp_path / "t.txt"
    code, out, _ = run(capsys, "search", "-w", INFLATED, "--objective", "width",
                       "--strategy", "bfs", "--depth", "5", "--trace", str(trace))
    d = kv(out)
    assert code == 0 and d["width"] == "2"
    assert str(replay(parse_word(INFLATED), parse_trace(trace.read_text()))) == d["word"]


def test_search_greedy_seeded(capsys):
    argv = ["search", "-c", "4_1#8_5", "--perturb", "3", "--objective", "trunk",
            "--strategy", "greedy", "--seed", "7"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert kv(first)["trunk"] == "6"
    assert kv(first)["start_word"] != kv(first)["word"]


def test_search_anneal_deterministic(capsys):
    argv = ["search", "-w", INFLATED, "--strategy", "anneal", "--steps", "200", "--seed", "7",
            "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_orbit_min(capsys):
    code, out, _ = run(capsys, "orbit-min", "-c", "4_1#8_5", "--depth", "2")
    assert code == 0 and kv(out)["orbit_min"] == "6"


def test_catalog_listing(capsys, tmp_path, monkeypatch):
    _, out, _ = run(capsys, "catalog")
    assert {"unknot", "4_1", "8_5", "4_1#8_5", "K_3_0_3_3"} <= set(out.split())
    _, out, _ = run(capsys, "catalog", "4_1#8_5")
    d = kv(out)
    assert d["fact_w"] == d["computed_w"] == "24"
    path = tmp_path / "c.txt"
    path.write_text("name: solo\nword: u1 n1\n")
    monkeypatch.setenv("TRUNKFORGE_CATALOG", str(path))
    assert run(capsys, "catalog")[1].split() == ["solo"]


def test_render(capsys, tmp_path):
    _, out, _ = run(capsys, "render", "-w", "u1 n1")
    assert len(out.splitlines()) == 2
    _, out, _ = run(capsys, "render", "-w", "u1 u2 n1 n1")
    assert len(out.splitlines()) == 4
    svg = tmp_path / "k.svg"
    assert run(capsys, "render", "-c", "4_1", "--format", "svg", "-o", str(svg))[0] == 0
    assert ET.parse(svg).getroot().tag.endswith("svg")


def test_reproduce_paper(capsys):
    code, out, _ = run(capsys, "reproduce-paper")
    assert code == 0 and "FAIL" not in out
    assert all(ok for *_, ok in reproduction_checks())


def test_file_and_stdin_input(capsys, tmp_path, monkeypatch):
    import io

    path = tmp_path / "w.txt"
    path.write_text("# fig eight\nu1 u3 p2 p2\nm1 p2 n3 n1\n")
    assert kv(run(capsys, "invariants", "-f", str(path))[1])["width"] == "8"
    monkeypatch.setattr("sys.stdin", io.StringIO("u1 n1"))
    assert kv(run(capsys, "invariants", "-f", "-")[1])["width"] == "2"


def test_bad_int_list(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--thick", "a,b"])
    assert exc.value.code == 2
