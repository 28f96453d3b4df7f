import json

import pytest

from regsat.cli import main, read_graph, resolve_graph
from regsat.constructions import blow_up, complete, cycle, empty, join
from regsat.graph import encode_graph6
from regsat.patterns import PatternError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_and_check(tmp_path, capsys):
    g6 = tmp_path / "g.g6"
    code, out, _ = run(capsys, "gen", "circulant-k3", "--n", "35", "--out", str(g6))
    assert code == 0
    meta = json.loads((tmp_path / "g.g6.json").read_text())
    assert meta["n"] == 35 and meta["d"] == 10 and meta["params"]["A"] == [1, 3, 5, 12, 14]
    code, out, _ = run(capsys, "check", "--in", str(g6), "--pattern", "K3", "--property", "saturated")
    assert code == 0 and json.loads(out)["pass"] is True


def test_gen_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.g6", tmp_path / "b.g6"
    run(capsys, "gen", "polarity-twin", "--p", "2", "--out", str(a))
    meta = json.loads((tmp_path / "a.g6.json").read_text())
    run(capsys, "gen", meta["construction"], "--p", str(meta["params"]["p"]), "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert meta["n"] == 22 and meta["d"] == 5
    assert (tmp_path / "a.g6.labels").read_text().splitlines()[-1] == "21 twin"


def test_check_failure_and_errors(tmp_path, capsys):
    c7 = tmp_path / "c7.g6"
    c7.write_bytes(encode_graph6(cycle(7)) + b"\n")
    code, out, _ = run(capsys, "check", "--in", str(c7), "--pattern", "K3", "--property", "saturated")
    assert code == 1 and json.loads(out)["witness"] == {"non_edge": [0, 3]}
    bad = tmp_path / "bad.g6"
    bad.write_text("Bw!!\n")
    code, _, err = run(capsys, "check", "--in", str(bad), "--pattern", "K3", "--property", "free")
    assert code == 2 and "offset" in err
    code, _, _ = run(capsys, "check", "--in", str(tmp_path / "missing.g6"), "--pattern", "K3", "--property", "free")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "--in", str(c7), "--pattern", "K3", "--property", "saturated", "--sample", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["gen", "nonsense", "--out", str(tmp_path / "x.g6")])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "check", "--in", str(c7), "--pattern", "Q7", "--property", "free")
    assert code == 2


def test_sampled_check(tmp_path, capsys):
    g6 = tmp_path / "g.g6"
    run(capsys, "gen", "circulant-k4", "--n", "30", "--out", str(g6))
    code, out, _ = run(capsys, "check", "--in", str(g6), "--pattern", "K4", "--property", "saturated",
                       "--sample", "20", "--seed", "3")
    assert code == 0 and json.loads(out)["mode"] == "sampled(20,3)"


def test_graph_keys(tmp_path, capsys):
    assert resolve_graph("C5[E2]+E6") == join(blow_up(cycle(5), empty(2)), empty(6))
    assert resolve_graph("(C5+E3)[E10]") == blow_up(join(cycle(5), empty(3)), empty(10))
    assert resolve_graph("C5[K2[E1]]") == blow_up(cycle(5), blow_up(complete(2), empty(1)))
    with pytest.raises(PatternError):
        resolve_graph("(C5")
    out = tmp_path / "j.txt"
    code, _, _ = run(capsys, "gen", "join", "--left", "C5", "--right", "E3", "--out", str(out))
    assert code == 0 and read_graph(out) == join(cycle(5), empty(3))
    assert out.read_text().startswith("name join\nn 8\n")


def test_plan(tmp_path, capsys):
    code, out, _ = run(capsys, "plan", "--s", "1", "--q", "4", "--seed", "C5", "--m", "1", "--out-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0
    assert doc["steps"][1]["t"] == 9 and (doc["steps"][1]["n"], doc["steps"][1]["d"]) == (192, 51)
    assert read_graph(tmp_path / "F1.g6").n == 192


def test_amalgam(tmp_path, capsys):
    code, out, _ = run(capsys, "amalgam", "--q", "4", "--s", "1", "--g", "C5", "--out", str(tmp_path / "a.g6"))
    doc = json.loads(out)
    assert code == 0 and (doc["n"], doc["d"], doc["t"]) == (64, 17, 3)
    code, out, _ = run(capsys, "amalgam", "--q", "3", "--s", "1", "--g", "C5")
    assert code == 1 and json.loads(out)["t_rational"] == "5/2"


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--pattern", "K4", "--n", "33", "--d", "8", "--t", "2")
    doc = json.loads(out)
    assert code == 0 and (doc["m"], doc["r"]) == (2, 2)
    checks = {c["name"]: c for c in doc["inequalities"]["details"]["checks"]}
    assert (checks["cycle_bound"]["lhs"], checks["cycle_bound"]["rhs"]) == (24, 64)
    code, _, _ = run(capsys, "bounds", "--pattern", "K3", "--n", "100", "--d", "3")
    assert code == 1


def test_search_and_table(tmp_path, capsys):
    store = tmp_path / "s.jsonl"
    code, out, _ = run(capsys, "search", "--n", "7", "--pattern", "K3", "--store", str(store))
    assert code == 0 and json.loads(out)["status"] == "nonexistent"
    code, out, _ = run(capsys, "table", "--store", str(store))
    assert code == 0 and "none" in out
    code, out, _ = run(capsys, "table", "--store", str(store), "--format", "csv")
    assert out.startswith("pattern,n,d")
