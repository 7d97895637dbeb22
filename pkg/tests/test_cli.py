import csv
import io
import json

import pytest

from entropy_nand.cli import run
from entropy_nand.core import network_from_dict, network_to_json, network_from_arcs
from entropy_nand.patterns import canonical_form, enumerate_patterns

SUBCOMMANDS = ["enumerate", "classify", "gate", "search", "synthesize", "eval-netlist", "simulate", "profile"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_enumerate_names():
    code, out, _ = call("enumerate", "--n", "2", "--format", "names")
    assert code == 0
    names = out.split()
    assert sorted(names) == ["e_out", "loop", "s_in", "train"]
    code, labels, _ = call("enumerate", "--n", "2", "--format", "labels")
    hexes = [line.split()[0] for line in labels.splitlines()]
    assert hexes == sorted(hexes)
    assert [line.split()[1] for line in labels.splitlines()] == names


def test_enumerate_json_round_trips():
    _, out, _ = call("enumerate", "--n", "3", "--format", "json")
    docs = json.loads(out)
    assert len(docs) == 12
    for doc, net in zip(docs, enumerate_patterns(3)):
        assert canonical_form(network_from_dict(doc)) == canonical_form(net)


def test_gate_plain_and_traces(tmp_path):
    assert call("gate", "--kind", "nand", "--inputs", "1,1")[:2] == (0, "0\n")
    assert call("gate", "--kind", "nor", "--inputs", "0,0")[:2] == (0, "1\n")
    dot = tmp_path / "g.dot"
    code, out, _ = call("gate", "--inputs", "0,1", "--trace", "json", "--dot", str(dot))
    assert code == 0
    doc = json.loads(out)
    assert doc["output"] == 1 and doc["u"] == 0.5 and doc["pattern"] == "train"
    assert network_from_dict(doc["network"]).arcs == {("a", "o"), ("o", "b")}
    assert '"a" -> "o"' in dot.read_text()
    code, out, _ = call("gate", "--inputs", "1,1", "--trace", "csv")
    row = list(csv.DictReader(io.StringIO(out)))[0]
    assert row["o_S"] == "2" and row["output"] == "0"


@pytest.mark.parametrize("argv", [["gate", "--inputs", "1,2"], ["gate", "--inputs", "1"], ["gate", "--bogus"],
                                  ["profile", "--samples", "1"], [], ["nosuch"]])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_domain_errors(tmp_path):
    code, out, err = call("enumerate", "--n", "9")
    assert code == 1 and out == "" and len(err.strip().splitlines()) == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"elements": [{"id": "a"}], "edges": [{"observer": "a", "observed": "a", "order": 0}]}')
    assert call("classify", str(bad))[0] == 1
    assert call("synthesize", "--expr", "a &")[0] == 1
    assert call("search", "--n", "2", "--budget", "9")[0] == 1


@pytest.mark.parametrize("sub", SUBCOMMANDS)
def test_help(sub, capsys):
    assert run([sub, "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_classify(tmp_path):
    path = tmp_path / "net.json"
    path.write_text(network_to_json(network_from_arcs([("a", "e"), ("b", "e")])))
    code, out, _ = call("classify", str(path))
    assert code == 0 and out.startswith("e_out ")


def test_search():
    code, out, _ = call("search", "--n", "2", "--budget", "6")
    names = {line.split()[0] for line in out.splitlines()}
    assert {"NAND", "NOR"} <= names
    assert not {"AND", "OR", "XOR", "XNOR"} & names


def test_synthesize_and_eval(tmp_path):
    code, text, _ = call("synthesize", "--expr", "a ^ b")
    assert code == 0 and text.count("NAND") == 4
    path = tmp_path / "xor.net"
    path.write_text(text)
    assert call("eval-netlist", "--netlist", str(path), "--assign", "a=1,b=1")[1] == "0\n"
    code, sweep, _ = call("eval-netlist", "--netlist", str(path))
    rows = list(csv.reader(io.StringIO(sweep)))
    assert [r[-1] for r in rows[1:]] == ["0", "1", "1", "0"]
    assert call("eval-netlist", "--netlist", str(path), "--assign", "a=1")[0] == 1
    report = json.loads(call("synthesize", "--expr", "a ^ b", "--emit", "report")[1])
    assert report["gate_count"] == 4 and report["depth"] == 3
    assert call("synthesize", "--expr", "!a", "--emit", "dot")[1].startswith("digraph")


def test_simulate(tmp_path):
    code, out, _ = call("simulate", "--trials", "200", "--seed", "4")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["a"] + r["b"] for r in rows] == ["00", "01", "10", "11"]
    assert out == call("simulate", "--trials", "200", "--seed", "4")[1]
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"quantum": 1.0, "noise_sigma": 0.0, "seed": 1}))
    rows = list(csv.DictReader(io.StringIO(call("simulate", "--config", str(cfg), "--trials", "3")[1])))
    assert {r["accuracy"] for r in rows} == {"1.0"}


def test_profile():
    code, out, _ = call("profile", "--mode", "hp", "--samples", "3")
    lines = out.splitlines()
    assert lines[0] == "t,entropy_nats"
    vals = [tuple(map(float, l.split(","))) for l in lines[1:]]
    assert vals[0] == (0.0, 0.0) and vals[2] == (1.0, 0.0)
    assert vals[1][1] == pytest.approx(0.6931, abs=1e-4)
    _, out, _ = call("profile", "--mode", "kronecker", "--samples", "5")
    rows = [tuple(map(float, l.split(","))) for l in out.splitlines()[1:]]
    assert [t for t, v in rows if v == 1.0] == [0.5]
    assert sum(v for _, v in rows) == 1.0
