import csv
import json

import pytest

from modcycle.cli import run
from modcycle.generate import random_digraph
from modcycle.graph import parse_graph, walk_is_cycle


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def doc(capsys):
    return json.loads(capsys.readouterr().out)


def test_classify_np_complete(capsys):
    assert run(["classify", "--kind", "dc", "--m", "3", "--set", "2"]) == 0
    out = doc(capsys)
    assert out["result"]["verdict"] == "NpComplete"
    assert out["result"]["witness"] == {"p": 2, "d1": 1, "d2": 1}
    assert out["citation"] == "thm1i"


def test_classify_uc(capsys):
    assert run(["classify", "--kind", "uc", "--m", "6", "--set", "1,2,4,5"]) == 0
    assert doc(capsys)["result"] == {"verdict": "TractableHere", "citation": "thm7"}


def test_usage_errors(capsys):
    assert run(["classify", "--kind", "dc", "--m", "3", "--set", "5"]) == 2
    assert run(["classify", "--kind", "dc", "--m", "3", "--set", "a"]) == 2
    assert run(["nonsense"]) == 2
    assert run(["detect", "--input", "/nonexistent", "--m", "2", "--set", "1"]) == 2


def test_detect_directed_triangle(write, capsys):
    path = write("directed 3\n0 1\n1 2\n2 0\n")
    assert run(["detect", "--input", path, "--m", "2", "--set", "1"]) == 0
    out = doc(capsys)
    assert out["result"]["answer"] is True
    assert out["result"]["route"] == "closed-walk-residues"
    assert out["result"]["witness"]["length"] == 3
    assert "input_digest" in out and "millis" in out


def test_detect_no_answer(write, capsys):
    path = write("directed 3\n0 1\n1 2\n2 0\n")
    assert run(["detect", "--input", path, "--m", "3", "--set", "1,2"]) == 1
    assert doc(capsys)["result"]["answer"] is False


def test_detect_np_complete_falls_back_to_oracle(write, capsys):
    path = write("directed 5\n0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n")
    assert run(["detect", "--input", path, "--m", "4", "--set", "2"]) == 1
    captured = capsys.readouterr()
    out = json.loads(captured.out)
    assert out["result"]["route"] == "oracle"
    assert "p=2, d1=1, d2=1" in out["result"]["warnings"][0]
    assert "warning" in captured.err


def test_detect_oracle_gate(write, capsys):
    edges = "".join(f"{i} {(i + 1) % 20}\n" for i in range(20))
    path = write("directed 20\n" + edges)
    assert run(["detect", "--input", path, "--m", "4", "--set", "2"]) == 3
    assert doc(capsys)["error"] == "OracleLimit"
    assert run(["detect", "--input", path, "--m", "4", "--set", "2", "--oracle-max-n", "32"]) == 1


@pytest.mark.parametrize(
    "m, s, answer, route",
    [("2", "1", True, "odd-cycle-bipartite"), ("2", "0", True, "even-cycle-blocks"),
     ("6", "1,2,4,5", True, "divisor-reduction+oracle-period"), ("4", "0,2", True, "oracle")],
)
def test_detect_undirected_routes(write, capsys, m, s, answer, route):
    # triangle 0-1-2 plus square 2-3-4-5
    path = write("undirected 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 2\n")
    code = run(["detect", "--input", path, "--m", m, "--set", s])
    out = doc(capsys)
    assert code == (0 if answer else 1)
    assert out["result"]["route"] == route
    g = parse_graph(open(path).read())
    assert walk_is_cycle(g, out["result"]["witness"]["vertices"])


@pytest.mark.parametrize("seed", range(5))
def test_shortest_engines_agree(write, capsys, seed):
    path = write(random_digraph(30, 0.1, seed).serialize())
    results = []
    for engine in ("matrix", "bfs"):
        assert run(["shortest", "--input", path, "--m", "3", "--set", "1,2", "--engine", engine]) == 0
        results.append(doc(capsys)["result"]["k_min"])
    assert results[0] == results[1]


def test_shortest_condition_unsupported(write, capsys):
    path = write("directed 3\n0 1\n1 2\n2 0\n")
    assert run(["shortest", "--input", path, "--m", "3", "--set", "2"]) == 3
    assert doc(capsys)["error"] == "ConditionUnsupported"


def test_reduce_emits_parseable_graph(write, capsys, tmp_path):
    path = write("directed 3\n0 1\n1 2\n2 0\n")
    assert run(["reduce", "--input", path, "--s", "0", "--t", "1", "--m", "3", "--set", "2", "--d1", "1", "--d2", "1"]) == 0
    text = capsys.readouterr().out
    assert "# m 3 set 2 p 2 d1 1 d2 1" in text
    assert parse_graph(text).n == 5
    out = tmp_path / "gp.txt"
    assert run(["reduce", "--input", path, "--s", "0", "--t", "1", "--m", "3", "--set", "2",
                "--d1", "1", "--d2", "1", "--output", str(out)]) == 0
    assert doc(capsys)["result"]["n"] == 5
    assert parse_graph(out.read_text()).n == 5
    assert run(["reduce", "--input", path, "--s", "0", "--t", "1", "--m", "3", "--set", "1,2", "--d1", "1", "--d2", "1"]) == 2


def test_oracle_command(write, capsys):
    path = write("undirected 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert run(["oracle", "--input", path]) == 0
    out = doc(capsys)["result"]
    assert out["count"] == 7 and out["lengths"] == [3, 4] and out["period"] == 1
    assert run(["oracle", "--input", path, "--m", "5", "--set", "0"]) == 1


def test_bench_csv_and_determinism(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    argv = ["bench", "--n", "40", "--density", "0.2", "--m", "2", "--set", "1", "--csv", str(out), "--trials", "3", "--seed", "7"]
    assert run(argv) == 0
    capsys.readouterr()
    rows = list(csv.DictReader(out.open()))
    assert list(rows[0]) == ["engine", "n", "density", "m", "set", "k_min", "millis", "seed"]
    assert len(rows) == 6
    for a, b in zip(rows[::2], rows[1::2]):
        assert a["engine"] == "matrix" and b["engine"] == "bfs" and a["k_min"] == b["k_min"]
    first = [(r["engine"], r["k_min"], r["seed"]) for r in rows]
    run(argv)
    capsys.readouterr()
    assert first == [(r["engine"], r["k_min"], r["seed"]) for r in csv.DictReader(out.open())]
