import json

import pytest

from prext import complement, cycle_graph, house_graph, is_meyniel
from prext.cli import main
from prext.formats import parse_dimacs, parse_dimacs_many, write_dimacs, write_edge_list


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_c5(files, capsys):
    code, out, _ = run(capsys, "classify", files("c5.col", write_dimacs(cycle_graph(5))))
    data = json.loads(out)
    assert code == 0
    assert not any(data[k] for k in ("is_meyniel", "is_artemis", "is_berge", "is_co_meyniel"))
    assert data["witnesses"]["meyniel"] == {"kind": "OddHole", "vertices": [1, 2, 3, 4, 5], "extra": {}}


def test_classify_k4_and_house(files, capsys):
    k4 = files("k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    data = json.loads(run(capsys, "classify", k4)[1])
    assert all(data[k] for k in ("is_meyniel", "is_artemis", "is_berge", "is_co_meyniel"))
    data = json.loads(run(capsys, "classify", files("h.txt", write_edge_list(house_graph())))[1])
    assert not data["is_meyniel"] and data["witnesses"]["meyniel"]["kind"] == "House"


def test_classify_text_format(files, capsys):
    code, out, _ = run(capsys, "classify", files("c5.col", write_dimacs(cycle_graph(5))), "--format", "text")
    assert code == 0 and "is_meyniel: false" in out


def test_parse_error_reports_line(files, capsys):
    code, _, err = run(capsys, "classify", files("bad.col", "p edge 3 1\ne 1 9\n"))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.col"))
    assert code == 2 and "nope.col" in err


def test_prext_c4(files, capsys):
    g = files("c4.txt", write_edge_list(cycle_graph(4)))
    q = files("q.txt", "q 1: 0\nq 2: 2\n")
    code, out, _ = run(capsys, "prext", g, q)
    data = json.loads(out)
    assert code == 0 and data["colors_used"] == 3 and data["feasible"]
    code, out, _ = run(capsys, "prext", g, q, "-k", "2")
    assert code == 1 and json.loads(out)["feasible"] is False
    code, out, _ = run(capsys, "prext", g)
    assert code == 0 and json.loads(out)["colors_used"] == 2


def test_prext_warns_outside_class(files, capsys):
    code, _, err = run(capsys, "prext", files("c5.txt", write_edge_list(cycle_graph(5))))
    assert code == 0 and "not co-Meyniel" in err
    code, _, err = run(capsys, "prext", files("h.txt", write_edge_list(house_graph())), "--co")
    assert code == 0 and "not Meyniel" in err


def test_prext_bad_family_names_class(files, capsys):
    g = files("c4.txt", write_edge_list(cycle_graph(4)))
    code, _, err = run(capsys, "prext", g, files("q.txt", "q 1: 0\nq 2: 1 2\n"))
    assert code == 2 and "class 2" in err
    code, _, err = run(capsys, "prext", g, files("q2.txt", "q 1: 0 2\n"), "--co")
    assert code == 2 and "class 1" in err


def test_prext_co_with_k(files, capsys):
    g = files("c4.txt", write_edge_list(cycle_graph(4)))
    code, out, _ = run(capsys, "prext", g, files("q.txt", "q 1: 0 1\n"), "--co", "-k", "2")
    data = json.loads(out)
    assert code == 0 and data["colors_used"] == 2 and data["mode"] == "cliques"


def test_contract_house_co(files, capsys):
    g = files("h.txt", write_edge_list(house_graph()))
    code, out, _ = run(capsys, "contract", g, files("q.txt", "q 1: 0\nq 2: 2\n"), "--co")
    h, _ = parse_dimacs(out)
    assert code == 0 and h.n == 5 and all(h.degree(v) == 2 for v in range(5))
    assert "c origin 1 class 1: 0" in out


def test_contract_echo_and_stable(files, capsys):
    g = files("c4.txt", write_edge_list(cycle_graph(4)))
    code, out, _ = run(capsys, "contract", g)
    assert parse_dimacs(out)[0] == cycle_graph(4)
    code, out, _ = run(capsys, "contract", g, files("q.txt", "q 1: 0\nq 2: 2\n"))
    assert parse_dimacs(out)[0].num_edges() == 5


def test_gen_meyniel(capsys):
    code, out, _ = run(capsys, "gen", "meyniel", "8", "5", "--seed", "7")
    gs = [g for g, _ in parse_dimacs_many(out)]
    assert code == 0 and len(gs) == 5 and all(is_meyniel(g)[0] for g in gs)
    assert run(capsys, "gen", "meyniel", "8", "5", "--seed", "7")[1] == out


def test_gen_any_and_co(capsys):
    code, out, _ = run(capsys, "gen", "any", "4", "1", "--seed", "1")
    assert code == 0 and len(parse_dimacs_many(out)) == 1
    code, out, _ = run(capsys, "gen", "co-meyniel", "6", "3", "--seed", "2")
    gs = [g for g, _ in parse_dimacs_many(out)]
    assert len(gs) == 3 and all(is_meyniel(complement(g))[0] for g in gs)


def test_gen_budget_exhaustion(capsys):
    code, _, err = run(capsys, "gen", "meyniel", "14", "2", "--seed", "0", "--max-attempts", "1")
    assert code == 3 and "exhausted" in err


def test_gen_cap(capsys):
    assert run(capsys, "gen", "meyniel", "20", "1")[0] == 3


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--nmax", "4")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "lemma1", "--nmax", "3")
    assert code == 0
    code, out, _ = run(capsys, "verify", "closure", "--nmax", "4")
    assert code == 0 and json.loads(out)["details"]["strictness_witness"]["witness"]["kind"] == "Prism"


def test_verify_reports_violations(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--nmax", "6", "--format", "text")
    # the clique/path/vertex lemma, read literally, fails at six vertices
    assert code == 1 and "lemma-pqz" in out


def test_verify_guards_and_input_errors(capsys):
    assert run(capsys, "verify", "lemma1", "--nmax", "7")[0] == 3
    assert run(capsys, "verify", "theorem1", "--samples", "3")[0] == 2
    assert run(capsys, "verify", "theorem2", "--nmax", "2", "--samples", "1", "--sample-n", "17")[0] == 3


def test_verify_is_deterministic_and_writes_out(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "theorem2", "--nmax", "4", "--samples", "4", "--seed", "9"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["scope"]["seed"] == 9


def test_node_budget_flag(files, capsys):
    g = files("k.txt", write_edge_list(complement(cycle_graph(7))))
    code, _, err = run(capsys, "prext", g, "--node-budget", "1")
    assert code == 3 and "resource limit" in err
