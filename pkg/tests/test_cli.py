"""CLI surface: subcommands, exit codes, output formats, round-trips."""

import json
import subprocess
import sys


from cliquecover import format_dimacs, parse_dimacs
from cliquecover.cli import main
from graphs_util import (
    bull_graph,
    complete,
    cycle,
    empty_graph,
    path,
    petersen,
    prism,
)


def _write(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(format_dimacs(g), encoding="utf-8")
    return str(p)


def test_solve_text(tmp_path, capsys):
    f = _write(tmp_path, "petersen.col", petersen())
    assert main(["solve", f]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "theta 5"
    assert len(out) == 6 and all(line.startswith("clique ") for line in out[1:])


def test_solve_k5(tmp_path, capsys):
    f = _write(tmp_path, "k5.col", complete(5))
    assert main(["solve", f]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "theta 1"
    assert out[1] == "clique 1 2 3 4 5"


def test_solve_validate_rejects_c4(tmp_path, capsys):
    f = _write(tmp_path, "c4.col", cycle(4))
    assert main(["solve", f, "--validate"]) == 2
    assert capsys.readouterr().out.strip() == "induced C4: 1 2 3 4"


def test_solve_validate_rejects_bull(tmp_path, capsys):
    f = _write(tmp_path, "bull.col", bull_graph())
    assert main(["solve", f, "--validate"]) == 2
    line = capsys.readouterr().out.strip()
    assert line.startswith("induced bull: ")
    assert sorted(line.split(": ")[1].split()) == ["1", "2", "3", "4", "5"]


def test_solve_structure_failure(tmp_path, capsys):
    f = _write(tmp_path, "prism.col", prism())
    assert main(["solve", f, "--no-validate"]) == 3
    err = capsys.readouterr().err
    assert "structure failure" in err
    assert main(["solve", f, "--validate"]) == 2


def test_solve_json_and_verify_round_trip(tmp_path, capsys):
    f = _write(tmp_path, "petersen.col", petersen())
    assert main(["solve", f, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 10 and doc["theta"] == 5 and doc["mode"] == "cover"
    assert doc["validated"] is True
    assert doc["cliques"] == sorted(doc["cliques"])
    assert set(doc["stats"]) == {"reductions", "cutset_splits", "matching_calls", "max_depth"}
    cover_file = tmp_path / "cover.json"
    cover_file.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["verify", f, str(cover_file)]) == 0
    assert capsys.readouterr().out.strip() == "ok theta 5"


def test_verify_failures(tmp_path, capsys):
    f = _write(tmp_path, "p3.col", path(3))
    bad1 = tmp_path / "bad1.json"
    bad1.write_text(json.dumps({"n": 3, "theta": 2, "cliques": [[0, 2], [1]]}))
    assert main(["verify", f, str(bad1)]) == 4
    assert "set 0 not a clique" in capsys.readouterr().err
    bad2 = tmp_path / "bad2.json"
    bad2.write_text(json.dumps({"n": 3, "theta": 1, "cliques": [[0, 1]]}))
    assert main(["verify", f, str(bad2)]) == 4
    assert "vertex 2 uncovered" in capsys.readouterr().err
    bad3 = tmp_path / "bad3.json"
    bad3.write_text(json.dumps({"n": 3, "theta": 5, "cliques": [[0, 1], [2]]}))
    assert main(["verify", f, str(bad3)]) == 4
    assert "declared theta 5 != 2 cliques" in capsys.readouterr().err
    bad4 = tmp_path / "bad4.json"
    bad4.write_text("{not json")
    assert main(["verify", f, str(bad4)]) == 1


def test_color_commands(tmp_path, capsys):
    f = _write(tmp_path, "empty4.col", empty_graph(4))
    assert main(["color", f]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "colours 1"
    f = _write(tmp_path, "k3.col", complete(3))
    assert main(["color", f]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "colours 3"
    f = _write(tmp_path, "p4.col", path(4))
    assert main(["color", f, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["theta"] == 2 and doc["mode"] == "colouring"


def test_color_validate_2k2(tmp_path, capsys):
    from cliquecover import build

    f = _write(tmp_path, "2k2.col", build(4, [(0, 1), (2, 3)]))
    assert main(["color", f, "--validate"]) == 2
    assert capsys.readouterr().out.startswith("induced 2K2: ")


def test_gen_writes_certified_file(tmp_path, capsys):
    out = tmp_path / "g.col"
    rc = main(["gen", "--family", "girth5", "--n", "50", "--p", "0.15",
               "--seed", "1", "--out", str(out)])
    assert rc == 0
    text = out.read_text(encoding="utf-8")
    assert text.startswith("c seed=1 family=girth5\n")
    g = parse_dimacs(text)
    from cliquecover import find_c4, find_triangle

    assert find_triangle(g) is None and find_c4(g) is None


def test_gen_twin_expand_vertex_count(tmp_path):
    out = tmp_path / "t.col"
    assert main(["gen", "--family", "twin-expand", "--n", "10", "--steps", "10",
                 "--seed", "3", "--out", str(out)]) == 0
    assert parse_dimacs(out.read_text(encoding="utf-8")).n == 20


def test_gen_stdout_deterministic(tmp_path, capsys):
    args = ["gen", "--family", "rejection", "--n", "8", "--p", "0.3", "--seed", "2"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2 1\ne 1 5\n", encoding="utf-8")
    assert main(["solve", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert main(["solve", str(tmp_path / "nope.col")]) == 1


def test_oracle_command(tmp_path, capsys):
    f = _write(tmp_path, "c5.col", cycle(5))
    assert main(["oracle", f, "--stat", "theta"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    assert main(["oracle", f, "--stat", "matching"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["oracle", f, "--stat", "chromatic"]) == 0
    assert capsys.readouterr().out.strip() == "3"
    big = _write(tmp_path, "big.col", empty_graph(20))
    assert main(["oracle", big, "--stat", "theta"]) == 1


def test_solve_verify_round_trip_on_generated_instances(tmp_path, capsys):
    from cliquecover import generate, GenSpec

    for i, spec in enumerate([
        GenSpec(family="rejection", n=9, edge_prob=0.25, seed=50),
        GenSpec(family="girth5", n=40, edge_prob=0.1, seed=51),
        GenSpec(family="twin-expand", n=15, edge_prob=0.2, steps=15, seed=52),
    ]):
        g = generate(spec)
        f = _write(tmp_path, f"inst{i}.col", g)
        assert main(["solve", f, "--json"]) == 0
        captured = capsys.readouterr()
        assert "clique" not in captured.err  # covers go to stdout only
        cover_file = tmp_path / f"cover{i}.json"
        cover_file.write_text(captured.out, encoding="utf-8")
        assert main(["verify", f, str(cover_file)]) == 0
        capsys.readouterr()


def test_gen_serialization_fidelity(tmp_path):
    from cliquecover import generate, GenSpec

    spec = GenSpec(family="twin-expand", n=12, edge_prob=0.2, steps=8, seed=13)
    out = tmp_path / "fidelity.col"
    assert main(["gen", "--family", "twin-expand", "--n", "12", "--p", "0.2",
                 "--steps", "8", "--seed", "13", "--out", str(out)]) == 0
    assert parse_dimacs(out.read_text(encoding="utf-8")) == generate(spec)


def test_bench_csv_shape(capsys):
    assert main(["bench", "--sizes", "30,60", "--repeats", "2"]) == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert lines[0] == "n,m_edges,median_ms,theta"
    assert len(lines) == 3
    for line in lines[1:]:
        n, m, ms, theta = line.split(",")
        int(n), int(m), float(ms), int(theta)
    assert "time ratio" in captured.err


def test_bench_bad_sizes(capsys):
    assert main(["bench", "--sizes", "abc"]) == 1
    assert main(["bench", "--sizes", "0,10"]) == 1
    assert main(["bench", "--sizes", "10", "--repeats", "0"]) == 1


def test_module_entry_point(tmp_path):
    f = _write(tmp_path, "k2.col", complete(2))
    proc = subprocess.run(
        [sys.executable, "-m", "cliquecover.cli", "solve", f],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "theta 1"
