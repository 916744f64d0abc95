import json

import pytest

from edgering.cli import main
from edgering.errors import GraphFileError
from edgering.graphio import parse_graph, read_graph, serialize_graph
from edgering.generate import exhaustive_bipartite

from helpers import cube_q3, petersen


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


C6_FILE = "n 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n"


def graph_file(g):
    return serialize_graph(g)


# ---------------------------------------------------------------- parsing


def test_parse_header_and_comments():
    g = parse_graph("# a hexagon\nn 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n")
    assert g.d == 6 and g.edge_count == 6


def test_parse_inferred_vertex_count():
    g = parse_graph("1 2\n2 3\n")
    assert g.d == 3


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphFileError) as exc:
        parse_graph("1 2\nnonsense line\n")
    assert exc.value.line_no == 2
    with pytest.raises(GraphFileError):
        parse_graph("0 1\n")          # 1-based indices
    with pytest.raises(GraphFileError):
        parse_graph("1 1\n")          # self-loop
    with pytest.raises(GraphFileError):
        parse_graph("n 2\n1 3\n")     # exceeds header


def test_roundtrip_small_family():
    for g in exhaustive_bipartite(2, 3, connected=False):
        assert parse_graph(serialize_graph(g)).edges == g.edges


def test_read_missing_file():
    with pytest.raises(GraphFileError):
        read_graph("/no/such/file")


# ---------------------------------------------------------------- analyze


def run_json(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_analyze_c6(tmp_path, capsys):
    path = write(tmp_path, "c6.txt", C6_FILE)
    code, report = run_json(["analyze", "--input", path, "--json"], capsys)
    assert code == 0
    assert report["hvector"] == [1, 1, 1]
    assert report["classification"]["gorenstein"] is True
    assert report["classification"]["pseudo_gorenstein"] is True
    assert report["fill"] == []
    assert report["bipartition"] == {"X": [1, 3, 5], "Y": [2, 4, 6]}
    assert all(c["status"] == "pass" for c in report["checks"])


def test_analyze_q3(tmp_path, capsys):
    path = write(tmp_path, "q3.txt", graph_file(cube_q3()))
    code, report = run_json(["analyze", "--input", path, "--json"], capsys)
    assert code == 0
    assert report["hvector"] == [1, 5, 9, 1]
    assert report["classification"]["gorenstein"] is False
    assert len(report["fill"]) == 4
    assert report["closure"]["hvector"] == [1, 9, 9, 1]
    assert report["closure"]["next_to_leading_preserved"] is True


def test_analyze_byte_identical(tmp_path, capsys):
    path = write(tmp_path, "q3.txt", graph_file(cube_q3()))
    main(["analyze", "--input", path, "--json"])
    first = capsys.readouterr().out
    main(["analyze", "--input", path, "--json"])
    second = capsys.readouterr().out
    assert first == second


def test_analyze_text_mode(tmp_path, capsys):
    path = write(tmp_path, "c6.txt", C6_FILE)
    assert main(["analyze", "--input", path]) == 0
    out = capsys.readouterr().out
    assert "hvector" in out and "check" in out


def test_exit_codes(tmp_path, capsys):
    bad = write(tmp_path, "bad.txt", "1 2\noops\n")
    assert main(["analyze", "--input", bad, "--json"]) == 2

    triangle = write(tmp_path, "k3.txt", "1 2\n2 3\n3 1\n")
    assert main(["analyze", "--input", triangle, "--json"]) == 3

    k33 = write(tmp_path, "k33.txt",
                "\n".join(f"{i} {j}" for i in (1, 2, 3) for j in (4, 5, 6)) + "\n")
    assert main(["analyze", "--input", k33, "--json", "--max-side", "2"]) == 4
    capsys.readouterr()


def test_hilbert_petersen(tmp_path, capsys):
    path = write(tmp_path, "pet.txt", graph_file(petersen()))
    assert main(["analyze", "--input", path, "--json"]) == 3
    capsys.readouterr()
    code, report = run_json(["hilbert", "--input", path, "--json"], capsys)
    assert code == 0
    assert report["hvector"] == [1, 5, 15, 25, 5, 1]
    flags = report["classification"]
    assert flags["h_s"] == 1 and flags["h_1"] == 5 and flags["h_s_minus_1"] == 5
    assert flags["palindromic"] is False
    assert report["bipartition"] is None


def test_analyze_hilbert_only_flag(tmp_path, capsys):
    path = write(tmp_path, "pet.txt", graph_file(petersen()))
    code, report = run_json(["analyze", "--input", path, "--hilbert-only",
                             "--json"], capsys)
    assert code == 0
    assert report["hvector"] == [1, 5, 15, 25, 5, 1]
    assert report["blocks"] is None and report["closure"] is None


def test_hilbert_c6(tmp_path, capsys):
    path = write(tmp_path, "c6.txt", C6_FILE)
    code, report = run_json(["hilbert", "--input", path, "--json"], capsys)
    assert code == 0 and report["hvector"] == [1, 1, 1]


def test_hilbert_k2(tmp_path, capsys):
    path = write(tmp_path, "k2.txt", "1 2\n")
    code, report = run_json(["hilbert", "--input", path, "--json"], capsys)
    assert code == 0 and report["hvector"] == [1]


def test_hilbert_rejects_disconnected(tmp_path, capsys):
    path = write(tmp_path, "dis.txt", "1 2\n3 4\n")
    assert main(["hilbert", "--input", path]) == 2
    capsys.readouterr()


def test_verify_exhaustive_cli(capsys):
    assert main(["verify", "--theorem", "main", "--exhaustive", "5"]) == 0
    out = capsys.readouterr().out
    assert "failed=0" in out


def test_verify_random_cli(capsys):
    assert main(["verify", "--theorem", "stanley", "--random", "40",
                 "--seed", "3", "--model", "matching-union",
                 "--max-vertices", "10", "--memory-budget", str(32 << 20)]) == 0
    out = capsys.readouterr().out
    assert "failed=0" in out


def test_verify_requires_family(capsys):
    assert main(["verify", "--theorem", "main"]) == 2
    capsys.readouterr()


def test_verify_json(capsys):
    assert main(["verify", "--theorem", "main", "--exhaustive", "4", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["results"]["main"]["failed"] == 0
