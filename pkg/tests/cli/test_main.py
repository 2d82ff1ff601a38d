import io
import json
import sys

import pytest
from fracvuln.cli.main import *
from fracvuln.core.load import parse_edge_list, read_edge_list


@pytest.fixture
def path_file(tmp_path):
    path = tmp_path / "path.txt"
    path.write_text("".join(f"{i} {i + 1}\n" for i in range(9)))
    return str(path)


def test_analyze_to_stdout(path_file, capsys):
    assert main(["analyze", path_file, "--runs", "3"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document['report']['name'] == "path"
    assert document['report']['n'] == 10
    assert document['config']['box_runs'] == 3


def test_analyze_to_file(path_file, tmp_path, capsys):
    out = str(tmp_path / "report.csv")
    assert main(["analyze", path_file, "--runs", "3", "--format", "csv", "--output", out]) == EXIT_OK
    assert capsys.readouterr().out == ""
    with open(out) as f:
        assert f.readline().startswith("name,n,edge_count")


def test_bundled_graph_and_table(capsys):
    assert main(["compare", "@spider-7", "@double-broom-7", "--runs", "2", "--format", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Verdict: double-broom-7 is more vulnerable" in out


def test_stdin_graph(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(b"a b\nb c\n")))
    assert main(["boxcover", "-", "--runs", "2"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['name'] == "stdin"


def test_indistinguishable_is_success(path_file, capsys):
    assert main(["compare", path_file, path_file, "--runs", "2", "--pmax", "5"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['verdict'] == "indistinguishable"


def test_generate_and_read_back(tmp_path):
    out = str(tmp_path / "ba.txt")
    assert main(["generate", "ba", "--n", "100", "--m", "2", "--seed", "7", "--output", out]) == EXIT_OK
    g = read_edge_list(out)
    assert g.n == 100
    assert g.edge_count == 2 * 97 + 3


def test_generate_is_seeded(capsys):
    main(["generate", "er", "--n", "40", "--k", "3", "--seed", "1"])
    first = capsys.readouterr().out
    main(["generate", "er", "--n", "40", "--k", "3", "--seed", "1"])
    assert capsys.readouterr().out == first
    assert parse_edge_list(first).edge_count == 60


def test_named_config(path_file, capsys):
    assert main(["attack", path_file, "--config", "quick", "--runs", "2"]) == EXIT_OK
    assert "inv_geo_ratio" in capsys.readouterr().out


def test_missing_file(tmp_path):
    assert main(["analyze", str(tmp_path / "missing.txt")]) == EXIT_INPUT_ERROR


def test_self_loop_file(tmp_path):
    path = tmp_path / "loop.txt"
    path.write_text("a b\nb b\n")
    assert main(["analyze", str(path)]) == EXIT_INPUT_ERROR


def test_unknown_bundled_graph():
    assert main(["analyze", "@missing"]) == EXIT_INPUT_ERROR


def test_bad_fraction(path_file):
    assert main(["attack", path_file, "--fraction", "1.5"]) == EXIT_CONFIG_ERROR


def test_unknown_config(path_file):
    assert main(["analyze", path_file, "--config", "no-such-config"]) == EXIT_CONFIG_ERROR


def test_generate_needs_mean_degree():
    assert main(["generate", "er", "--n", "40"]) == EXIT_CONFIG_ERROR


def test_bad_arguments():
    assert main(["unknown-command"]) == EXIT_CONFIG_ERROR
    assert main(["generate", "er"]) == EXIT_CONFIG_ERROR


def test_help():
    assert main(["--help"]) == EXIT_OK
