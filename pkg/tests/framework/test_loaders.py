import json

import pytest
from fracvuln.core.betweenness import b1, edge_betweenness
from fracvuln.core.generators import generate_ba, generate_er
from fracvuln.core.graph import all_pairs_distances, build_graph
from fracvuln.core.load import *
from fracvuln.core.model import (AnalysisConfig, ConfigError, EdgeListError, EmptyGraphError, FitAggregate,
                                 OutputFormat, TieRule)


def test_parse_path():
    g = parse_edge_list("a b\nb c\n")
    assert g.n == 3
    assert g.label_edges() == [("a", "b"), ("b", "c")]


def test_parse_comment_and_comma():
    g = parse_edge_list("# comment\na,b\n")
    assert g.n == 2
    assert g.edge_count == 1


def test_parse_bytes_and_blank_lines():
    g = parse_edge_list("x\ty\n\n  y , z  \n".encode("utf-8"))
    assert g.labels == ("x", "y", "z")
    assert g.edge_count == 2


def test_parse_vertex_directive():
    g = parse_edge_list("v lonely\na b\n")
    assert g.labels == ("lonely", "a", "b")
    assert g.adjacency[0] == ()


def test_self_loop_reports_line():
    with pytest.raises(EdgeListError) as e:
        parse_edge_list("a a\n")
    assert e.value.line_number == 1


def test_malformed_line_reports_line():
    with pytest.raises(EdgeListError) as e:
        parse_edge_list("a b\n# fine\nc d e\n")
    assert e.value.line_number == 3


def test_empty_edge_list():
    with pytest.raises(EmptyGraphError):
        parse_edge_list("# nothing here\n")


def test_invalid_utf8():
    with pytest.raises(GraphError):
        parse_edge_list(b"a \xff\n")


@pytest.mark.parametrize("g", [generate_er(60, 1.5, seed=2), generate_ba(80, 2, seed=3)])
def test_export_then_parse_is_same_graph(g):
    parsed = parse_edge_list(export_edge_list(g))
    assert set(parsed.labels) == set(g.labels)
    assert {frozenset(edge) for edge in parsed.label_edges()} == {frozenset(edge) for edge in g.label_edges()}


def test_export_keeps_edges_of_vertex_named_v():
    g = build_graph([("v", "x"), ("x", "y"), ("v", "y")])
    parsed = parse_edge_list(export_edge_list(g))
    assert parsed.edge_count == 3
    assert {frozenset(edge) for edge in parsed.label_edges()} == {frozenset(edge) for edge in g.label_edges()}


def test_export_declares_isolated_vertices():
    text = export_edge_list(parse_edge_list("v z\na b\n"))
    assert "v z\n" in text
    assert parse_edge_list(text).n == 3


def test_write_and_read_file(tmp_path):
    g = generate_ba(30, 1, seed=1)
    path = str(tmp_path / "tree.txt")
    write_edge_list(g, path)
    assert read_edge_list(path).edge_count == 29


def test_config_loader():
    default = load_config("default")
    quick = load_config("quick")
    synthetic = load_config("synthetic")
    assert default.name == "default"
    assert default.box_runs == 100
    assert default.seed == 42
    assert default.p_max == 50
    assert default.attack_fraction == 0.01
    assert default.fit_aggregate == FitAggregate.MEAN
    assert quick.box_runs == 10
    assert quick.output_format == OutputFormat.TABLE
    assert synthetic.normalized_compare


def test_config_loader_from_path(tmp_path):
    path = tmp_path / "mine.json"
    path.write_text(json.dumps({"box_runs": 7, "fit_range": [2, 5], "tie_rule": "seeded-random"}))
    config = load_config(str(path))
    assert config.name == "mine"
    assert config.box_runs == 7
    assert config.fit_range == (2, 5)
    assert config.tie_rule == TieRule.SEEDED_RANDOM


def test_unknown_config():
    with pytest.raises(ConfigError):
        load_config("no-such-config")


@pytest.mark.parametrize("data", [
    {"box_runs": 0},
    {"attack_fraction": 1.0},
    {"p_max": 0},
    {"fit_range": [5, 2]},
    {"output_format": "xml"},
    {"unknown_key": 1},
    {"seed": -1},
])
def test_invalid_config(data):
    with pytest.raises(ConfigError):
        AnalysisConfig.from_json(data)


def test_config_json_round_trip():
    config = AnalysisConfig(box_runs=12, fit_range=(2, None), output_format="csv")
    assert AnalysisConfig.from_json(config.to_json()).to_json() == config.to_json()


def test_bundled_graphs():
    assert {"spider-7", "double-broom-7"} <= set(list_bundled_graphs())
    spider = load_graph_by_name("spider-7")
    assert spider.n == 7
    assert spider.edge_count == 6
    broom = load_graph_by_name("double-broom-7")
    assert broom.n == 7
    assert broom.edge_count == 6
    assert all_pairs_distances(broom).component_count == 1
    assert b1(edge_betweenness(broom)) == pytest.approx(8.0, abs=1e-12)
    assert b1(edge_betweenness(spider)) == pytest.approx(8.0, abs=1e-12)
    with pytest.raises(GraphError):
        load_graph_by_name("missing")
