"""
==========================
Year: 2026
==========================
This module contains the functions used to read and write edge lists and to load data in the /data/ folder.

Edge-list format: one edge per line given as two labels separated by whitespace or a comma. Lines starting with '#'
and blank lines are ignored, and a line 'v <label>' declares a vertex that may have no edges.
"""

import glob
import json
import logging
import os
import re
from typing import Iterable, List, Union

from fracvuln.core.graph import Graph, GraphBuilder
from fracvuln.core.model import AnalysisConfig, ConfigError, EdgeListError, EmptyGraphError, GraphError, SelfLoopError
from fracvuln.core.util import get_data_path

logger = logging.getLogger(__name__)

SEPARATORS = re.compile(r"[,\s]+")
VERTEX_DIRECTIVE = "v"


def _lines(text: Union[str, bytes, Iterable[str]]) -> Iterable[str]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphError(f"Edge list is not valid UTF-8: {e}")
    if isinstance(text, str):
        return text.splitlines()
    return text


def parse_edge_list(text: Union[str, bytes, Iterable[str]]) -> Graph:
    """
    :param text: the edge list as bytes (UTF-8), a string or an iterable of lines.
    :return: the graph with vertices indexed in order of first appearance.
    """
    builder = GraphBuilder()
    for line_number, line in enumerate(_lines(text), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [token for token in SEPARATORS.split(line) if token]
        if len(tokens) == 2 and tokens[0] == VERTEX_DIRECTIVE:
            builder.add_vertex(tokens[1])
        elif len(tokens) == 2:
            try:
                builder.add_edge(tokens[0], tokens[1])
            except SelfLoopError:
                raise EdgeListError(line_number, f"self-loop on '{tokens[0]}' is not allowed")
        else:
            raise EdgeListError(line_number, f"expected two labels, got {len(tokens)}: '{line}'")
    try:
        return builder.build()
    except EmptyGraphError:
        raise EmptyGraphError("The edge list contains no vertices")


def read_edge_list(path: str) -> Graph:
    with open(path, "rb") as f:
        data = f.read()
    g = parse_edge_list(data)
    logger.info("Read %s: N=%d, |E|=%d", path, g.n, g.edge_count)
    return g


def export_edge_list(g: Graph) -> str:
    """
    :return: the graph in the format read by parse_edge_list. Isolated vertices are declared first.
    """
    for label in g.labels:
        if not label or SEPARATORS.search(label) or label.startswith("#"):
            raise GraphError(f"Label '{label}' cannot be written to an edge list")
    lines = [f"# n={g.n} edges={g.edge_count}"]
    lines.extend(f"{VERTEX_DIRECTIVE} {g.labels[v]}" for v in range(g.n) if not g.adjacency[v])
    # an edge starting with the directive would read back as a vertex declaration
    lines.extend(f"{b} {a}" if a == VERTEX_DIRECTIVE else f"{a} {b}" for a, b in g.label_edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str):
    with open(path, "w", encoding="utf-8") as f:
        f.write(export_edge_list(g))


def load_config(name: str) -> AnalysisConfig:
    """
    :param name: the name of a configuration in data/config/ (without extension) or a path to a .json file.
    :return: the configuration, validated.
    """
    if os.path.isfile(name):
        path = name
    else:
        path = get_data_path('config/' + name + '.json')
        if not os.path.isfile(path):
            raise ConfigError(f"Configuration '{name}' not found.")
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Configuration file {path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Configuration file {path} must hold a JSON object")
    data.setdefault('name', os.path.split(path)[1].split(".json")[0])
    return AnalysisConfig.from_json(data)


def list_bundled_graphs() -> List[str]:
    path = get_data_path('graphs/')
    return sorted(os.path.split(filepath)[1].split(".txt")[0] for filepath in glob.glob(f'{path}/*.txt'))


def load_graph_by_name(name: str) -> Graph:
    if name not in list_bundled_graphs():
        raise GraphError(f"Bundled graph '{name}' not found.")
    return read_edge_list(get_data_path('graphs/' + name + '.txt'))
