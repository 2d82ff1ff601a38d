from collections import deque
from itertools import combinations
from typing import Dict, List, Tuple

import numpy as np

from fracvuln.core.graph import Graph, build_graph
from fracvuln.core.model import AnalysisConfig


def path_graph(n) -> Graph:
    if n == 1:
        return Graph(["0"], [])
    return build_graph([(i, i + 1) for i in range(n - 1)])


def cycle_graph(n) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n) -> Graph:
    if n == 1:
        return Graph(["0"], [])
    return build_graph(list(combinations(range(n), 2)))


def star_graph(leaves) -> Graph:
    """
    Hub '0' joined to leaves '1'..'leaves'.
    """
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def grid_graph(rows, cols) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((f"{r},{c}", f"{r},{c + 1}"))
            if r + 1 < rows:
                edges.append((f"{r},{c}", f"{r + 1},{c}"))
    return build_graph(edges)


def bowtie() -> Graph:
    """
    Two triangles sharing the vertex 'c'.
    """
    return build_graph([("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "e"), ("c", "e")])


def random_graph(n, p, seed) -> Graph:
    """
    Every vertex is declared, so some may be isolated and the graph may be disconnected.
    """
    rng = np.random.RandomState(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.rand() < p]
    return build_graph(edges, vertices=range(n))


def quick_config(**changes) -> AnalysisConfig:
    return AnalysisConfig(**{'box_runs': 5, **changes})


def bfs_distances(g: Graph, source) -> Dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def all_geodesics(g: Graph, source, target) -> List[List[int]]:
    dist = bfs_distances(g, source)
    if target not in dist:
        return []
    paths = []

    def extend(path):
        v = path[-1]
        if v == target:
            paths.append(list(path))
            return
        for w in g.adjacency[v]:
            if dist.get(w) == dist[v] + 1 and dist[w] <= dist[target]:
                path.append(w)
                extend(path)
                path.pop()

    extend([source])
    return paths


def brute_force_betweenness(g: Graph) -> Tuple[Dict[Tuple[int, int], float], List[float]]:
    """
    Enumerates every geodesic of every unordered pair.
    """
    edge_values = {edge: 0.0 for edge in g.edges}
    vertex_values = [0.0] * g.n
    for j, k in combinations(range(g.n), 2):
        paths = all_geodesics(g, j, k)
        for path in paths:
            for a, b in zip(path, path[1:]):
                edge_values[(min(a, b), max(a, b))] += 1.0 / len(paths)
            for v in path[1:-1]:
                vertex_values[v] += 1.0 / len(paths)
    return edge_values, vertex_values


def assert_valid_boxes(distances, assignment, l_b):
    """
    Every box must have internal distances below l_B and every vertex must be in exactly one box.
    """
    assignment = np.asarray(assignment)
    assert assignment.shape == (distances.n,)
    assert assignment.min() == 0
    assert set(assignment.tolist()) == set(range(assignment.max() + 1))
    for box in range(assignment.max() + 1):
        members = np.flatnonzero(assignment == box)
        assert distances.dist[np.ix_(members, members)].max() < l_b
