"""
==========================
Year: 2026
==========================
This module contains the immutable graph used by every analysis together with the breadth-first search primitives
that the betweenness and box-covering modules build on. Searches run level by level over a block of sources at once,
one sparse matrix product per level.
"""

import logging
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

from fracvuln.core.model import EmptyGraphError, GraphError, ParameterError, SelfLoopError
from fracvuln.core.util import Immutable, read_only

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

# Upper bound on the entries of one (sources x vertices) block.
SOURCE_BLOCK_ENTRIES = 2 ** 21


class Graph(Immutable):
    """
    A finite, simple, undirected, unweighted graph. Vertices are dense indices 0..n-1 carrying unique string labels.
    Each edge is stored once as (u, v) with u < v, in the order it was first added.
    """
    n: int
    labels: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...]

    def __init__(self, labels: Sequence[str], edges: Iterable[Edge]):
        labels = tuple(str(label) for label in labels)
        if len(labels) == 0:
            raise EmptyGraphError("A graph needs at least one vertex")
        if len(set(labels)) != len(labels):
            raise GraphError("Vertex labels must be unique")
        n = len(labels)
        unique: Dict[Edge, None] = {}
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge ({u}, {v}) refers to a vertex outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(labels[u])
            unique.setdefault((u, v) if u < v else (v, u), None)
        neighbours: List[List[int]] = [[] for _ in range(n)]
        for u, v in unique:
            neighbours[u].append(v)
            neighbours[v].append(u)
        self.n = n
        self.labels = labels
        self.edges = tuple(unique)
        self.adjacency = tuple(tuple(sorted(nb)) for nb in neighbours)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def label_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        if label not in self.label_index:
            raise GraphError(f"Unknown vertex '{label}'")
        return self.label_index[label]

    @cached_property
    def degrees(self) -> np.ndarray:
        return read_only(np.array([len(nb) for nb in self.adjacency], dtype=np.int64))

    @cached_property
    def edge_array(self) -> np.ndarray:
        return read_only(np.array(self.edges, dtype=np.int64).reshape(-1, 2))

    @cached_property
    def sparse_adjacency(self) -> sp.csr_matrix:
        u, v = self.edge_array[:, 0], self.edge_array[:, 1]
        rows = np.concatenate([u, v])
        cols = np.concatenate([v, u])
        data = np.ones(len(rows), dtype=np.float64)
        return sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def label_edges(self) -> List[Tuple[str, str]]:
        return [(self.labels[u], self.labels[v]) for u, v in self.edges]

    def remove_vertices(self, indices: Iterable[int]) -> 'Graph':
        """
        :return: a new graph without the given vertices and their edges. Surviving vertices keep their labels and
        their relative order.
        """
        removed = set(int(i) for i in indices)
        for i in removed:
            if not 0 <= i < self.n:
                raise ParameterError(f"Vertex index {i} is outside 0..{self.n - 1}")
        keep = [i for i in range(self.n) if i not in removed]
        if not keep:
            raise EmptyGraphError("Removing every vertex leaves an empty graph")
        new_index = {old: new for new, old in enumerate(keep)}
        edges = [(new_index[u], new_index[v]) for u, v in self.edges if u in new_index and v in new_index]
        return Graph([self.labels[i] for i in keep], edges)


class GraphBuilder:
    """
    Collects labelled vertices and edges. Vertices are indexed by first appearance and duplicate edges are merged.
    """

    def __init__(self):
        self._index: Dict[str, int] = {}
        self._edges: Dict[Edge, None] = {}

    def add_vertex(self, label) -> int:
        label = str(label)
        if label not in self._index:
            self._index[label] = len(self._index)
        return self._index[label]

    def add_edge(self, a, b) -> Edge:
        if str(a) == str(b):
            raise SelfLoopError(str(a))
        u = self.add_vertex(a)
        v = self.add_vertex(b)
        edge = (u, v) if u < v else (v, u)
        self._edges.setdefault(edge, None)
        return edge

    def build(self) -> Graph:
        if not self._index:
            raise EmptyGraphError("The input contains no vertices")
        return Graph(list(self._index.keys()), self._edges.keys())


def build_graph(edge_list: Iterable[Sequence], vertices: Iterable = ()) -> Graph:
    """
    :param edge_list: pairs of vertex labels. Labels are converted with str().
    :param vertices: labels declared up front, e.g. isolated vertices. They are indexed before the edge labels.
    :return: the graph with vertices indexed by first appearance.
    """
    builder = GraphBuilder()
    for label in vertices:
        builder.add_vertex(label)
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"Edge {tuple(pair)!r} must have exactly two labels")
        builder.add_edge(pair[0], pair[1])
    return builder.build()


def source_blocks(n: int, entries_per_source: Optional[int] = None) -> Iterator[np.ndarray]:
    """
    Splits the sources 0..n-1 into consecutive blocks of at most SOURCE_BLOCK_ENTRIES entries, where one source
    costs entries_per_source entries (n by default).
    """
    per_source = n if entries_per_source is None else entries_per_source
    block = max(1, SOURCE_BLOCK_ENTRIES // max(per_source, 1))
    for start in range(0, n, block):
        yield np.arange(start, min(n, start + block))


def level_search(adjacency: sp.csr_matrix, sources: np.ndarray, count_paths=True) -> Tuple[np.ndarray, np.ndarray]:
    """
    Breadth-first search from every source in the block at once.
    :return: (dist, sigma) of shape (len(sources), n). dist holds hop counts with np.inf for unreachable vertices.
    sigma holds the number of shortest paths from the source, or 1 on reachable vertices if count_paths is False.
    """
    n = adjacency.shape[0]
    rows = np.arange(len(sources))
    dist = np.full((len(sources), n), np.inf)
    sigma = np.zeros((len(sources), n))
    dist[rows, sources] = 0
    sigma[rows, sources] = 1
    frontier = sigma.copy()
    level = 0
    while True:
        reach = np.asarray(adjacency @ frontier.T).T
        new = (reach > 0) & np.isinf(dist)
        if not new.any():
            break
        level += 1
        dist[new] = level
        frontier = np.where(new, reach if count_paths else 1.0, 0.0)
        sigma += frontier
    return dist, sigma


class DistanceMatrix(Immutable):
    """
    All-pairs hop counts. Unreachable pairs hold np.inf. Components are numbered in order of their smallest vertex.
    """
    dist: np.ndarray
    diameter: int
    component_id: np.ndarray
    component_sizes: Tuple[int, ...]

    def __init__(self, dist: np.ndarray):
        finite = np.isfinite(dist)
        n = dist.shape[0]
        component_id = np.full(n, -1, dtype=np.int64)
        sizes = []
        for v in range(n):
            if component_id[v] < 0:
                members = finite[v]
                component_id[members] = len(sizes)
                sizes.append(int(members.sum()))
        self.dist = read_only(dist)
        self.diameter = int(dist[finite].max()) if n > 0 else 0
        self.component_id = read_only(component_id)
        self.component_sizes = tuple(sizes)

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    def distance(self, v: int, w: int) -> float:
        return float(self.dist[v, w])

    def is_reachable(self, v: int, w: int) -> bool:
        return bool(np.isfinite(self.dist[v, w]))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    dist = np.empty((g.n, g.n))
    for sources in source_blocks(g.n):
        dist[sources], _ = level_search(g.sparse_adjacency, sources, count_paths=False)
    distances = DistanceMatrix(dist)
    logger.debug("Distances for %r: diameter %d, %d component(s)", g, distances.diameter, distances.component_count)
    return distances


class GeodesicCounts(Immutable):
    """
    Single-source shortest path counts. predecessors[w] lists the neighbours of w one hop closer to the source and
    order lists the reachable vertices by non-decreasing distance.
    """
    source: int
    distance: np.ndarray
    counts: np.ndarray
    predecessors: Tuple[Tuple[int, ...], ...]
    order: Tuple[int, ...]

    def __init__(self, g: Graph, source: int, distance: np.ndarray, counts: np.ndarray):
        predecessors = []
        for w in range(g.n):
            if np.isfinite(distance[w]) and distance[w] > 0:
                predecessors.append(tuple(v for v in g.adjacency[w] if distance[v] == distance[w] - 1))
            else:
                predecessors.append(())
        reachable = np.flatnonzero(np.isfinite(distance))
        self.source = source
        self.distance = read_only(distance)
        self.counts = read_only(counts)
        self.predecessors = tuple(predecessors)
        self.order = tuple(int(v) for v in reachable[np.argsort(distance[reachable], kind="stable")])

    def count(self, w: int) -> int:
        return int(round(self.counts[w]))


def geodesic_counts(g: Graph, source: int) -> GeodesicCounts:
    if not 0 <= source < g.n:
        raise ParameterError(f"Source {source} is outside 0..{g.n - 1}")
    dist, sigma = level_search(g.sparse_adjacency, np.array([source]), count_paths=True)
    return GeodesicCounts(g, source, dist[0], sigma[0])
