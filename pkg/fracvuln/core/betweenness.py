"""
==========================
Year: 2026
==========================
This module contains the shortest-path betweenness of edges and vertices, the multi-scale b_p summaries built on top
of it and the search for the exponent that best tells two graphs apart.
"""

import dataclasses
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from fracvuln.core.graph import Edge, Graph, level_search, source_blocks
from fracvuln.core.model import IndistinguishableError, ParameterError, UndefinedMetricError
from fracvuln.core.util import Immutable, read_only

logger = logging.getLogger(__name__)


class BetweennessProfile(Immutable):
    """
    Edge and vertex betweenness of one graph. Pairs are unordered and counted once, so every edge has a value of at
    least 1 and an isolated pair contributes nothing. edge_values[i] belongs to edges[i].
    """
    n: int
    edges: Tuple[Edge, ...]
    edge_values: np.ndarray
    vertex_values: np.ndarray
    normalization_factor: float

    def __init__(self, g: Graph, edge_values: np.ndarray, vertex_values: np.ndarray):
        self.n = g.n
        self.edges = g.edges
        self.edge_values = read_only(edge_values)
        self.vertex_values = read_only(vertex_values)
        self.normalization_factor = g.n * (g.n - 1) / 2.0

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def normalized_edge_values(self) -> np.ndarray:
        if self.normalization_factor == 0:
            raise UndefinedMetricError("Normalized betweenness needs at least two vertices")
        return self.edge_values / self.normalization_factor

    def by_edge(self) -> Dict[Edge, float]:
        return {edge: float(value) for edge, value in zip(self.edges, self.edge_values)}


def _inverse(sigma):
    return np.divide(1.0, sigma, out=np.zeros_like(sigma), where=sigma > 0)


def _accumulate_dependencies(adjacency, dist, sigma):
    # delta[s, v] = sum over successors w of v: sigma_v / sigma_w * (1 + delta[s, w])
    delta = np.zeros_like(sigma)
    finite = np.isfinite(dist)
    depth = int(dist[finite].max())
    inv_sigma = _inverse(sigma)
    for level in range(depth - 1, -1, -1):
        pull = np.where(dist == level + 1, (1.0 + delta) * inv_sigma, 0.0)
        gathered = np.asarray(adjacency @ pull.T).T
        at_level = dist == level
        delta[at_level] = sigma[at_level] * gathered[at_level]
    return delta


def _edge_dependencies(dist, sigma, delta, u, v):
    inv_sigma = _inverse(sigma)
    du, dv = dist[:, u], dist[:, v]
    forward = np.isfinite(du) & (dv == du + 1)
    backward = np.isfinite(dv) & (du == dv + 1)
    towards_v = sigma[:, u] * inv_sigma[:, v] * (1.0 + delta[:, v])
    towards_u = sigma[:, v] * inv_sigma[:, u] * (1.0 + delta[:, u])
    return np.where(forward, towards_v, 0.0) + np.where(backward, towards_u, 0.0)


def edge_betweenness(g: Graph) -> BetweennessProfile:
    """
    Brandes' accumulation over every source. Each unordered pair is seen from both ends, hence the halving.
    """
    adjacency = g.sparse_adjacency
    u, v = g.edge_array[:, 0], g.edge_array[:, 1]
    edge_sum = np.zeros(g.edge_count)
    vertex_sum = np.zeros(g.n)
    # per-edge dependencies take block x |E| entries
    for sources in source_blocks(g.n, max(g.n, g.edge_count)):
        dist, sigma = level_search(adjacency, sources, count_paths=True)
        delta = _accumulate_dependencies(adjacency, dist, sigma)
        if g.edge_count > 0:
            edge_sum += _edge_dependencies(dist, sigma, delta, u, v).sum(axis=0)
        delta[np.arange(len(sources)), sources] = 0.0
        vertex_sum += delta.sum(axis=0)
    logger.debug("Betweenness computed for %r", g)
    return BetweennessProfile(g, edge_sum / 2.0, vertex_sum / 2.0)


def power_mean(values: np.ndarray, p: float) -> float:
    if p == 1:
        return float(np.mean(values))
    peak = float(np.max(values))
    if peak == 0.0:
        return 0.0
    # Scaling by the peak keeps values**p finite for large p.
    return peak * float(np.mean((values / peak) ** p)) ** (1.0 / p)


def _check_exponent(p):
    if not (math.isfinite(p) and p > 0):
        raise ParameterError(f"The exponent p must be a positive number, got {p!r}")


def bp(profile: BetweennessProfile, p: float, normalized=False) -> float:
    """
    :return: the p-th power mean of the edge betweenness values, of the normalized values if normalized is True.
    """
    _check_exponent(p)
    if profile.edge_count == 0:
        raise UndefinedMetricError("b_p is undefined for a graph without edges")
    values = profile.normalized_edge_values() if normalized else profile.edge_values
    return power_mean(values, p)


def b1(profile: BetweennessProfile) -> float:
    return bp(profile, 1)


def bp_curve(profile: BetweennessProfile, ps: Sequence[float], normalized=False) -> List[Tuple[float, float]]:
    return [(p, bp(profile, p, normalized)) for p in ps]


def b_nor(g: Graph, profile: Optional[BetweennessProfile] = None) -> float:
    """
    Mean edge betweenness rescaled so that the complete graph scores 0 and the path of the same order scores 1.
    """
    denominator = g.n * (g.n + 1) / 6.0 - 1.0
    if denominator <= 0:
        raise UndefinedMetricError(f"b_nor is undefined for N = {g.n}")
    profile = profile if profile is not None else edge_betweenness(g)
    return (b1(profile) - 1.0) / denominator


@dataclasses.dataclass(frozen=True)
class PSearchResult:
    p_star: int
    f_curve: Tuple[Tuple[int, float], ...]
    more_vulnerable: str
    b1_a: float
    b1_b: float
    bp_a: float
    bp_b: float
    normalized: bool
    bp_curve_a: Tuple[Tuple[int, float], ...]
    bp_curve_b: Tuple[Tuple[int, float], ...]

    @property
    def f_star(self) -> float:
        return dict(self.f_curve)[self.p_star]

    def to_json(self):
        return {
            'p_star': self.p_star,
            'more_vulnerable': self.more_vulnerable,
            'normalized': self.normalized,
            'b1_a': self.b1_a,
            'b1_b': self.b1_b,
            'bp_a': self.bp_a,
            'bp_b': self.bp_b,
            'f_star': self.f_star,
            'f_curve': [[p, f] for p, f in self.f_curve],
            'bp_curve_a': [[p, value] for p, value in self.bp_curve_a],
            'bp_curve_b': [[p, value] for p, value in self.bp_curve_b]
        }


def p_search(g_a: Graph, g_b: Graph, p_max=50, tie_eps=1e-12, normalized=False,
             profiles: Optional[Tuple[BetweennessProfile, BetweennessProfile]] = None) -> PSearchResult:
    """
    Compares b_1 first. When the two graphs tie at p = 1, the relative gap f(p) = (b_p(A) - b_p(B)) / b_p(A) is
    evaluated for p = 1..p_max, oriented so that the more vulnerable graph comes first, and the first p where it
    peaks is returned.
    :raises IndistinguishableError: if b_p never differs by more than tie_eps.
    """
    if not isinstance(p_max, int) or p_max < 1:
        raise ParameterError(f"p_max must be a positive integer, got {p_max!r}")
    profile_a, profile_b = profiles if profiles is not None else (edge_betweenness(g_a), edge_betweenness(g_b))
    ps = list(range(1, p_max + 1))
    curve_a = np.array([bp(profile_a, p, normalized) for p in ps])
    curve_b = np.array([bp(profile_b, p, normalized) for p in ps])
    bp_curve_a = tuple(zip(ps, curve_a.tolist()))
    bp_curve_b = tuple(zip(ps, curve_b.tolist()))
    diff = curve_a - curve_b
    f_a = diff / curve_a
    f_b = -diff / curve_b

    if abs(diff[0]) > tie_eps:
        a_first = diff[0] > 0
        f = f_a if a_first else f_b
        logger.info("b_1 separates the graphs (%.6g vs %.6g)", curve_a[0], curve_b[0])
        return PSearchResult(1, ((1, float(f[0])),), 'A' if a_first else 'B', float(curve_a[0]), float(curve_b[0]),
                             float(curve_a[0]), float(curve_b[0]), normalized, bp_curve_a, bp_curve_b)

    separated = np.abs(diff) > tie_eps
    if not separated.any():
        raise IndistinguishableError(f"b_p is equal for every p in 1..{p_max}", tuple(zip(ps, f_a.tolist())),
                                     bp_curve_a, bp_curve_b)
    f_a_masked = np.where(separated, f_a, -np.inf)
    f_b_masked = np.where(separated, f_b, -np.inf)
    a_first = f_a_masked.max() >= f_b_masked.max()
    f = f_a if a_first else f_b
    star = int(np.argmax(f_a_masked if a_first else f_b_masked))
    logger.info("b_1 ties, p* = %d with f = %.6g", ps[star], f[star])
    return PSearchResult(ps[star], tuple(zip(ps, f.tolist())), 'A' if a_first else 'B', float(curve_a[0]),
                         float(curve_b[0]), float(curve_a[star]), float(curve_b[star]), normalized, bp_curve_a,
                         bp_curve_b)
