"""
==========================
Year: 2026
==========================
This module contains the seeded random graph generators: Erdős–Rényi G(n, M) and Barabási–Albert preferential
attachment, the latter also with a per-vertex random number of new links. Vertex labels are the decimal indices.
"""

import dataclasses
import logging
import math
from enum import Enum
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy.stats import linregress

from fracvuln.core.graph import Edge, Graph
from fracvuln.core.model import FitError, ParameterError

logger = logging.getLogger(__name__)


def _check_n(n, minimum):
    if not isinstance(n, (int, np.integer)) or n < minimum:
        raise ParameterError(f"n must be an integer of at least {minimum}, got {n!r}")


def generate_er(n: int, mean_degree: float, seed: int) -> Graph:
    """
    Samples round(n * mean_degree / 2) distinct vertex pairs uniformly without replacement. Every vertex is part of
    the graph, isolated or not.
    """
    _check_n(n, 2)
    if not (0 < mean_degree <= n - 1):
        raise ParameterError(f"The mean degree must lie in (0, n - 1], got {mean_degree!r}")
    pairs = n * (n - 1) // 2
    edge_count = min(pairs, int(math.floor(n * mean_degree / 2.0 + 0.5)))
    rng = np.random.RandomState(seed)
    chosen = np.sort(rng.choice(pairs, size=edge_count, replace=False))
    rows, cols = np.triu_indices(n, k=1)
    edges = list(zip(rows[chosen].tolist(), cols[chosen].tolist()))
    logger.debug("ER graph with n=%d and %d edges", n, len(edges))
    return Graph([str(i) for i in range(n)], edges)


def _grow(n: int, seed_size: int, links: Callable[[], int], rng: np.random.RandomState) -> List[Edge]:
    edges = [(i, j) for i in range(seed_size) for j in range(i + 1, seed_size)]
    # Every vertex appears once per incident edge, so a uniform pick is degree proportional.
    repeated = [v for edge in edges for v in edge]
    for v in range(seed_size, n):
        m = links()
        targets: List[int] = []
        while len(targets) < m:
            target = repeated[rng.randint(len(repeated))]
            if target not in targets:
                targets.append(target)
        for target in targets:
            edges.append((target, v))
            repeated.extend((target, v))
    return edges


def generate_ba(n: int, m: int, seed: int) -> Graph:
    """
    Starts from a complete graph on m + 1 vertices and attaches every further vertex to m distinct existing vertices
    chosen with probability proportional to degree. The result has m(n - m - 1) + m(m + 1)/2 edges.
    """
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ParameterError(f"m must be a positive integer, got {m!r}")
    _check_n(n, m + 1)
    rng = np.random.RandomState(seed)
    edges = _grow(n, m + 1, lambda: m, rng)
    logger.debug("BA graph with n=%d, m=%d and %d edges", n, m, len(edges))
    return Graph([str(i) for i in range(n)], edges)


def generate_ba_mixed(n: int, seed: int, m_values: Sequence[int] = (2, 3),
                      m_probs: Sequence[float] = (0.6, 0.4)) -> Graph:
    """
    Preferential attachment where every new vertex draws its number of links from m_values with probabilities
    m_probs. The defaults give an expected mean degree of 4.8.
    """
    if len(m_values) == 0 or len(m_values) != len(m_probs):
        raise ParameterError("m_values and m_probs must be non-empty and of equal length")
    if any(not isinstance(m, (int, np.integer)) or m < 1 for m in m_values):
        raise ParameterError(f"Every m must be a positive integer, got {tuple(m_values)!r}")
    probs = np.asarray(m_probs, dtype=np.float64)
    if np.any(probs < 0) or not math.isclose(probs.sum(), 1.0, abs_tol=1e-9):
        raise ParameterError(f"m_probs must be non-negative and sum to 1, got {tuple(m_probs)!r}")
    seed_size = max(m_values) + 1
    _check_n(n, seed_size)
    rng = np.random.RandomState(seed)
    values = np.asarray(m_values)
    edges = _grow(n, seed_size, lambda: int(rng.choice(values, p=probs)), rng)
    logger.debug("Mixed BA graph with n=%d and %d edges", n, len(edges))
    return Graph([str(i) for i in range(n)], edges)


class GeneratorKind(Enum):
    ER = 'er'
    BA = 'ba'
    BA_MIXED = 'ba-mixed'


@dataclasses.dataclass(frozen=True)
class GeneratorSpec:
    """
    mean_degree is the target mean degree for ER and 2m for BA. The mixed BA model ignores it and uses m_values and
    m_probs.
    """
    kind: GeneratorKind
    n: int
    seed: int
    mean_degree: Optional[float] = None
    m_values: Sequence[int] = (2, 3)
    m_probs: Sequence[float] = (0.6, 0.4)

    def to_json(self):
        return {
            'kind': self.kind.value,
            'n': self.n,
            'seed': self.seed,
            'mean_degree': self.mean_degree,
            'm_values': list(self.m_values),
            'm_probs': list(self.m_probs)
        }


def generate(spec: GeneratorSpec) -> Graph:
    if spec.kind == GeneratorKind.ER:
        if spec.mean_degree is None:
            raise ParameterError("An ER graph needs a mean degree")
        return generate_er(spec.n, spec.mean_degree, spec.seed)
    if spec.kind == GeneratorKind.BA:
        if spec.mean_degree is None:
            raise ParameterError("A BA graph needs a mean degree")
        m = int(round(spec.mean_degree / 2.0))
        if m < 1 or not math.isclose(2 * m, spec.mean_degree):
            raise ParameterError(f"A BA mean degree must be an even positive integer, got {spec.mean_degree!r}")
        return generate_ba(spec.n, m, spec.seed)
    return generate_ba_mixed(spec.n, spec.seed, spec.m_values, spec.m_probs)


def fit_degree_exponent(g: Graph, k_min=1) -> float:
    """
    Fits ln P(K >= k) against ln k over the distinct degrees k >= k_min.
    :return: the tail exponent gamma = 1 - slope.
    """
    if k_min < 1:
        raise ParameterError(f"k_min must be at least 1, got {k_min!r}")
    degrees = g.degrees
    ks = np.unique(degrees[degrees >= k_min])
    if len(ks) < 2:
        raise FitError(f"Fewer than two distinct degrees of at least {k_min}")
    ccdf = np.array([np.count_nonzero(degrees >= k) for k in ks]) / g.n
    result = linregress(np.log(ks), np.log(ccdf))
    return 1.0 - float(result.slope)
