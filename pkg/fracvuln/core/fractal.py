"""
==========================
Year: 2026
==========================
This module contains greedy box covering and the box-counting estimate of the fractal dimension.

A box of size l_B is a vertex set whose pairwise distances are all below l_B. Covering is the greedy colouring of
the conflict graph that joins vertices at distance l_B or more (or in different components): vertices are visited in
a random order and each takes the smallest colour not used by a conflicting vertex. Every run is driven by its own
generator seeded with (seed, l_B, run) and runs are coloured as a vectorised batch.
"""

import dataclasses
import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from more_itertools import first
from scipy.stats import linregress

from fracvuln.core.graph import DistanceMatrix, Graph, all_pairs_distances
from fracvuln.core.model import FitAggregate, FitError, ParameterError
from fracvuln.core.util import Immutable, read_only

logger = logging.getLogger(__name__)

# Upper bound on the entries of the (runs x colours x vertices) mask coloured in one batch.
COVER_BATCH_ENTRIES = 2 ** 24


def run_ordering(n: int, seed: int, l_b: int, run: int) -> np.ndarray:
    return np.random.RandomState([seed, l_b, run]).permutation(n)


def _greedy_colouring(conflict: np.ndarray, orderings: np.ndarray, capacity: int) -> np.ndarray:
    runs, n = orderings.shape
    rows = np.arange(runs)
    blocked = np.zeros((runs, capacity, n), dtype=bool)
    colours = np.empty((runs, n), dtype=np.int64)
    for step in range(n):
        vertices = orderings[:, step]
        colour = np.argmin(blocked[rows, :, vertices], axis=1)
        colours[rows, vertices] = colour
        blocked[rows, colour] |= conflict[vertices]
    return colours


def cover_batch(distances: DistanceMatrix, l_b: int, orderings: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    :param orderings: (runs, n) array, one vertex permutation per run.
    :return: (box counts per run, box index of every vertex per run).
    """
    conflict = distances.dist >= l_b
    capacity = 1 + int(conflict.sum(axis=1).max())
    runs, n = orderings.shape
    colours = np.empty((runs, n), dtype=np.int64)
    batch = max(1, COVER_BATCH_ENTRIES // (capacity * n))
    for start in range(0, runs, batch):
        stop = min(runs, start + batch)
        colours[start:stop] = _greedy_colouring(conflict, orderings[start:stop], capacity)
    return colours.max(axis=1) + 1, colours


def cover_once(g: Graph, distances: DistanceMatrix, l_b: int, ordering: Sequence[int]) -> Tuple[int, np.ndarray]:
    """
    :return: (number of boxes, box index of every vertex) for one greedy pass in the given vertex order.
    """
    if not isinstance(l_b, (int, np.integer)) or l_b < 1:
        raise ParameterError(f"Box size must be a positive integer, got {l_b!r}")
    ordering = np.asarray(ordering, dtype=np.int64)
    if ordering.shape != (g.n,) or not np.array_equal(np.sort(ordering), np.arange(g.n)):
        raise ParameterError(f"Ordering must be a permutation of 0..{g.n - 1}")
    counts, colours = cover_batch(distances, int(l_b), ordering[np.newaxis, :])
    return int(counts[0]), colours[0]


class BoxCoverCurve(Immutable):
    """
    Box counts for box sizes 1..diameter+1. raw_counts has one row per run and one column per size. When
    component_count is known, the fit trims the curve once it reaches that value.
    """
    sizes: Tuple[int, ...]
    raw_counts: np.ndarray
    mean_counts: np.ndarray
    component_count: Optional[int]
    seed: Optional[int]
    assignments: Dict[int, np.ndarray]

    def __init__(self, sizes, raw_counts, component_count=None, seed=None, assignments=None):
        raw_counts = np.atleast_2d(np.asarray(raw_counts, dtype=np.float64))
        if raw_counts.shape[1] != len(sizes):
            raise ParameterError("raw_counts needs one column per box size")
        self.sizes = tuple(int(size) for size in sizes)
        self.raw_counts = read_only(raw_counts)
        self.mean_counts = read_only(raw_counts.mean(axis=0))
        self.component_count = component_count
        self.seed = seed
        self.assignments = dict(assignments or {})

    @property
    def runs(self) -> int:
        return self.raw_counts.shape[0]

    def points(self):
        return list(zip(self.sizes, self.mean_counts.tolist()))

    def plateau_size(self) -> int:
        """
        :return: the first box size where the mean count reaches the number of components, or the last size.
        """
        if self.component_count is None:
            return self.sizes[-1]
        reached = (size for size, count in zip(self.sizes, self.mean_counts) if count <= self.component_count)
        return first(reached, self.sizes[-1])

    def to_json(self):
        return {
            'runs': self.runs,
            'seed': self.seed,
            'component_count': self.component_count,
            'points': [
                {'l_b': size, 'mean_nb': float(mean), 'raw_nb': [float(c) for c in self.raw_counts[:, i]]}
                for i, (size, mean) in enumerate(zip(self.sizes, self.mean_counts))
            ]
        }


def box_cover_curve(g: Graph, runs=100, seed=42, distances: Optional[DistanceMatrix] = None) -> BoxCoverCurve:
    if not isinstance(runs, int) or runs < 1:
        raise ParameterError(f"runs must be a positive integer, got {runs!r}")
    distances = distances if distances is not None else all_pairs_distances(g)
    sizes = list(range(1, distances.diameter + 2))
    raw = np.zeros((runs, len(sizes)), dtype=np.int64)
    assignments = {}
    for column, l_b in enumerate(sizes):
        orderings = np.stack([run_ordering(g.n, seed, l_b, run) for run in range(runs)])
        counts, colours = cover_batch(distances, l_b, orderings)
        raw[:, column] = counts
        best = int(np.argmin(counts))
        assignments[l_b] = read_only(colours[best])
        logger.debug("l_B=%d: mean %.3f boxes over %d runs", l_b, counts.mean(), runs)
    return BoxCoverCurve(sizes, raw, component_count=distances.component_count, seed=seed, assignments=assignments)


@dataclasses.dataclass(frozen=True)
class FractalFit:
    d_b: float
    slope: float
    intercept: float
    r2: float
    fit_range: Tuple[int, int]
    points: int

    def to_json(self):
        return {
            'd_b': self.d_b,
            'slope': self.slope,
            'intercept': self.intercept,
            'r2': self.r2,
            'fit_range': list(self.fit_range),
            'points': self.points
        }


def fit_dimension(curve: BoxCoverCurve, fit_range: Optional[Tuple[Optional[int], Optional[int]]] = None,
                  aggregate=FitAggregate.MEAN) -> FractalFit:
    """
    Least squares fit of ln N_B against ln l_B. By default the range runs from the smallest size up to the plateau
    size. Bounds in fit_range are inclusive and a None bound keeps the default.
    :return: the fit with d_B = |slope|.
    :raises FitError: if fewer than two points remain or the counts never decrease over the range.
    """
    sizes = np.array(curve.sizes)
    lo, hi = curve.sizes[0], curve.plateau_size()
    if fit_range is not None:
        lo = fit_range[0] if fit_range[0] is not None else lo
        hi = fit_range[1] if fit_range[1] is not None else hi
    mask = (sizes >= lo) & (sizes <= hi)
    if mask.sum() < 2:
        raise FitError(f"Fewer than two box sizes in the fit range [{lo}, {hi}]")
    if aggregate == FitAggregate.LOG_MEAN:
        log_counts = np.log(curve.raw_counts).mean(axis=0)
    else:
        log_counts = np.log(curve.mean_counts)
    x = np.log(sizes[mask])
    y = log_counts[mask]
    if not np.any(np.diff(y) < 0):
        raise FitError("Box counts do not decrease over the fit range")
    result = linregress(x, y)
    selected = sizes[mask]
    return FractalFit(abs(float(result.slope)), float(result.slope), float(result.intercept),
                      float(result.rvalue) ** 2, (int(selected[0]), int(selected[-1])), int(mask.sum()))
