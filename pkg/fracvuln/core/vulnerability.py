"""
==========================
Year: 2026
==========================
This module contains the vulnerability metrics, the single-graph analysis pipeline, the recalculated-betweenness
attack and the ranking of several networks by each metric.
"""

import dataclasses
import functools
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from fracvuln.core.betweenness import BetweennessProfile, b_nor, b1, bp, edge_betweenness
from fracvuln.core.fractal import BoxCoverCurve, FractalFit, box_cover_curve, fit_dimension
from fracvuln.core.graph import DistanceMatrix, Graph, all_pairs_distances
from fracvuln.core.model import AnalysisConfig, FitError, ParameterError, TieRule, UndefinedMetricError

logger = logging.getLogger(__name__)

# Relative tolerance under which two vertex betweenness values count as tied.
TIE_TOLERANCE = 1e-9


def inverse_geodesic_length(g: Graph, distances: Optional[DistanceMatrix] = None) -> float:
    """
    Mean of 1/d over ordered pairs of distinct vertices. Unreachable pairs contribute 0.
    """
    if g.n < 2:
        raise UndefinedMetricError("The inverse geodesic length needs at least two vertices")
    distances = distances if distances is not None else all_pairs_distances(g)
    dist = distances.dist
    off_diagonal = ~np.eye(g.n, dtype=bool)
    inverse = np.divide(1.0, dist, out=np.zeros_like(dist), where=off_diagonal & np.isfinite(dist))
    return float(inverse.sum() / (g.n * (g.n - 1)))


def largest_component_size(g: Graph, distances: Optional[DistanceMatrix] = None) -> float:
    distances = distances if distances is not None else all_pairs_distances(g)
    return max(distances.component_sizes) / g.n


def v_db(profile: BetweennessProfile, d_b: float) -> float:
    """
    The vulnerability index: the d_B-th power mean of the normalized edge betweenness.
    """
    if not (math.isfinite(d_b) and d_b > 0):
        raise ParameterError(f"The fractal dimension must be positive, got {d_b!r}")
    return bp(profile, d_b, normalized=True)


def removal_count(n: int, fraction: float) -> int:
    if not 0 < fraction < 1:
        raise ParameterError(f"The attack fraction must lie in (0, 1), got {fraction!r}")
    # Rounding first keeps 0.01 * 1000 from becoming 11 through float noise.
    return max(1, math.ceil(round(fraction * n, 9)))


@dataclasses.dataclass(frozen=True)
class VulnerabilityReport:
    name: str
    n: int
    edge_count: int
    component_count: int
    diameter: int
    d_b: Optional[float]
    fit_r2: Optional[float]
    v_db: Optional[float]
    b1_raw: Optional[float]
    b1_normalized: Optional[float]
    b_nor: Optional[float]
    inv_geo: Optional[float]
    lcs: float

    def to_json(self):
        return dataclasses.asdict(self)

    def _csv_header_and_row(self):
        header_and_value = [(field.name, getattr(self, field.name)) for field in dataclasses.fields(self)]
        return tuple(zip(*header_and_value))

    def get_titles(self) -> List[str]:
        return list(self._csv_header_and_row()[0])

    def get_values(self) -> List:
        return list(self._csv_header_and_row()[1])


@dataclasses.dataclass(frozen=True, eq=False)
class Analysis:
    report: VulnerabilityReport
    profile: BetweennessProfile
    distances: DistanceMatrix
    curve: BoxCoverCurve
    fit: Optional[FractalFit]
    fit_error: Optional[str]


def _defined(metric, *args):
    try:
        return metric(*args)
    except UndefinedMetricError as e:
        logger.info("Metric left undefined: %s", e)
        return None


def analyze(g: Graph, config: Optional[AnalysisConfig] = None, name="G") -> Analysis:
    config = config if config is not None else AnalysisConfig()
    distances = all_pairs_distances(g)
    profile = edge_betweenness(g)
    curve = box_cover_curve(g, runs=config.box_runs, seed=config.seed, distances=distances)
    fit, fit_error = None, None
    try:
        fit = fit_dimension(curve, config.fit_range, config.fit_aggregate)
    except FitError as e:
        fit_error = str(e)
        logger.info("No fractal dimension for %s: %s", name, e)
    v = _defined(v_db, profile, fit.d_b) if fit is not None and profile.edge_count > 0 else None
    report = VulnerabilityReport(
        name=name,
        n=g.n,
        edge_count=g.edge_count,
        component_count=distances.component_count,
        diameter=distances.diameter,
        d_b=fit.d_b if fit is not None else None,
        fit_r2=fit.r2 if fit is not None else None,
        v_db=v,
        b1_raw=_defined(b1, profile),
        b1_normalized=_defined(bp, profile, 1, True),
        b_nor=_defined(b_nor, g, profile),
        inv_geo=_defined(inverse_geodesic_length, g, distances),
        lcs=largest_component_size(g, distances)
    )
    logger.info("Analyzed %s: N=%d, |E|=%d, d_B=%s, V=%s", name, g.n, g.edge_count, report.d_b, report.v_db)
    return Analysis(report, profile, distances, curve, fit, fit_error)


@dataclasses.dataclass(frozen=True)
class RemovedVertex:
    step: int
    label: str
    betweenness: float


def _ratio(after: Optional[float], before: Optional[float]) -> Optional[float]:
    if after is None or before is None or before == 0:
        return None
    return after / before


@dataclasses.dataclass(frozen=True)
class NormalizedMetrics:
    """
    Post-attack metrics divided by their pre-attack values. None where either side is undefined or zero.
    """
    inv_geo: Optional[float]
    lcs: Optional[float]
    b_nor: Optional[float]

    @staticmethod
    def between(initial: VulnerabilityReport, post: VulnerabilityReport) -> 'NormalizedMetrics':
        return NormalizedMetrics(_ratio(post.inv_geo, initial.inv_geo), _ratio(post.lcs, initial.lcs),
                                 _ratio(post.b_nor, initial.b_nor))

    def to_json(self):
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class AttackTrace:
    removed: Tuple[RemovedVertex, ...]
    fraction: float
    tie_rule: TieRule
    initial: VulnerabilityReport
    post: VulnerabilityReport
    normalized: NormalizedMetrics

    @property
    def removed_labels(self) -> List[str]:
        return [vertex.label for vertex in self.removed]

    def _csv_header_and_row(self):
        header_and_value = [
            ("name", self.initial.name),
            ("n", self.initial.n),
            ("removed", len(self.removed)),
            ("v_db", self.initial.v_db),
            ("inv_geo_ratio", self.normalized.inv_geo),
            ("lcs_ratio", self.normalized.lcs),
            ("b_nor_post", self.post.b_nor),
            ("b_nor_ratio", self.normalized.b_nor)
        ]
        return tuple(zip(*header_and_value))

    def get_titles(self) -> List[str]:
        return list(self._csv_header_and_row()[0])

    def get_values(self) -> List:
        return list(self._csv_header_and_row()[1])

    def to_json(self):
        return {
            'fraction': self.fraction,
            'tie_rule': self.tie_rule.value,
            'removed': [dataclasses.asdict(vertex) for vertex in self.removed],
            'initial': self.initial.to_json(),
            'post': self.post.to_json(),
            'normalized': self.normalized.to_json()
        }


def _select_target(values: np.ndarray, tie_rule: TieRule, rng: np.random.RandomState) -> int:
    peak = values.max()
    tied = np.flatnonzero(values >= peak - TIE_TOLERANCE * max(abs(peak), 1.0))
    if tie_rule == TieRule.SEEDED_RANDOM and len(tied) > 1:
        return int(tied[rng.randint(len(tied))])
    return int(tied[0])


def rb_attack(g: Graph, fraction=0.01, tie_rule=TieRule.SMALLEST_INDEX, config: Optional[AnalysisConfig] = None,
              name="G", initial: Optional[VulnerabilityReport] = None) -> AttackTrace:
    """
    Removes ceil(fraction * N) vertices one at a time, always the vertex with the highest betweenness in the
    current residual graph, and reports the metrics of what is left.
    """
    config = config if config is not None else AnalysisConfig()
    count = removal_count(g.n, fraction)
    if count >= g.n:
        raise ParameterError(f"Removing {count} of {g.n} vertices leaves nothing to measure")
    initial = initial if initial is not None else analyze(g, config, name).report
    rng = np.random.RandomState(config.seed)
    residual = g
    removed = []
    for step in range(count):
        values = edge_betweenness(residual).vertex_values
        target = _select_target(values, tie_rule, rng)
        removed.append(RemovedVertex(step, residual.labels[target], float(values[target])))
        logger.debug("Attack step %d removes %s (betweenness %.6g)", step, residual.labels[target], values[target])
        residual = residual.remove_vertices([target])
    post = analyze(residual, config, name).report
    return AttackTrace(tuple(removed), fraction, tie_rule, initial, post, NormalizedMetrics.between(initial, post))


RANK_METHODS = ('v_db', 'inv_geo', 'lcs', 'b_nor', 'b_p', 'multiscale')


@dataclasses.dataclass(frozen=True)
class NetworkRanking:
    """
    orders maps each method to the network names from most to least vulnerable. Networks for which a method is
    undefined are listed last.
    """
    traces: Tuple[AttackTrace, ...]
    orders: Dict[str, List[str]]

    def to_json(self):
        return {
            'networks': [trace.to_json() for trace in self.traces],
            'orders': {method: list(names) for method, names in self.orders.items()}
        }


def _order(names: Sequence[str], values: Sequence[Optional[float]], descending: bool) -> List[str]:
    defined = [(name, value) for name, value in zip(names, values) if value is not None]
    undefined = [name for name, value in zip(names, values) if value is None]
    defined.sort(key=lambda item: -item[1] if descending else item[1])
    return [name for name, _ in defined] + undefined


def _multiscale_order(names, curves, tie_eps) -> List[str]:
    # Compare b_p at p = 1, 2, ... and let the first exponent that separates two networks decide.
    def compare(a, b):
        for value_a, value_b in zip(curves[a], curves[b]):
            if abs(value_a - value_b) > tie_eps:
                return -1 if value_a > value_b else 1
        return 0
    defined = [name for name in names if curves[name] is not None]
    undefined = [name for name in names if curves[name] is None]
    return sorted(defined, key=functools.cmp_to_key(compare)) + undefined


def rank_networks(named_graphs: Sequence[Tuple[str, Graph]], config: Optional[AnalysisConfig] = None) \
        -> NetworkRanking:
    config = config if config is not None else AnalysisConfig()
    names = [name for name, _ in named_graphs]
    if len(set(names)) != len(names):
        raise ParameterError("Network names must be unique")
    traces = []
    curves = {}
    common_bp = []
    for name, g in named_graphs:
        analysis = analyze(g, config, name)
        traces.append(rb_attack(g, config.attack_fraction, config.tie_rule, config, name, analysis.report))
        if analysis.profile.edge_count > 0 and g.n > 1:
            curves[name] = [bp(analysis.profile, p, True) for p in range(1, config.p_max + 1)]
            common_bp.append(bp(analysis.profile, config.rank_p, True))
        else:
            curves[name] = None
            common_bp.append(None)
    orders = {
        'v_db': _order(names, [t.initial.v_db for t in traces], descending=True),
        'inv_geo': _order(names, [t.normalized.inv_geo for t in traces], descending=False),
        'lcs': _order(names, [t.normalized.lcs for t in traces], descending=False),
        'b_nor': _order(names, [t.post.b_nor for t in traces], descending=True),
        'b_p': _order(names, common_bp, descending=True),
        'multiscale': _multiscale_order(names, curves, config.tie_eps)
    }
    return NetworkRanking(tuple(traces), orders)
