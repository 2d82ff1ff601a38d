"""
==========================
Year: 2026
==========================
This module contains one function per command line command. Each takes parsed graphs and a configuration and returns
a CommandResult that cli.output renders in the configured format.
"""

import logging
from typing import Optional, Sequence, Tuple

from fracvuln.cli.output import CommandResult
from fracvuln.cli.plot import render_box_curve, render_bp_curves
from fracvuln.core.betweenness import p_search
from fracvuln.core.fractal import box_cover_curve, fit_dimension
from fracvuln.core.generators import GeneratorSpec, generate
from fracvuln.core.graph import Graph
from fracvuln.core.load import export_edge_list
from fracvuln.core.model import AnalysisConfig, FitError, IndistinguishableError
from fracvuln.core.vulnerability import analyze, rank_networks, rb_attack

logger = logging.getLogger(__name__)

MAX_LISTED_REMOVALS = 20


def run_analyze(g: Graph, config: AnalysisConfig, name="G") -> CommandResult:
    analysis = analyze(g, config, name)
    report = analysis.report
    document = {
        'report': report.to_json(),
        'fit': analysis.fit.to_json() if analysis.fit is not None else None,
        'fit_error': analysis.fit_error,
        'config': config.to_json()
    }
    return CommandResult(document, report.get_titles(), [report.get_values()])


def _compare_graphs(g_a, g_b, name_a, name_b, b1_a, b1_b):
    return [
        {'name': name_a, 'n': g_a.n, 'edge_count': g_a.edge_count, 'b1': b1_a},
        {'name': name_b, 'n': g_b.n, 'edge_count': g_b.edge_count, 'b1': b1_b}
    ]


def run_compare(g_a: Graph, g_b: Graph, config: AnalysisConfig, names: Tuple[str, str] = ("A", "B"),
                plot: Optional[str] = None) -> CommandResult:
    name_a, name_b = names
    if name_a == name_b:
        name_a, name_b = f"{name_a} (A)", f"{name_b} (B)"
    header = ["p", f"bp_{name_a}", f"bp_{name_b}", "f"]
    try:
        result = p_search(g_a, g_b, config.p_max, config.tie_eps, config.normalized_compare)
    except IndistinguishableError as e:
        logger.info("Comparison undecided: %s", e)
        b1_a, b1_b = e.bp_curve_a[0][1], e.bp_curve_b[0][1]
        document = {
            'graphs': _compare_graphs(g_a, g_b, name_a, name_b, b1_a, b1_b),
            'normalized': config.normalized_compare,
            'p_max': config.p_max,
            'indistinguishable': True,
            'verdict': "indistinguishable",
            'more_vulnerable': None,
            'p_star': None,
            'bp_at_p_star': None,
            'f_curve': [[p, f] for p, f in e.f_curve],
            'bp_curve_a': [[p, value] for p, value in e.bp_curve_a],
            'bp_curve_b': [[p, value] for p, value in e.bp_curve_b]
        }
        rows = [(p, a, b, f) for (p, a), (_, b), (_, f) in zip(e.bp_curve_a, e.bp_curve_b, e.f_curve)]
        notes = [f"b_1: {name_a} = {b1_a:.6g}, {name_b} = {b1_b:.6g}",
                 f"Verdict: indistinguishable for p in 1..{config.p_max}"]
        return CommandResult(document, header, rows, notes)

    more_vulnerable = name_a if result.more_vulnerable == 'A' else name_b
    verdict = f"{more_vulnerable} is more vulnerable (p* = {result.p_star})"
    document = {
        'graphs': _compare_graphs(g_a, g_b, name_a, name_b, result.b1_a, result.b1_b),
        'normalized': config.normalized_compare,
        'p_max': config.p_max,
        'indistinguishable': False,
        'verdict': verdict,
        'more_vulnerable': more_vulnerable,
        'p_star': result.p_star,
        'bp_at_p_star': [result.bp_a, result.bp_b],
        'f_curve': [[p, f] for p, f in result.f_curve],
        'bp_curve_a': [[p, value] for p, value in result.bp_curve_a],
        'bp_curve_b': [[p, value] for p, value in result.bp_curve_b]
    }
    f_values = dict(result.f_curve)
    rows = [(p, a, b, f_values.get(p)) for (p, a), (_, b) in zip(result.bp_curve_a, result.bp_curve_b)]
    notes = [f"b_1: {name_a} = {result.b1_a:.6g}, {name_b} = {result.b1_b:.6g}", f"Verdict: {verdict}"]
    if plot is not None:
        render_bp_curves(result, plot, name_a, name_b)
    return CommandResult(document, header, rows, notes)


def run_attack(g: Graph, config: AnalysisConfig, name="G") -> CommandResult:
    trace = rb_attack(g, config.attack_fraction, config.tie_rule, config, name)
    labels = trace.removed_labels
    listed = ", ".join(labels[:MAX_LISTED_REMOVALS]) + (", ..." if len(labels) > MAX_LISTED_REMOVALS else "")
    notes = [f"Removed {len(labels)} of {g.n} vertices: {listed}"]
    return CommandResult(trace.to_json(), trace.get_titles(), [trace.get_values()], notes)


def run_boxcover(g: Graph, config: AnalysisConfig, name="G", plot: Optional[str] = None) -> CommandResult:
    curve = box_cover_curve(g, runs=config.box_runs, seed=config.seed)
    fit, fit_error = None, None
    try:
        fit = fit_dimension(curve, config.fit_range, config.fit_aggregate)
    except FitError as e:
        fit_error = str(e)
    document = {
        'name': name,
        'curve': curve.to_json(),
        'fit': fit.to_json() if fit is not None else None,
        'fit_error': fit_error
    }
    if fit is not None:
        notes = [f"d_B = {fit.d_b:.6g}, r2 = {fit.r2:.6g}, fit range = {fit.fit_range[0]}..{fit.fit_range[1]}"]
    else:
        notes = [f"No fit: {fit_error}"]
    if plot is not None:
        render_box_curve(curve, fit, plot, title=name)
    return CommandResult(document, ["l_b", "mean_nb"], curve.points(), notes)


def run_generate(spec: GeneratorSpec) -> str:
    return export_edge_list(generate(spec))


def run_rank(named_graphs: Sequence[Tuple[str, Graph]], config: AnalysisConfig) -> CommandResult:
    ranking = rank_networks(named_graphs, config)
    header = ranking.traces[0].get_titles()
    rows = [trace.get_values() for trace in ranking.traces]
    notes = [f"{method}: {' > '.join(names)}" for method, names in ranking.orders.items()]
    return CommandResult(ranking.to_json(), header, rows, notes)
