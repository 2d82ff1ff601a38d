"""
==========================
Year: 2026
==========================
This module renders plot data to PNG files: the log-log box-counting curve with its fitted line and the b_p curves
of a graph comparison.
"""

import logging
from typing import Optional

import numpy as np
from matplotlib.figure import Figure

from fracvuln.core.betweenness import PSearchResult
from fracvuln.core.fractal import BoxCoverCurve, FractalFit

logger = logging.getLogger(__name__)


def render_box_curve(curve: BoxCoverCurve, fit: Optional[FractalFit], path: str, title=None):
    fig = Figure(figsize=(5, 4))
    ax = fig.subplots()
    ax.loglog(curve.sizes, curve.mean_counts, "o", label="mean $N_B$")
    if fit is not None:
        lo, hi = fit.fit_range
        sizes = np.array([size for size in curve.sizes if lo <= size <= hi], dtype=np.float64)
        ax.loglog(sizes, np.exp(fit.intercept) * sizes ** fit.slope, "-",
                  label=f"$d_B$ = {fit.d_b:.3f} ($r^2$ = {fit.r2:.3f})")
    ax.set_xlabel("$l_B$")
    ax.set_ylabel("$N_B$")
    if title:
        ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    logger.info("Box-counting curve written to %s", path)


def render_bp_curves(result: PSearchResult, path: str, name_a="A", name_b="B"):
    ps = [p for p, _ in result.bp_curve_a]
    f = [f_value for _, f_value in result.f_curve]
    fig = Figure(figsize=(5, 4))
    ax = fig.subplots()
    ax.plot(ps, [value for _, value in result.bp_curve_a], "-", label=f"$b_p$ {name_a}")
    ax.plot(ps, [value for _, value in result.bp_curve_b], "--", label=f"$b_p$ {name_b}")
    ax.plot([p for p, _ in result.f_curve], [10 * value for value in f], ":", label="10 f(p)")
    ax.axvline(result.p_star, color="grey", linewidth=0.8)
    ax.set_xlabel("p")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    logger.info("b_p curves written to %s", path)
