"""Grid verdicts shared by every condition checker.

A margin is positive where the condition under test holds.  Verdicts
are three-valued and error-aware: a point only counts as a violation
when its margin is negative beyond the quadrature error there, and only
as satisfied when clear of the error band.  All of this is on-grid
evidence, never a proof of an asymptotic statement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

SATISFIED = "satisfied-on-grid"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass
class ConditionReport:
    grid: List[float]
    margins: List[float]
    errors: List[float]
    verdict: str
    summary: dict
    notes: str = ""

    def __bool__(self):
        return self.verdict == SATISFIED


def assemble_report(grid, margins, errors=None, notes: str = "",
                    force_verdict: str | None = None) -> ConditionReport:
    grid = [float(g) for g in grid]
    margins = [float(m) for m in margins]
    if errors is None:
        errors = [0.0] * len(margins)
    errors = [abs(float(e)) for e in errors]
    if force_verdict is not None:
        verdict = force_verdict
    elif any(m < -e for m, e in zip(margins, errors)):
        verdict = VIOLATED
    elif all(m >= e for m, e in zip(margins, errors)):
        verdict = SATISFIED
    else:
        verdict = INCONCLUSIVE
    if margins:
        i = int(np.argmin(margins))
        summary = {"min": min(margins), "max": max(margins), "argmin": grid[i]}
    else:
        summary = {"min": math.nan, "max": math.nan, "argmin": math.nan}
    return ConditionReport(grid, margins, errors, verdict, summary, notes)


def log_grid(zlo: float, zhi: float, points_per_decade: int = 100):
    """Log-spaced grid over [zlo, zhi], endpoints included."""
    if not 0 < zlo < zhi:
        raise ValueError("need 0 < zlo < zhi")
    decades = math.log10(zhi / zlo)
    n = max(int(round(decades * points_per_decade)), 2) + 1
    return list(np.geomspace(zlo, zhi, n))


def dyadic_block_stats(zs, values):
    """Per-octave (min, max) of values, keyed by floor(log2 z), ascending."""
    blocks = {}
    for z, v in zip(zs, values):
        k = math.floor(math.log2(z))
        lo, hi = blocks.get(k, (math.inf, -math.inf))
        blocks[k] = (min(lo, v), max(hi, v))
    keys = sorted(blocks)
    return keys, [blocks[k][0] for k in keys], [blocks[k][1] for k in keys]


def fit_power_law(zs, values):
    """Least-squares slope p of values ~ c * z**(-p) in log-log coordinates.

    Returns (p, c); points with nonpositive value are dropped, and fewer
    than two usable points yields (nan, nan).
    """
    xs = [math.log(z) for z, v in zip(zs, values) if v > 0]
    ys = [math.log(v) for v in values if v > 0]
    if len(xs) < 2:
        return math.nan, math.nan
    slope, intercept = np.polyfit(xs, ys, 1)
    return -float(slope), math.exp(float(intercept))
