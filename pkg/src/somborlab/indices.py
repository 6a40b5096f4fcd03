"""Degree-based graph indices of the form sum over edges of (d(u)^2 + d(v)^2)^alpha.

``general_sombor`` is the workhorse; the classical Sombor index is the
alpha = 1/2 member and the forgotten index is alpha = 1.  Summation runs
over the graph's grouped degree-pair multiset (see Graph.degree_pair_counts),
which is deterministic and keeps large parameter sweeps cheap; a term-by-edge
reference evaluator is kept alongside for cross-checks.
"""

from __future__ import annotations

import math

from .errors import InvalidDegree
from .graph import Graph


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha!r}")
    return alpha


def edge_contribution(du: int, dv: int, alpha: float) -> float:
    """Contribution (du^2 + dv^2)^alpha of one edge with endpoint degrees du, dv."""
    if du < 1 or dv < 1:
        raise InvalidDegree(f"endpoint degrees must be >= 1, got ({du}, {dv})")
    return float(du * du + dv * dv) ** _check_alpha(alpha)


def general_sombor(g: Graph, alpha: float) -> float:
    alpha = _check_alpha(alpha)
    total = 0.0
    for (du, dv), count in g.degree_pair_counts:
        total += count * float(du * du + dv * dv) ** alpha
    return total


def general_sombor_by_edges(g: Graph, alpha: float) -> float:
    """Reference evaluator: one term per edge, in sorted edge order."""
    alpha = _check_alpha(alpha)
    deg = g.degrees
    total = 0.0
    for u, v in g.edges:
        total += float(deg[u] * deg[u] + deg[v] * deg[v]) ** alpha
    return total


def sombor(g: Graph) -> float:
    return general_sombor(g, 0.5)


def forgotten(g: Graph) -> float:
    return general_sombor(g, 1.0)
