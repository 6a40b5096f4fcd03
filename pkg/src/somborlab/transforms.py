"""Local rewirings that move a graph around inside (or across) its class.

Two kinds live here:

* ``relocate(g, u, v)`` — for an edge uv whose endpoints both have further
  neighbors and share none, move every branch hanging off v over to u,
  keeping the edge uv, so v ends up pendant.  For positive alpha in (0, 1]
  this never decreases the general Sombor index; the property-based checker
  in ``extremal`` hammers exactly that claim.
* ``EdgeSwap`` / ``apply_swap`` — explicit edge additions and removals on a
  fixed vertex set, the low-level step used when walking between classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AdditionExists,
    CommonNeighbor,
    DegreeTooLow,
    InvalidParameters,
    NotAnEdge,
    RemovalMissing,
    SelfLoop,
)
from .graph import Edge, Graph


def _normalize(pairs) -> tuple[Edge, ...]:
    out = []
    for u, v in pairs:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        out.append((u, v) if u < v else (v, u))
    return tuple(sorted(out))


@dataclass(frozen=True)
class EdgeSwap:
    """A batch of edge additions and removals, endpoint-normalized."""

    additions: tuple[Edge, ...] = ()
    removals: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "additions", _normalize(self.additions))
        object.__setattr__(self, "removals", _normalize(self.removals))


def parse_swap_tokens(tokens) -> EdgeSwap:
    """Build an EdgeSwap from tokens like ``+1,5`` and ``-0,6``."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    adds, rems = [], []
    for tok in tokens:
        tok = tok.strip()
        if len(tok) < 4 or tok[0] not in "+-":
            raise InvalidParameters(f"swap token {tok!r} must look like +u,v or -u,v")
        try:
            u, v = (int(part) for part in tok[1:].split(","))
        except ValueError:
            raise InvalidParameters(f"swap token {tok!r} has non-integer endpoints") from None
        (adds if tok[0] == "+" else rems).append((u, v))
    return EdgeSwap(tuple(adds), tuple(rems))


def apply_swap(g: Graph, swap: EdgeSwap) -> Graph:
    """Apply removals then additions; raises when a step is inapplicable."""
    for u, v in swap.removals:
        g._check_vertex(u)
        g._check_vertex(v)
    for u, v in swap.additions:
        g._check_vertex(u)
        g._check_vertex(v)
    edges = set(g.edges)
    for e in swap.removals:
        if e not in edges:
            raise RemovalMissing(f"cannot remove absent edge {e}")
        edges.remove(e)
    for e in swap.additions:
        if e in edges:
            raise AdditionExists(f"cannot add existing edge {e}")
        edges.add(e)
    return Graph(g.n, tuple(sorted(edges)))


def relocate(g: Graph, u: int, v: int) -> Graph:
    """Move all of v's branches (except u) onto u; v becomes a pendant of u.

    Preconditions: uv is an edge, both endpoints have degree >= 2, and u, v
    have no common neighbor (otherwise the move would merge parallel edges).
    """
    if not g.has_edge(u, v):
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise DegreeTooLow(
            f"relocation needs degree >= 2 at both ends, got {g.degree(u)} and {g.degree(v)}"
        )
    shared = set(g.neighbors(u)) & set(g.neighbors(v))
    if shared:
        raise CommonNeighbor(f"endpoints share neighbors {sorted(shared)}")
    edges = []
    for a, b in g.edges:
        if v in (a, b) and u not in (a, b):
            other = a if b == v else b
            a, b = (other, u) if other < u else (u, other)
        edges.append((a, b))
    return Graph(g.n, tuple(sorted(edges)))
