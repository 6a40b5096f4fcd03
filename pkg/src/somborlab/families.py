"""Constructors for the structured unicyclic families the workbench studies.

Three parametric families cover everything the extremal machinery needs:

* ``cycle(p)`` — the plain cycle C_p.
* ``u_graph(n, d, i)`` — a path of length d - 1 on vertices 0..d-1, a
  four-cycle attached across path positions i-1, i, i+1 through an apex
  vertex d, and n - d - 1 pendant vertices hung on vertex 0.  The graph has
  diameter d, girth 4, and n vertices; ``i`` slides the cycle along the
  path.  ``u_family(n, d)`` is the i = 1 member, the conjectured maximizer
  in its diameter class.
* ``c_family(p, q, r)`` — the cycle C_p with q pendants at vertex 0 and r
  pendants at vertex 1, the shape that settles the very small diameters.

``closed_form_u`` evaluates the closed expression for the general Sombor
index of ``u_family(n, d)`` without building the graph; it must (and does)
agree with direct evaluation to well below 1e-9.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameters, TooSmall
from .graph import Graph, from_edge_list


def cycle(p: int) -> Graph:
    if p < 3:
        raise TooSmall(f"cycle needs at least 3 vertices, got {p}")
    return from_edge_list(p, [(k, (k + 1) % p) for k in range(p)])


def u_graph(n: int, d: int, i: int) -> Graph:
    """Path 0..d-1, apex d forming a 4-cycle at position i, pendants at 0.

    Preconditions: d >= 3, n >= d + 2, 1 <= i <= d - 2.  The 4-cycle is
    (i-1, i, i+1, d); pendant vertices are d+1..n-1, all attached to 0.
    """
    if d < 3:
        raise InvalidParameters(f"u_graph needs d >= 3, got d={d}")
    if n < d + 2:
        raise InvalidParameters(f"u_graph needs n >= d + 2, got n={n}, d={d}")
    if not (1 <= i <= d - 2):
        raise InvalidParameters(f"cycle position must satisfy 1 <= i <= d - 2, got i={i}")
    edges = [(j, j + 1) for j in range(d - 1)]
    edges += [(i - 1, d), (d, i + 1)]
    edges += [(0, k) for k in range(d + 1, n)]
    return from_edge_list(n, edges)


def u_family(n: int, d: int) -> Graph:
    """The i = 1 member of u_graph, written U(n, d) in reports."""
    return u_graph(n, d, 1)


def c_family(p: int, q: int, r: int) -> Graph:
    """Cycle C_p with q pendants on vertex 0 and r pendants on vertex 1."""
    if p < 3:
        raise TooSmall(f"c_family needs a cycle of length >= 3, got p={p}")
    if q < 0 or r < 0:
        raise TooSmall(f"pendant counts must be non-negative, got q={q}, r={r}")
    edges = [(k, (k + 1) % p) for k in range(p)]
    edges += [(0, p + k) for k in range(q)]
    edges += [(1, p + q + k) for k in range(r)]
    return from_edge_list(p + q + r, edges)


def closed_form_u(n: int, d: int, alpha: float) -> float:
    """General Sombor index of u_family(n, d) in closed form.

    Valid for d >= 4 and n >= d + 2.  Writing w = n - d + 1 for the degree
    of vertex 0, the value is

        (n - d - 1) * (w^2 + 1)^alpha + 2 * (w^2 + 4)^alpha + gamma(d)

    with gamma(4) = 2*13^alpha + 10^alpha and
    gamma(d) = 3*13^alpha + (d - 5)*8^alpha + 5^alpha for d >= 5.
    """
    if d < 4:
        raise InvalidParameters(f"closed form defined for d >= 4, got d={d}")
    if n < d + 2:
        raise InvalidParameters(f"closed form needs n >= d + 2, got n={n}, d={d}")
    alpha = float(alpha)
    w = n - d + 1
    head = (n - d - 1) * float(w * w + 1) ** alpha + 2.0 * float(w * w + 4) ** alpha
    if d == 4:
        gamma = 2.0 * 13.0**alpha + 10.0**alpha
    else:
        gamma = 3.0 * 13.0**alpha + (d - 5) * 8.0**alpha + 5.0**alpha
    return head + gamma


@dataclass(frozen=True)
class FamilySpec:
    """Parsed form of a family token like ``U:8,5,1`` or ``C:7`` or ``CF:5,2,1``."""

    kind: str
    params: tuple[int, ...]

    def build(self) -> Graph:
        if self.kind == "C":
            return cycle(*self.params)
        if self.kind == "U":
            return u_graph(*self.params)
        if self.kind == "CF":
            return c_family(*self.params)
        raise InvalidParameters(f"unknown family kind {self.kind!r}")


_ARITY = {"C": 1, "U": 3, "CF": 3}


def parse_family_spec(token: str) -> FamilySpec:
    """Parse ``KIND:p1,p2,...``; kinds are C (cycle), U (u_graph), CF (c_family)."""
    kind, sep, rest = token.partition(":")
    kind = kind.strip().upper()
    if not sep or kind not in _ARITY:
        raise InvalidParameters(
            f"family spec {token!r} must look like C:p, U:n,d,i or CF:p,q,r"
        )
    try:
        params = tuple(int(tok) for tok in rest.split(","))
    except ValueError:
        raise InvalidParameters(f"non-integer parameter in family spec {token!r}") from None
    if len(params) != _ARITY[kind]:
        raise InvalidParameters(
            f"family kind {kind} takes {_ARITY[kind]} parameters, got {len(params)}"
        )
    return FamilySpec(kind, params)
