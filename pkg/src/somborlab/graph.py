"""Immutable simple graphs and the structural queries the rest of the package uses.

A Graph is a value: vertices 0..n-1 plus a sorted tuple of undirected edges.
All transformations elsewhere build new Graph instances; derived data
(adjacency, degrees, distances) is cached on first use, which is safe because
instances are frozen.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    Acyclic,
    Disconnected,
    DuplicateEdge,
    NotUnicyclic,
    OutOfRange,
    SelfLoop,
)

Edge = tuple[int, int]


def from_edge_list(n: int, edges) -> "Graph":
    """Validate and build a Graph on vertices 0..n-1 from an edge iterable.

    Raises OutOfRange, SelfLoop or DuplicateEdge on bad input.  Endpoint order
    within a pair and the order of pairs are both normalized away.
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} listed more than once")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; construct through ``from_edge_list``.

    Direct construction skips validation and requires ``edges`` to already be
    a sorted tuple of (min, max) pairs — internal fast paths rely on that.
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor tuple per vertex, each sorted ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def degree_pair_counts(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Multiset of endpoint-degree pairs (lo, hi), as sorted (pair, count) items.

        This is the summation backbone of the index engine: a graph has few
        distinct degree pairs, so grouping keeps repeated index evaluation
        cheap without changing the (deterministic) result.
        """
        deg = self.degrees
        counts = Counter(
            (deg[u], deg[v]) if deg[u] <= deg[v] else (deg[v], deg[u])
            for u, v in self.edges
        )
        return tuple(sorted(counts.items()))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise OutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    # -- connectivity and distances -------------------------------------------------

    def _bfs_distances(self, source: int) -> list[int]:
        """Distance from source to every vertex; -1 where unreachable."""
        dist = [-1] * self.n
        dist[source] = 0
        frontier = [source]
        adj = self.adjacency
        while frontier:
            nxt = []
            for u in frontier:
                du = dist[u] + 1
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = du
                        nxt.append(w)
            frontier = nxt
        return dist

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d >= 0 for d in self._bfs_distances(0))

    def diameter(self) -> int:
        """Largest shortest-path distance; raises Disconnected when undefined."""
        return self._diameter

    @cached_property
    def _diameter(self) -> int:
        if self.n == 0:
            raise Disconnected("diameter of the empty graph is undefined")
        best = 0
        for s in range(self.n):
            dist = self._bfs_distances(s)
            ecc = max(dist)
            if min(dist) < 0:
                raise Disconnected("graph is not connected")
            best = max(best, ecc)
        return best

    def girth(self) -> int:
        """Length of a shortest cycle; raises Acyclic for forests."""
        return self._girth

    @cached_property
    def _girth(self) -> int:
        best: int | None = None
        adj = self.adjacency
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            frontier = [s]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in adj[u]:
                        if dist[w] < 0:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        elif w != parent[u]:
                            # Non-tree edge closes a walk of this length through s;
                            # minimizing over all roots makes the bound exact.
                            cand = dist[u] + dist[w] + 1
                            if best is None or cand < best:
                                best = cand
                frontier = nxt
        if best is None:
            raise Acyclic("graph has no cycle")
        return best

    # -- unicyclic structure --------------------------------------------------------

    def is_unicyclic(self) -> bool:
        """Connected with exactly as many edges as vertices."""
        return self.n >= 3 and self.m == self.n and self.is_connected

    def pendant_vertices(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees) if d == 1)

    def cycle_vertices(self) -> tuple[int, ...]:
        """The unique cycle of a unicyclic graph, walked from its smallest vertex.

        Pendant vertices are stripped repeatedly; what survives is the cycle.
        Raises NotUnicyclic when the graph is not unicyclic.
        """
        if not self.is_unicyclic():
            raise NotUnicyclic(f"graph with n={self.n}, m={self.m} is not unicyclic")
        deg = list(self.degrees)
        queue = [v for v in range(self.n) if deg[v] == 1]
        alive = [True] * self.n
        while queue:
            v = queue.pop()
            alive[v] = False
            deg[v] = 0
            for w in self.adjacency[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        queue.append(w)
        core = [v for v in range(self.n) if alive[v]]
        start = min(core)
        walk = [start]
        prev = -1
        cur = start
        while len(walk) < len(core):
            nxt = min(w for w in self.adjacency[cur] if alive[w] and w != prev)
            walk.append(nxt)
            prev, cur = cur, nxt
        return tuple(walk)

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise OutOfRange(f"not a permutation of 0..{self.n - 1}: {perm}")
        edges = sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in self.edges
        )
        return Graph(self.n, tuple(edges))
