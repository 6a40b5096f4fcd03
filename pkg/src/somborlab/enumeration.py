"""Exhaustive enumeration of unicyclic graphs up to isomorphism.

Strategy: generate one representative per free tree on n vertices, add every
possible non-edge to each, and dedup the results by canonical code.  Every
unicyclic graph arises this way (remove any cycle edge and a spanning tree
remains), so the sweep is exhaustive; the canonical dedup makes it exact.

Results are cached per n and always returned sorted by canonical code with
canonical labelings, so the output is deterministic and independent of both
discovery order and worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .canon import canonical_pair
from .errors import InvalidParameters, TooLarge, TooSmall
from .graph import Edge, Graph

DEFAULT_CAP = 14  # exhaustive augmentation stays tractable through n = 14
_TREE_LIMIT = 16


def free_trees(n: int, limit: int = _TREE_LIMIT) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise TooSmall(f"trees need at least one vertex, got n={n}")
    if n > limit:
        raise TooLarge(f"free-tree generation limited to n <= {limit}, got n={n}")
    if n == 1:
        yield Graph(1, ())
        return
    if n == 2:
        yield Graph(2, ((0, 1),))
        return
    for t in nx.nonisomorphic_trees(n):
        edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in t.edges()))
        yield Graph(n, edges)


def _augment_trees(n: int, trees: list[tuple[Edge, ...]]) -> dict:
    """Add each non-edge to each tree; return {code: canonical edge tuple}."""
    found: dict = {}
    for tree_edges in trees:
        present = set(tree_edges)
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in present:
                    continue
                g = Graph(n, tuple(sorted(tree_edges + ((u, v),))))
                code, rep = canonical_pair(g)
                if code.bits not in found:
                    found[code.bits] = rep.edges
    return found


_CLASS_CACHE: dict[int, tuple[Graph, ...]] = {}


def unicyclic_classes(n: int, jobs: int | None = 1, cap: int = DEFAULT_CAP) -> tuple[Graph, ...]:
    """All unicyclic isomorphism classes on n vertices, sorted by canonical code."""
    if n < 3:
        raise TooSmall(f"unicyclic graphs need n >= 3, got n={n}")
    if n > cap:
        raise TooLarge(f"exhaustive enumeration capped at n <= {cap}, got n={n}")
    cached = _CLASS_CACHE.get(n)
    if cached is not None:
        return cached
    trees = [t.edges for t in free_trees(n)]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(trees) >= 2 * jobs and n >= 9:
        chunks = [trees[k::jobs] for k in range(jobs)]
        found: dict = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_augment_trees, [n] * len(chunks), chunks):
                found.update(part)
    else:
        found = _augment_trees(n, trees)
    classes = tuple(Graph(n, edges) for _, edges in sorted(found.items()))
    _CLASS_CACHE[n] = classes
    return classes


@dataclass(frozen=True)
class EnumFilter:
    """Selection inside a fixed vertex count: exact diameter and/or girth."""

    n: int
    diameter: int | None = None
    girth: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise TooSmall(f"unicyclic graphs need n >= 3, got n={self.n}")
        if self.diameter is not None and not (1 <= self.diameter <= self.n - 2):
            raise InvalidParameters(
                f"unicyclic diameter lies in 1..{self.n - 2}, got {self.diameter}"
            )
        if self.girth is not None and not (3 <= self.girth <= self.n):
            raise InvalidParameters(
                f"girth lies in 3..{self.n}, got {self.girth}"
            )

    def admits(self, g: Graph) -> bool:
        if self.diameter is not None and g.diameter() != self.diameter:
            return False
        if self.girth is not None and g.girth() != self.girth:
            return False
        return True


@dataclass(frozen=True)
class EnumResult:
    graphs: tuple[Graph, ...]

    @property
    def count(self) -> int:
        return len(self.graphs)


def enumerate_unicyclic(
    filt: EnumFilter, jobs: int | None = 1, cap: int = DEFAULT_CAP
) -> EnumResult:
    classes = unicyclic_classes(filt.n, jobs=jobs, cap=cap)
    return EnumResult(tuple(g for g in classes if filt.admits(g)))


def count_unicyclic(n: int, diameter: int | None = None, girth: int | None = None,
                    jobs: int | None = 1, cap: int = DEFAULT_CAP) -> int:
    return enumerate_unicyclic(EnumFilter(n, diameter, girth), jobs=jobs, cap=cap).count
