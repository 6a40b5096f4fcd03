"""Canonical labelings for small graphs, the backbone of isomorphism dedup.

The canonical form is found by equitable-partition refinement plus
individualization with backtracking: refine the degree partition until
stable, then split the first smallest non-singleton cell on each of its
members in turn, and keep the lexicographically smallest encoding over all
leaves.  One shortcut matters in practice: when the stable partition is
*homogeneous* (every cell internally complete or empty, every cell pair
joined completely or not at all), all leaves below it encode identically, so
the first consistent ordering is taken directly.  That collapses the
factorial blowup on stars, complete graphs and similar highly symmetric
inputs.

Codes are the graph6 bytes of the canonically relabeled graph, so equality
of codes is isomorphism (within the size limit) and codes sort naturally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import TooLarge
from .formats import pack_bits
from .graph import Graph

CANON_LIMIT = 16


@total_ordering
@dataclass(frozen=True)
class CanonicalCode:
    """Isomorphism-class identifier: graph6 bytes of the canonical labeling."""

    n: int
    bits: bytes

    @property
    def g6(self) -> str:
        return self.bits.decode("ascii")

    def __lt__(self, other: "CanonicalCode") -> bool:
        return (self.n, self.bits) < (other.n, other.bits)


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _refine(adj: list[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Refine to the coarsest stable partition below ``cells``, canonically ordered."""
    while True:
        masks = [0] * len(cells)
        for ci, cell in enumerate(cells):
            for v in cell:
                masks[ci] |= 1 << v
        sig = {
            v: tuple((adj[v] & mask).bit_count() for mask in masks)
            for cell in cells
            for v in cell
        }
        nxt: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                nxt.append(tuple(groups[key]))
        if not changed:
            return nxt
        cells = nxt


def _is_homogeneous(adj: list[int], cells: list[tuple[int, ...]]) -> bool:
    masks = [0] * len(cells)
    for ci, cell in enumerate(cells):
        for v in cell:
            masks[ci] |= 1 << v
    for ci, cell in enumerate(cells):
        a0 = cell[0]
        inner = (adj[a0] & masks[ci]).bit_count()
        if inner not in (0, len(cell) - 1):
            return False
        for cj in range(len(cells)):
            if cj == ci:
                continue
            cross = (adj[a0] & masks[cj]).bit_count()
            if cross not in (0, len(cells[cj])):
                return False
    return True


def _encode_order(g: Graph, order: list[int]) -> bytes:
    """graph6 bytes of g relabeled so that order[k] becomes vertex k."""
    pos = [0] * g.n
    for new, old in enumerate(order):
        pos[old] = new
    bits = bytearray((g.n * (g.n - 1)) // 2)
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        bits[(j * (j - 1)) // 2 + i] = 1
    return pack_bits(g.n, bits)


def _search(g: Graph, adj: list[int], cells: list[tuple[int, ...]], best: list) -> None:
    cells = _refine(adj, cells)
    if all(len(c) == 1 for c in cells) or _is_homogeneous(adj, cells):
        order = [v for cell in cells for v in cell]
        code = _encode_order(g, order)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = order
        return
    target = min(
        (i for i, c in enumerate(cells) if len(c) > 1),
        key=lambda i: (len(cells[i]), i),
    )
    for v in cells[target]:
        rest = tuple(w for w in cells[target] if w != v)
        branch = cells[:target] + [(v,), rest] + cells[target + 1:]
        _search(g, adj, branch, best)


def _canonicalize(g: Graph, limit: int) -> tuple[bytes, list[int]]:
    if g.n > limit:
        raise TooLarge(f"canonical form limited to n <= {limit}, got n={g.n}")
    if g.n == 0:
        return pack_bits(0, bytearray()), []
    adj = _adjacency_masks(g)
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    cells = [tuple(by_degree[d]) for d in sorted(by_degree)]
    best: list = [None, None]
    _search(g, adj, cells, best)
    return best[0], best[1]


def canonical_relabeling(g: Graph, limit: int = CANON_LIMIT) -> tuple[int, ...]:
    """Permutation perm with perm[old] = new reaching the canonical labeling."""
    _, order = _canonicalize(g, limit)
    pos = [0] * g.n
    for new, old in enumerate(order):
        pos[old] = new
    return tuple(pos)


def canonical_code(g: Graph, limit: int = CANON_LIMIT) -> CanonicalCode:
    code, _ = _canonicalize(g, limit)
    return CanonicalCode(g.n, code)


def canonical_graph(g: Graph, limit: int = CANON_LIMIT) -> Graph:
    """The canonically relabeled copy of g."""
    return g.relabel(canonical_relabeling(g, limit))


def canonical_pair(g: Graph, limit: int = CANON_LIMIT) -> tuple[CanonicalCode, Graph]:
    """Code and relabeled copy from a single search (dedup hot path)."""
    code, order = _canonicalize(g, limit)
    pos = [0] * g.n
    for new, old in enumerate(order):
        pos[old] = new
    return CanonicalCode(g.n, code), g.relabel(pos)


def are_isomorphic(g: Graph, h: Graph, limit: int = CANON_LIMIT) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_code(g, limit) == canonical_code(h, limit)
