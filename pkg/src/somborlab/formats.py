"""Reading and writing graphs: graph6 strings and a plain edge-list text form.

graph6 is the compact printable encoding used by the usual graph-theory
tool chain: a size header followed by the upper triangle of the adjacency
matrix, column by column, packed six bits per printable byte (offset 63).
Files carry one graph per line and may start with a ``>>graph6<<`` banner.

The edge-list form is ``n m`` on the first line followed by one ``u v`` pair
per line; it holds a single graph.
"""

from __future__ import annotations

import os
from .errors import TooLarge
from .graph import Graph, from_edge_list

_HEADER = ">>graph6<<"
_MAX_N = 258047  # largest size representable with the 4-byte header


def _size_bytes(n: int) -> bytes:
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= _MAX_N:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise TooLarge(f"graph6 size header for n={n} not supported (max {_MAX_N})")


def _parse_size(data: bytes) -> tuple[int, int]:
    """Return (n, header_length) from the front of a graph6 byte string."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4 or data[1] == 126:
        raise ValueError("unsupported or truncated graph6 size header")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, 4


def pack_bits(n: int, bits: bytearray) -> bytes:
    """Pack an upper-triangle bit vector (length n(n-1)/2) into graph6 bytes."""
    out = bytearray(_size_bytes(n))
    acc = 0
    filled = 0
    for b in bits:
        acc = (acc << 1) | b
        filled += 1
        if filled == 6:
            out.append(acc + 63)
            acc = 0
            filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out)


def graph6_bytes(g: Graph) -> bytes:
    bits = bytearray((g.n * (g.n - 1)) // 2)
    for u, v in g.edges:
        # column-major upper triangle: all of column v precedes entry (u, v)
        bits[(v * (v - 1)) // 2 + u] = 1
    return pack_bits(g.n, bits)


def to_graph6(g: Graph) -> str:
    return graph6_bytes(g).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(_HEADER.encode("ascii")):
        text = text[len(_HEADER):]
    n, skip = _parse_size(text)
    body = text[skip:]
    nbits = (n * (n - 1)) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise ValueError(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(body)}"
        )
    if any(not (63 <= c <= 126) for c in body):
        raise ValueError("graph6 body contains bytes outside the printable range")
    edges = []
    idx = 0
    u, v = 0, 1  # walks the upper triangle in column-major order
    for c in body:
        val = c - 63
        for shift in range(5, -1, -1):
            if idx >= nbits:
                if (val >> shift) & 1:
                    raise ValueError("nonzero padding bits in graph6 string")
                continue
            if (val >> shift) & 1:
                edges.append((u, v))
            idx += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.split()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge-list text must start with a 'n m' line")
    try:
        n, m = (int(tok) for tok in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed edge-list text: {exc}") from None
    if len(pairs) != m:
        raise ValueError(f"edge-list header promises {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def load_graphs(path: str | os.PathLike) -> list[Graph]:
    """Read one or more graphs from a file, sniffing the format.

    A first line of two integer tokens means a single edge-list graph;
    anything else is treated as graph6, one graph per line.
    """
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"no graphs in {path}")
    head = lines[0].split()
    if len(head) == 2 and all(tok.lstrip("-").isdigit() for tok in head):
        return [from_edge_list_text(text)]
    return [from_graph6(ln) for ln in lines if ln != _HEADER]


def save_graph6(path: str | os.PathLike, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
