import random

import pytest

from somborlab import (
    EdgeSwap,
    apply_swap,
    applicable_pairs,
    from_edge_list,
    general_sombor,
    parse_swap_tokens,
    random_connected_graph,
    relocate,
)
from somborlab.errors import (
    AdditionExists,
    CommonNeighbor,
    DegreeTooLow,
    InvalidParameters,
    NotAnEdge,
    OutOfRange,
    RemovalMissing,
    SelfLoop,
)


def test_relocate_moves_branches():
    # path 0-1-2-3 with a leaf 4 on vertex 2; relocating across (1, 2)
    # drags {3, 4} onto vertex 1 and leaves 2 pendant
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    h = relocate(g, 1, 2)
    assert h.edges == ((0, 1), (1, 2), (1, 3), (1, 4))
    assert h.degrees[1] == g.degrees[1] + g.degrees[2] - 1
    assert h.degrees[2] == 1
    assert h.n == g.n and h.m == g.m


def test_relocate_is_orientation_sensitive():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    h = relocate(g, 2, 1)  # now vertex 1 gives up its branch {0}
    assert h.edges == ((0, 2), (1, 2), (2, 3), (2, 4))


def test_relocate_preserves_unicyclicity():
    g = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (4, 6)])
    h = relocate(g, 3, 4)
    assert h.is_unicyclic()
    assert h.m == g.m


def test_relocate_preconditions():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    with pytest.raises(NotAnEdge):
        relocate(g, 0, 2)
    with pytest.raises(DegreeTooLow):
        relocate(g, 0, 1)  # vertex 0 is pendant
    tri = from_edge_list(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    with pytest.raises(CommonNeighbor):
        relocate(tri, 0, 1)
    with pytest.raises(OutOfRange):
        relocate(g, 1, 9)


def test_relocate_increases_index():
    rng = random.Random(99)
    for _ in range(60):
        g = random_connected_graph(rng)
        pairs = applicable_pairs(g)
        if not pairs:
            continue
        u, v = rng.choice(pairs)
        h = relocate(g, u, v)
        for alpha in (0.25, 0.5, 1.0):
            assert general_sombor(h, alpha) > general_sombor(g, alpha)


def test_edge_swap_normalization():
    s = EdgeSwap(additions=((3, 1),), removals=((2, 0), (4, 2)))
    assert s.additions == ((1, 3),)
    assert s.removals == ((0, 2), (2, 4))
    with pytest.raises(SelfLoop):
        EdgeSwap(additions=((1, 1),))


def test_apply_swap():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h = apply_swap(g, EdgeSwap(additions=((0, 4),), removals=((1, 2),)))
    assert h.edges == ((0, 1), (0, 4), (2, 3), (3, 4))
    with pytest.raises(RemovalMissing):
        apply_swap(g, EdgeSwap(removals=((0, 2),)))
    with pytest.raises(AdditionExists):
        apply_swap(g, EdgeSwap(additions=((0, 1),)))
    with pytest.raises(OutOfRange):
        apply_swap(g, EdgeSwap(additions=((0, 7),)))


def test_parse_swap_tokens():
    s = parse_swap_tokens("+1,5 -0,6")
    assert s.additions == ((1, 5),) and s.removals == ((0, 6),)
    assert parse_swap_tokens(["+2,3"]) == EdgeSwap(additions=((2, 3),))
    for bad in ("1,5", "+1;5", "+1", "+a,b", "*1,2"):
        with pytest.raises(InvalidParameters):
            parse_swap_tokens(bad)


def test_swap_round_trip():
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    fwd = EdgeSwap(additions=((0, 3),), removals=((2, 3),))
    back = EdgeSwap(additions=((2, 3),), removals=((0, 3),))
    assert apply_swap(apply_swap(g, fwd), back) == g
