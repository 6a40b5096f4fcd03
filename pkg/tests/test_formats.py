import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from somborlab import (
    from_edge_list,
    from_edge_list_text,
    from_graph6,
    load_graphs,
    save_graph6,
    to_edge_list_text,
    to_graph6,
)
from somborlab.errors import DuplicateEdge, OutOfRange


def random_graph(rng, n, p=0.5):
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def test_known_encodings():
    # K4 is the canonical "F?" neighborhood check: n=4 header 'C', bits all 1
    k4 = from_edge_list(4, list(itertools.combinations(range(4), 2)))
    assert to_graph6(k4) == "C~"
    assert to_graph6(from_edge_list(1, [])) == "@"
    assert to_graph6(from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])) == "Dhc"


def test_round_trip_seeded():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 20))
        assert from_graph6(to_graph6(g)) == g


def test_matches_networkx():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 15))
        ours = to_graph6(g)
        gx = nx.empty_graph(g.n)
        gx.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(gx, header=False).decode().strip()
        assert ours == theirs
        back = nx.from_graph6_bytes(ours.encode())
        assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges)


@settings(max_examples=80)
@given(st.integers(1, 12), st.data())
def test_round_trip_hypothesis(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    mask = data.draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = from_edge_list(n, [e for e, keep in zip(pairs, mask) if keep])
    assert from_graph6(to_graph6(g)) == g


def test_large_n_header():
    # n > 62 switches to the four-byte size header
    n = 100
    g = from_edge_list(n, [(k, k + 1) for k in range(n - 1)])
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    theirs = nx.to_graph6_bytes(nx.path_graph(n), header=False).decode().strip()
    assert s == theirs


def test_header_banner_accepted():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g


def test_decode_rejects_garbage():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("D")  # promises n=5, no body
    with pytest.raises(ValueError):
        from_graph6("C~~")  # body too long for n=4
    with pytest.raises(ValueError):
        from_graph6("B" + chr(127))  # byte outside printable range
    # n=2 uses one body byte with only the top bit meaningful; set padding
    with pytest.raises(ValueError):
        from_graph6("A" + chr(63 + 1))


def test_edge_list_text_round_trip():
    g = from_edge_list(6, [(0, 3), (1, 2), (3, 5)])
    text = to_edge_list_text(g)
    assert text.splitlines()[0] == "6 3"
    assert from_edge_list_text(text) == g


def test_edge_list_text_errors():
    with pytest.raises(ValueError):
        from_edge_list_text("")
    with pytest.raises(ValueError):
        from_edge_list_text("3 2\n0 1\n")  # promises 2 edges, has 1
    with pytest.raises(ValueError):
        from_edge_list_text("3 one\n")
    with pytest.raises(OutOfRange):
        from_edge_list_text("3 1\n0 7\n")
    with pytest.raises(DuplicateEdge):
        from_edge_list_text("3 2\n0 1\n1 0\n")


def test_load_graphs_sniffs_formats(tmp_path):
    g1 = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    g2 = from_edge_list(4, [(0, 1)])
    g6file = tmp_path / "many.g6"
    save_graph6(g6file, [g1, g2])
    assert load_graphs(g6file) == [g1, g2]

    elfile = tmp_path / "one.edges"
    elfile.write_text(to_edge_list_text(g1))
    assert load_graphs(elfile) == [g1]

    banner = tmp_path / "banner.g6"
    banner.write_text(">>graph6<<\n" + to_graph6(g2) + "\n")
    assert load_graphs(banner) == [g2]

    empty = tmp_path / "empty.g6"
    empty.write_text("\n")
    with pytest.raises(ValueError):
        load_graphs(empty)
