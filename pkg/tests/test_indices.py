import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from somborlab import (
    edge_contribution,
    forgotten,
    from_edge_list,
    general_sombor,
    general_sombor_by_edges,
    random_connected_graph,
    sombor,
    u_graph,
)
from somborlab.errors import InvalidDegree


def ring(n):
    return from_edge_list(n, [(k, (k + 1) % n) for k in range(n)])


def star(n):
    return from_edge_list(n, [(0, k) for k in range(1, n)])


def test_edge_contribution():
    assert edge_contribution(1, 1, 1.0) == 2.0
    assert edge_contribution(2, 3, 0.5) == pytest.approx(math.sqrt(13))
    with pytest.raises(InvalidDegree):
        edge_contribution(0, 2, 0.5)
    with pytest.raises(ValueError):
        edge_contribution(2, 2, float("nan"))


def test_closed_values_on_simple_shapes():
    # every cycle edge contributes 8^alpha; every star edge ((n-1)^2+1)^alpha
    for alpha in (0.3, 0.5, 1.0, 2.0):
        assert general_sombor(ring(7), alpha) == pytest.approx(7 * 8**alpha, rel=1e-14)
        assert general_sombor(star(6), alpha) == pytest.approx(5 * 26**alpha, rel=1e-14)


def test_reference_value():
    assert general_sombor(u_graph(8, 5, 1), 1.0) == pytest.approx(118.0, abs=1e-12)


def test_specializations_delegate_exactly():
    rng = random.Random(19)
    for _ in range(50):
        g = random_connected_graph(rng)
        assert sombor(g) == general_sombor(g, 0.5)
        assert forgotten(g) == general_sombor(g, 1.0)


def test_grouped_matches_by_edge():
    rng = random.Random(29)
    for _ in range(80):
        g = random_connected_graph(rng, 4, 14)
        for alpha in (0.1, 0.5, 0.9, 1.0, 1.7):
            a = general_sombor(g, alpha)
            b = general_sombor_by_edges(g, alpha)
            assert a == pytest.approx(b, rel=1e-12)


def test_relabel_invariance():
    rng = random.Random(31)
    for _ in range(40):
        g = random_connected_graph(rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert general_sombor(h, 0.37) == pytest.approx(general_sombor(g, 0.37), rel=1e-12)


@settings(max_examples=50)
@given(st.floats(0.01, 2.0), st.integers(3, 9))
def test_cycle_formula_property(alpha, n):
    assert general_sombor(ring(n), alpha) == pytest.approx(n * 8.0**alpha, rel=1e-12)


def test_empty_and_alpha_zero():
    lone = from_edge_list(1, [])
    assert general_sombor(lone, 0.5) == 0.0
    # alpha = 0 degenerates to the edge count
    assert general_sombor(ring(6), 0.0) == 6.0
    with pytest.raises(ValueError):
        general_sombor(ring(3), float("inf"))
