import math

import pytest

from somborlab import (
    CONSTANT_IDS,
    LEMMA_IDS,
    GridSpec,
    check_constant,
    check_lemma,
    get_constant,
)
from somborlab.errors import BadGrid, UnknownConstant
from somborlab.inequalities import g_slope_bound, h_slope_bound


def test_grid_spec_points():
    assert GridSpec(1.0, 2.0, 0.5).points() == [1.0, 1.5, 2.0]
    assert GridSpec(0.1, 0.3, 0.1).points() == pytest.approx([0.1, 0.2, 0.3])
    assert GridSpec(3.0, 3.0, 1.0).points() == [3.0]
    with pytest.raises(BadGrid):
        GridSpec(2.0, 1.0, 0.5)
    with pytest.raises(BadGrid):
        GridSpec(1.0, 2.0, 0.0)


def test_lemma_ids_known():
    assert set(LEMMA_IDS) == {"L1", "L5", "L6", "L7", "gpos", "hpos"}
    with pytest.raises(UnknownConstant):
        check_lemma("L9")


def test_default_grids_all_clean():
    expected_rows = {
        "L1": 20 * 99,        # alpha x x grid, y folded into each row
        "L5": 49 * 500,
        "L6": 49 * 491,
        "L7": 49 * 471,
        "gpos": 49 * 491,
        "hpos": 49 * 471,
    }
    for lid in LEMMA_IDS:
        rep = check_lemma(lid)
        assert rep.passed, f"{lid} produced violations"
        assert len(rep.rows) == expected_rows[lid]
        if lid == "L1":
            # the bound is tight on the x = 1 and y = 1 edges
            assert rep.min_margin == 0.0
            assert rep.boundary_count > 0
        else:
            assert rep.min_margin > 0.0
            assert rep.boundary_count == 0


def test_l1_margin_spot_values():
    rep = check_lemma("L1", GridSpec(1.0, 1.0, 1.0), GridSpec(1.0, 1.0, 0.5),
                      GridSpec(1.0, 1.0, 0.5))
    # alpha = 1, x = y = 1: both sides are 2
    assert rep.rows == [(1.0, 1.0, 0.0, "boundary")]
    assert rep.passed


def test_l5_spot_values():
    # f(1) = sqrt(10) - sqrt(5) at alpha = 0.5, and f decreases
    f1 = (1 + 9) ** 0.5 - (1 + 4) ** 0.5
    assert f1 == pytest.approx(0.92620, abs=1e-5)
    rep = check_lemma("L5", GridSpec(0.5, 0.5, 0.1), GridSpec(1.0, 2.0, 0.01))
    assert rep.passed
    first = rep.rows[0]
    assert first[0] == 0.5 and first[1] == 1.0
    f_next = (1.01**2 + 9) ** 0.5 - (1.01**2 + 4) ** 0.5
    assert first[2] == pytest.approx(f1 - f_next, rel=1e-12)
    assert first[2] > 0


def test_gpos_spot_value():
    # at x = 1 the (x-1) terms vanish: g(1) = 4/sqrt(8) - 1/sqrt(5)
    want = 4 / math.sqrt(8) - 1 / math.sqrt(5)
    assert g_slope_bound(1.0, 0.5) == pytest.approx(want, rel=1e-12)
    assert want == pytest.approx(0.967, abs=5e-4)


def test_hpos_spot_value():
    # x = 3: (x-3) term vanishes; h(3) = 3*10^(a-1) + 6*13^(a-1) - 4*8^(a-1)
    a = 0.5
    want = 3 * 10 ** (a - 1) + 6 * 13 ** (a - 1) - 4 * 8 ** (a - 1)
    assert h_slope_bound(3.0, a) == pytest.approx(want, rel=1e-12)
    assert want > 0


def test_domain_validation():
    with pytest.raises(BadGrid):
        check_lemma("L5", x_grid=GridSpec(0.0, 5.0, 0.1))  # needs x > 0
    with pytest.raises(BadGrid):
        check_lemma("L7", x_grid=GridSpec(2.0, 5.0, 0.1))  # needs x >= 3
    with pytest.raises(BadGrid):
        check_lemma("L6", alpha_grid=GridSpec(0.5, 1.5, 0.1))  # needs alpha < 1
    with pytest.raises(BadGrid):
        check_lemma("L1", alpha_grid=GridSpec(-0.5, 1.0, 0.1))
    with pytest.raises(BadGrid):
        check_lemma("L5", y_grid=GridSpec(1.0, 2.0, 0.5))  # only L1 is 2-D


def test_constant_catalog_spot_values():
    assert get_constant("subcase22").value(0.5) == pytest.approx(-0.42809, abs=1e-5)
    assert get_constant("lemma3odd").value(0.5) == pytest.approx(-3.63616, abs=1e-5)
    with pytest.raises(UnknownConstant):
        get_constant("nope")


def test_constants_all_negative_on_unit_interval():
    for cid in CONSTANT_IDS:
        rep = check_constant(cid, alpha_max=1.0)
        assert rep.passed, f"{cid} hit a sign violation"
        assert rep.max_value < 0


def test_subcase22_range_and_root():
    rep = check_constant("subcase22")  # default range reaches 1.9
    assert rep.alpha_max == pytest.approx(1.9)
    assert rep.passed
    assert rep.root_estimate == pytest.approx(1.90056, abs=1e-3)


def test_constant_range_validation():
    with pytest.raises(BadGrid):
        check_constant("lemma3odd", alpha_max=1.5)  # only claimed on (0, 1)
    with pytest.raises(BadGrid):
        check_constant("subcase22", alpha_max=0.0)
    with pytest.raises(BadGrid):
        check_constant("subcase22", step=-1e-3)


def test_expression_rendering():
    expr = get_constant("thm1case1").expression
    assert expr == "2*8^a - 10^a - 18^a"
