from fractions import Fraction

import pytest

from bergesat.errors import (
    OrderTooSmallError,
    ParameterRegimeError,
    TooFewVerticesError,
    UnsupportedUniformityError,
)
from bergesat.formulas import (
    Bound,
    CycleUpperFamily,
    MatchingFamily,
    StarExactFamily,
    StarUpperFamily,
    TriangleFamily,
    a_km,
    block_size,
    closed_form,
    cycle_clique_order,
    cycle_upper_keq_exact,
    h_edge_count,
    sat_path_bounds,
)

# Minimum tree edge counts, frozen. Keys are (k, m).
A_KM = {
    (3, 8): 9, (3, 9): 11, (3, 10): 15, (3, 11): 19, (3, 12): 23,
    (3, 13): 27, (3, 14): 35,
    (4, 10): 12, (4, 11): 14, (4, 12): 16, (4, 13): 20, (4, 14): 24,
    (4, 15): 28, (4, 18): 40,
    (6, 8): 9, (6, 9): 12, (6, 10): 14, (6, 11): 20, (6, 12): 24,
    (6, 13): 30, (6, 14): 34, (6, 16): 54,
    (7, 8): 9, (7, 9): 12, (7, 10): 14, (7, 11): 20, (7, 12): 24,
    (7, 13): 30, (7, 14): 34,
}


@pytest.mark.parametrize("k,m", sorted(A_KM))
def test_a_km_grid(k, m):
    assert a_km(k, m, construction_range=True) == A_KM[(k, m)]


def test_a_km_headline_values():
    assert a_km(3, 10) == 15
    assert a_km(4, 13) == 20
    assert a_km(6, 12) == 24


def test_a_km_uniformity_guard():
    with pytest.raises(UnsupportedUniformityError):
        a_km(5, 12)
    with pytest.raises(UnsupportedUniformityError):
        a_km(2, 12)


def test_a_km_order_floor():
    # proven range starts at m = 10; the construction itself reaches down
    # to m = 8 except for k = 4
    with pytest.raises(OrderTooSmallError):
        a_km(3, 9)
    assert a_km(3, 9, construction_range=True) == 11
    with pytest.raises(OrderTooSmallError):
        a_km(4, 9, construction_range=True)
    with pytest.raises(OrderTooSmallError):
        a_km(6, 7, construction_range=True)


def test_block_size():
    assert block_size(3, 10) == 31
    assert block_size(4, 12) == 49
    assert block_size(3, 8) == 19


@pytest.mark.parametrize("k,m,n,count", [
    (3, 10, 31, 15),
    (3, 10, 33, 16),
    (3, 10, 62, 30),
    (4, 12, 49, 16),
])
def test_h_edge_count(k, m, n, count):
    assert h_edge_count(k, m, n) == count


def test_h_edge_count_needs_one_block():
    with pytest.raises(TooFewVerticesError):
        h_edge_count(3, 10, 30)


@pytest.mark.parametrize("k,m,n,lo,hi", [
    (3, 10, 31, 15, 15),
    (3, 10, 62, 30, 30),
    (4, 12, 49, 16, 16),
])
def test_sat_path_bounds_tight_cases(k, m, n, lo, hi):
    b = sat_path_bounds(k, m, n)
    assert b.kind == "LowerAndUpper"
    assert (b.lower, b.upper) == (lo, hi)
    assert b.source == "path-bounds"


def test_sat_path_bounds_gap_small():
    # over a long run of n the two sides stay within 3 of each other
    for n in range(33, 533):
        b = sat_path_bounds(3, 10, n)
        assert 0 <= b.upper - b.lower <= 3
        assert b.upper == h_edge_count(3, 10, n)


def test_sat_path_bounds_domain():
    with pytest.raises(TooFewVerticesError):
        sat_path_bounds(3, 10, 30)
    with pytest.raises(OrderTooSmallError):
        sat_path_bounds(3, 9, 100)


def test_sat_path_bounds_construction_range():
    # m = 8, 9 are reachable with the same flag a_km takes
    b = sat_path_bounds(3, 8, 24, construction_range=True)
    assert b.lower <= b.upper <= b.lower + 3
    assert b.upper == h_edge_count(3, 8, 24)
    # the flag changes nothing once the proven range starts
    assert sat_path_bounds(3, 10, 40, construction_range=True) == sat_path_bounds(3, 10, 40)


def test_closed_form_matching():
    b = closed_form(MatchingFamily(3), 3, 9)
    assert b.kind == "Exact" and b.value == 2
    assert b.source == "matching-exact"
    assert closed_form(MatchingFamily(1), 3, 5).value == 0
    with pytest.raises(ParameterRegimeError):
        closed_form(MatchingFamily(0), 3, 9)
    with pytest.raises(TooFewVerticesError):
        closed_form(MatchingFamily(4), 3, 8)


def test_closed_form_triangle():
    b = closed_form(TriangleFamily(), 3, 8)
    assert b.kind == "Exact" and b.value == 4
    assert b.source == "triangle-exact"
    # ceil((n-1)/(k-1)) across a small sweep
    assert [closed_form(TriangleFamily(), 3, n).value for n in range(4, 10)] \
        == [2, 2, 3, 3, 4, 4]
    with pytest.raises(TooFewVerticesError):
        closed_form(TriangleFamily(), 3, 3)


def test_closed_form_star_exact():
    b = closed_form(StarExactFamily(), 3, 9)
    assert b.kind == "Exact" and b.value == 7
    assert b.source == "star-exact"
    assert closed_form(StarExactFamily(), 4, 16).value == 13
    with pytest.raises(TooFewVerticesError):
        closed_form(StarExactFamily(), 3, 8)


def test_closed_form_star_upper():
    b = closed_form(StarUpperFamily(4), 3, 12)
    assert b.kind == "UpperOnly"
    assert b.lower is None and b.upper == 12
    assert b.source == "star-clique-upper"
    assert closed_form(StarUpperFamily(4), 3, 14).upper == 16
    with pytest.raises(ParameterRegimeError):
        closed_form(StarUpperFamily(3), 3, 12)


def test_closed_form_cycle_small_k():
    b = closed_form(CycleUpperFamily(6), 3, 17)
    assert b.kind == "UpperOnly" and b.upper == 26
    assert b.source == "cycle-clique-upper"
    assert closed_form(CycleUpperFamily(8), 3, 25).upper == 60
    with pytest.raises(TooFewVerticesError):
        closed_form(CycleUpperFamily(6), 3, 15)


def test_closed_form_cycle_book():
    b = closed_form(CycleUpperFamily(4), 3, 7)
    assert b.kind == "UpperOnly" and b.upper == 5
    assert b.source == "cycle-book-upper"
    with pytest.raises(TooFewVerticesError):
        closed_form(CycleUpperFamily(4), 3, 6)
    with pytest.raises(ParameterRegimeError):
        closed_form(CycleUpperFamily(3), 3, 100)


def test_closed_form_cycle_keq():
    b = closed_form(CycleUpperFamily(5), 3, 26)
    assert b.kind == "UpperOnly" and b.upper == 33
    assert b.source == "cycle-clique-upper-keq"
    assert closed_form(CycleUpperFamily(5), 3, 25).upper == 32


def test_cycle_upper_keq_exact_rational():
    assert cycle_upper_keq_exact(5, 25) == 32
    assert cycle_upper_keq_exact(5, 26) == 33
    # the unrounded remainder term shows up when k - 2 > 1
    exact = cycle_upper_keq_exact(6, 36)
    assert exact == Fraction(83, 2)
    rounded = closed_form(CycleUpperFamily(6), 4, 36)
    assert rounded.upper == 42
    assert rounded.upper >= exact
    with pytest.raises(ParameterRegimeError):
        cycle_upper_keq_exact(4, 100)
    with pytest.raises(TooFewVerticesError):
        cycle_upper_keq_exact(5, 24)


def test_cycle_clique_order():
    assert cycle_clique_order(3, 6) == 4
    assert cycle_clique_order(3, 8) == 5
    assert cycle_clique_order(4, 7) == 5
    # never below k + 1
    assert cycle_clique_order(6, 9) == 7


def test_closed_form_rejects_small_k():
    with pytest.raises(ParameterRegimeError):
        closed_form(TriangleFamily(), 2, 10)


def test_closed_form_rejects_unknown_family():
    with pytest.raises(TypeError):
        closed_form(object(), 3, 10)


def test_bound_validation():
    with pytest.raises(ValueError):
        Bound("Exact", 3, 4, "x")
    with pytest.raises(ValueError):
        Bound("LowerAndUpper", None, 4, "x")
    with pytest.raises(ValueError):
        Bound("UpperOnly", 1, 4, "x")
    with pytest.raises(ValueError):
        Bound("UpperOnly", None, -1, "x")
    with pytest.raises(ValueError):
        Bound("LowerAndUpper", 5, 4, "x")
    with pytest.raises(ValueError):
        Bound("Approximate", 4, 4, "x")
    b = Bound("LowerAndUpper", 3, 4, "x")
    with pytest.raises(ValueError):
        b.value
