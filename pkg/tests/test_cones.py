from fractions import Fraction

import numpy as np
import pytest

from lattice_triangles.cones import (
    LinePoint,
    apex,
    cone_boundary_lines,
    cone_classify,
    cone_closure_contains,
    cone_contains,
    cone_points,
    lower_line_twice,
    max_cone_index,
    polygon_set_contains,
    scott_holds,
    upper_line_twice,
)
from lattice_triangles.core import BiPair, LatticeTriangle, brute_force_bi


def in_cone_rational(c, b, i):
    """Direct reading of the cone definition with rationals."""
    lo = Fraction(c - 1, 2) * b - (c - 1)
    hi = Fraction(c, 2) * b - c * (c + 2)
    return b >= 0 and i >= 0 and lo < i < hi


@pytest.mark.parametrize("c, pair, expected", [(1, (9, 1), True), (2, (14, 6), False), (2, (20, 10), True)])
def test_cone_contains_examples(c, pair, expected):
    assert cone_contains(c, pair) is expected
    assert in_cone_rational(c, *pair) is expected


def test_cone_contains_matches_rational_definition():
    for c in range(1, 6):
        for b in range(0, 120):
            for i in range(0, 200):
                assert cone_contains(c, (b, i)) == in_cone_rational(c, b, i)


@pytest.mark.parametrize("pair, expected", [((9, 1), 1), ((3, 0), None), ((20, 10), 2)])
def test_cone_classify_examples(pair, expected):
    assert cone_classify(pair) == expected


def test_no_cone_beyond_classify_bound():
    # for c above the search bound the open interval of admissible i is empty
    for b in range(0, 401):
        for c in range(max_cone_index(b) + 1, 201):
            lo = Fraction(c - 1, 2) * b - (c - 1)
            hi = Fraction(c, 2) * b - c * (c + 2)
            assert lo >= hi


def test_cone_classify_agrees_with_full_loop():
    bs, is_ = np.meshgrid(np.arange(401), np.arange(2700), indexing="ij")
    expected = np.zeros(bs.shape, dtype=np.int64)
    for c in range(1, 201):
        inside = ((c - 1) * bs - 2 * (c - 1) < 2 * is_) & (2 * is_ < c * bs - 2 * c * (c + 2))
        assert not np.any(inside & (expected > 0))
        expected[inside] = c
    for b in range(401):
        row = expected[b]
        for i in range(2700):
            assert (cone_classify((b, i)) or 0) == row[i]


def test_closures_pairwise_disjoint():
    for b in range(0, 401):
        for c in range(1, 13):
            lo, hi = lower_line_twice(c, b), upper_line_twice(c, b)
            if lo > hi:
                continue
            for i in range(max(-(-lo // 2), 0), hi // 2 + 1):
                others = [d for d in range(1, 13) if d != c and cone_closure_contains(d, (b, i))]
                assert others == [], (b, i, c, others)


@pytest.mark.parametrize("c, expected", [(1, (6, 0)), (2, (14, 6)), (3, (26, 24))])
def test_apex_examples(c, expected):
    assert tuple(apex(c)) == expected


def test_apex_cross_checked_by_scan():
    assert brute_force_bi(LatticeTriangle.from_coords((0, 0), (4, 0), (1, 1))) == apex(1)
    assert brute_force_bi(LatticeTriangle.from_coords((0, 0), (12, 0), (1, 2))) == apex(2)


def test_apex_on_both_lines():
    for c in range(1, 60):
        b, i = apex(c)
        assert lower_line_twice(c, b) == 2 * i == upper_line_twice(c, b)
        assert not cone_contains(c, (b, i))
        assert cone_closure_contains(c, (b, i))


def test_apex_rejects_bad_index():
    with pytest.raises(ValueError):
        apex(0)


@pytest.mark.parametrize("pair, expected", [((9, 1), True), ((12, 3), True), ((10, 1), False), ((50, 0), True)])
def test_scott_holds_examples(pair, expected):
    assert scott_holds(BiPair(*pair)) is expected


def test_scott_is_cone_one():
    for b in range(3, 401):
        for i in range(1, 250):
            expected = not (cone_contains(1, (b, i)) and (b, i) != (9, 1))
            assert scott_holds((b, i)) is expected


@pytest.mark.parametrize("pair, expected", [
    ((3, 0), True), ((9, 1), True), ((20, 10), True), ((10, 1), False), ((2, 0), False), ((2, 5), False),
])
def test_polygon_set_contains(pair, expected):
    assert polygon_set_contains(pair) is expected


def test_small_b_outside_everything():
    for b in range(-2, 3):
        for i in range(0, 10):
            assert not polygon_set_contains((b, i))
            assert cone_classify((b, i)) is None


def test_boundary_lines_examples():
    lower, upper = cone_boundary_lines(1, 10)
    assert (lower.start, lower.end) == (LinePoint(6, 0), LinePoint(10, 0))
    assert (upper.start, upper.end) == (LinePoint(6, 0), LinePoint(10, 4))
    assert upper.end.i == 2

    lower, upper = cone_boundary_lines(2, 14)
    assert lower.start == lower.end == upper.start == upper.end == LinePoint(14, 12)

    lower, upper = cone_boundary_lines(2, 30)
    assert (lower.end.b, lower.end.i) == (30, 14)
    assert (upper.end.b, upper.end.i) == (30, 22)


def test_boundary_lines_empty_left_of_apex():
    assert cone_boundary_lines(2, 13) == ()


def test_boundary_lines_half_integer_endpoint():
    lower, _ = cone_boundary_lines(2, 15)
    assert lower.end.i == Fraction(13, 2)


def test_cone_points_match_definition():
    for c in range(1, 5):
        got = set(cone_points(c, 80))
        want = {(b, i) for b in range(81) for i in range(400) if in_cone_rational(c, b, i)}
        assert got == want
