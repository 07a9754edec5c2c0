"""Exact interval-union algebra against brute-force oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmgame import (
    EmptySetError,
    IntervalUnion,
    OpenInterval,
    UNIT,
    format_rational,
    parse_rational,
    simplest_rational_between,
)

from conftest import grid_points, random_dyadic_union, witness_oracle


def iv(lo, hi) -> OpenInterval:
    return OpenInterval(Fraction(lo), Fraction(hi))


def union(*pairs) -> IntervalUnion:
    return IntervalUnion(tuple(iv(lo, hi) for lo, hi in pairs))


F = Fraction


# -- normalize ---------------------------------------------------------------

def test_normalize_merges_overlapping():
    got = IntervalUnion.normalize([iv(0, F(1, 2)), iv(F(1, 4), F(3, 4))])
    assert got == union((0, F(3, 4)))


def test_normalize_empty_input():
    assert IntervalUnion.normalize([]) == IntervalUnion.empty()
    assert IntervalUnion.empty().is_empty


def test_normalize_sorts():
    got = IntervalUnion.normalize([iv(F(1, 2), 1), iv(0, F(1, 4))])
    assert got == union((0, F(1, 4)), (F(1, 2), 1))


def test_normalize_merges_abutting_raw_input():
    # (a,b) and (b,c) merge: no point was explicitly removed
    got = IntervalUnion.normalize([iv(0, F(1, 2)), iv(F(1, 2), 1)])
    assert got == UNIT


def test_subtraction_split_is_preserved_and_distinct():
    punctured = UNIT.subtract_point(F(1, 2))
    assert punctured == union((0, F(1, 2)), (F(1, 2), 1))
    assert punctured != UNIT
    assert not punctured.contains(F(1, 2))


def test_malformed_intervals_rejected():
    with pytest.raises(ValueError):
        OpenInterval(F(1, 2), F(1, 2))
    with pytest.raises(ValueError):
        OpenInterval(F(3, 4), F(1, 4))
    with pytest.raises(ValueError):
        OpenInterval(F(-1, 4), F(1, 4))
    with pytest.raises(ValueError):
        # overlapping components are not a valid normalized form
        IntervalUnion((iv(0, F(1, 2)), iv(F(1, 4), 1)))


# -- intersect -----------------------------------------------------------------

def test_intersect_single_overlap():
    got = union((0, F(1, 2))).intersect(union((F(1, 4), F(3, 4))))
    assert got == union((F(1, 4), F(1, 2)))


def test_intersect_with_empty():
    assert union((0, 1)).intersect(IntervalUnion.empty()).is_empty


def test_intersect_multi_component():
    # frozen from the dyadic grid membership oracle
    a = union((0, F(1, 4)), (F(1, 2), 1))
    b = union((F(1, 8), F(5, 8)))
    got = a.intersect(b)
    assert got == union((F(1, 8), F(1, 4)), (F(1, 2), F(5, 8)))
    assert grid_points(got) == grid_points(a) & grid_points(b)


# -- subtract_point ------------------------------------------------------------

def test_subtract_point_splits_interior():
    assert UNIT.subtract_point(F(1, 2)) == union((0, F(1, 2)), (F(1, 2), 1))


def test_subtract_point_absent_is_noop():
    a = union((0, F(1, 2)))
    assert a.subtract_point(F(3, 4)) is a


def test_subtract_point_already_excluded_endpoint():
    a = union((0, F(1, 2)), (F(1, 2), 1))
    assert a.subtract_point(F(1, 2)) == a


# -- subtract_closed -------------------------------------------------------------

def test_subtract_closed_interior():
    assert UNIT.subtract_closed(F(1, 4), F(1, 2)) == union((0, F(1, 4)), (F(1, 2), 1))


def test_subtract_closed_everything():
    assert UNIT.subtract_closed(F(0), F(1)).is_empty


def test_subtract_closed_across_components():
    # frozen from the dyadic grid membership oracle
    a = union((0, F(1, 4)), (F(1, 2), 1))
    got = a.subtract_closed(F(1, 8), F(5, 8))
    assert got == union((0, F(1, 8)), (F(5, 8), 1))
    expected = {k for k in grid_points(a) if not F(1, 8) <= F(k, 2**12) <= F(5, 8)}
    assert grid_points(got) == expected


def test_subtract_closed_degenerate_interval_acts_like_point():
    assert UNIT.subtract_closed(F(1, 3), F(1, 3)) == UNIT.subtract_point(F(1, 3))


# -- subset and closure tests -----------------------------------------------------

def test_is_subset_basic():
    assert union((F(1, 4), F(1, 2))).is_subset(UNIT)
    assert not union((0, F(1, 2))).is_subset(union((F(1, 4), F(3, 4))))


def test_is_subset_split_union_inside():
    assert union((0, F(1, 2)), (F(1, 2), 1)).is_subset(UNIT)
    # but not the other way: 1/2 is missing on the right
    assert not UNIT.is_subset(union((0, F(1, 2)), (F(1, 2), 1)))


def test_closure_subset_strictly_interior():
    assert union((F(1, 4), F(1, 2))).closure_subset(UNIT)


def test_closure_subset_shared_endpoint_fails():
    assert not union((0, F(1, 2))).closure_subset(UNIT)


def test_closure_subset_excluded_split_point_fails():
    assert not union((F(1, 4), F(1, 2))).closure_subset(
        union((0, F(1, 2)), (F(1, 2), 1))
    )


# -- measure / diameter / witness ---------------------------------------------------

def test_measure_sums_components():
    assert union((0, F(1, 2)), (F(3, 4), 1)).measure() == F(3, 4)


def test_diameter_spans_hull():
    assert union((0, F(1, 4)), (F(1, 2), 1)).diameter() == 1
    assert IntervalUnion.empty().measure() == 0
    assert IntervalUnion.empty().diameter() == 0


def test_witness_unit_interval():
    assert UNIT.witness() == F(1, 2)


def test_witness_narrow_interval():
    assert union((F(1, 3), F(2, 5))).witness() == F(3, 8)


def test_witness_of_empty_fails():
    with pytest.raises(EmptySetError, match="no witness"):
        IntervalUnion.empty().witness()


def test_witness_matches_bruteforce_oracle(rng):
    for _ in range(60):
        a, b = sorted(rng.sample(range(0, 513), 2))
        lo, hi = F(a, 512), F(b, 512)
        assert simplest_rational_between(lo, hi) == witness_oracle(lo, hi)


def test_witness_on_very_narrow_interval_terminates():
    lo = F(1, 3) + F(1, 2**80)
    hi = lo + F(1, 2**90)
    w = simplest_rational_between(lo, hi)
    assert lo < w < hi


# -- serialization -----------------------------------------------------------------

def test_rational_serialization_explicit_denominator():
    assert format_rational(F(0)) == "0/1"
    assert format_rational(F(1, 2)) == "1/2"
    assert parse_rational("7/9") == F(7, 9)
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_union_roundtrip_preserves_split_points():
    punctured = UNIT.subtract_point(F(1, 2))
    again = IntervalUnion.from_pairs(punctured.to_pairs())
    assert again == punctured
    assert again.to_pairs() == [["0/1", "1/2"], ["1/2", "1/1"]]


# -- property tests against the membership oracle ------------------------------------

dyadic_unions = st.builds(
    lambda seed: random_dyadic_union(__import__("random").Random(seed)),
    st.integers(min_value=0, max_value=2**32),
)
dyadic_points = st.integers(min_value=0, max_value=2**10).map(lambda k: F(k, 2**10))


@settings(max_examples=80, deadline=None)
@given(dyadic_unions, dyadic_unions)
def test_intersect_matches_pointwise_oracle(a, b):
    assert grid_points(a.intersect(b)) == grid_points(a) & grid_points(b)


@settings(max_examples=80, deadline=None)
@given(dyadic_unions, dyadic_points)
def test_subtract_point_matches_pointwise_oracle(a, q):
    got = grid_points(a.subtract_point(q))
    scaled = q * 2**12
    assert got == grid_points(a) - {int(scaled)}


@settings(max_examples=80, deadline=None)
@given(dyadic_unions, dyadic_points, dyadic_points)
def test_subtract_closed_matches_pointwise_oracle(a, p, q):
    lo, hi = min(p, q), max(p, q)
    got = grid_points(a.subtract_closed(lo, hi))
    assert got == {k for k in grid_points(a) if not lo <= F(k, 2**12) <= hi}


@settings(max_examples=100, deadline=None)
@given(dyadic_unions, dyadic_unions, dyadic_unions)
def test_intersect_laws(a, b, c):
    assert a.intersect(b) == b.intersect(a)
    assert a.intersect(a) == a
    assert a.intersect(b).intersect(c) == a.intersect(b.intersect(c))


@settings(max_examples=100, deadline=None)
@given(dyadic_unions, dyadic_points)
def test_subtract_point_preserves_measure(a, q):
    assert a.subtract_point(q).measure() == a.measure()


@settings(max_examples=100, deadline=None)
@given(dyadic_unions, dyadic_unions, dyadic_unions)
def test_is_subset_partial_order(a, b, c):
    assert a.is_subset(a)
    if a.is_subset(b) and b.is_subset(a):
        assert grid_points(a) == grid_points(b)
    if a.is_subset(b) and b.is_subset(c):
        assert a.is_subset(c)


@settings(max_examples=100, deadline=None)
@given(dyadic_unions, dyadic_unions)
def test_closure_subset_implies_subset(a, b):
    if a.closure_subset(b):
        assert a.is_subset(b)


@settings(max_examples=100, deadline=None)
@given(dyadic_unions)
def test_normalize_is_idempotent(a):
    renormalized = IntervalUnion.normalize(a.components)
    assert IntervalUnion.normalize(renormalized.components) == renormalized


@settings(max_examples=100, deadline=None)
@given(dyadic_unions)
def test_witness_is_deterministic_member(a):
    if a.is_empty:
        return
    w1 = a.witness()
    w2 = IntervalUnion.from_pairs(a.to_pairs()).witness()
    assert w1 == w2
    assert a.contains(w1)


@settings(max_examples=100, deadline=None)
@given(dyadic_unions)
def test_serialization_roundtrip_is_bit_exact(a):
    assert IntervalUnion.from_pairs(a.to_pairs()) == a
