"""Shared independent oracles and generators for the test suite.

The oracles here are deliberately naive (brute-force scans, grid painting)
so they stay independent of the code paths they check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import pytest

from bmgame import IntervalUnion, OpenInterval

GRID_BITS = 12
GRID = 2**GRID_BITS  # membership grid: points k / 2^12
ENDPOINT_DEN = 2**10  # random unions use dyadic endpoints p / 2^10


def farey_oracle(count: int) -> list[Fraction]:
    """Reduced fractions of (0,1) by ascending denominator, then numerator."""
    out: list[Fraction] = []
    q = 2
    while len(out) < count:
        for p in range(1, q):
            if gcd(p, q) == 1:
                out.append(Fraction(p, q))
                if len(out) == count:
                    break
        q += 1
    return out


def witness_oracle(lo: Fraction, hi: Fraction) -> Fraction:
    """Scan fractions by ascending denominator, then numerator."""
    q = 1
    while True:
        for p in range(0, q + 1):
            if gcd(p, q) == 1 and lo < Fraction(p, q) < hi:
                return Fraction(p, q)
        q += 1


def grid_points(union: IntervalUnion) -> set[int]:
    """Indices k with k/2^12 inside the union, by direct membership."""
    return {k for k in range(GRID + 1) if union.contains(Fraction(k, GRID))}


def paint(union: IntervalUnion) -> list[bool]:
    """Boolean grid of open membership; endpoints must divide the grid."""
    mask = [False] * (GRID + 1)
    for iv in union.components:
        lo = iv.lo * GRID
        hi = iv.hi * GRID
        assert lo.denominator == 1 and hi.denominator == 1, "non-dyadic endpoint"
        for k in range(int(lo) + 1, int(hi)):
            mask[k] = True
    return mask


def random_dyadic_union(rng: random.Random, max_components: int = 4) -> IntervalUnion:
    """Random normalized union with denominator-2^10 endpoints; may be empty."""
    n = rng.randint(0, max_components)
    intervals = []
    for _ in range(n):
        a, b = sorted(rng.sample(range(0, ENDPOINT_DEN + 1), 2))
        intervals.append(OpenInterval(Fraction(a, ENDPOINT_DEN), Fraction(b, ENDPOINT_DEN)))
    union = IntervalUnion.normalize(intervals)
    # sometimes split at a dyadic point so abutting components get exercised
    if union and rng.random() < 0.35:
        union = union.subtract_point(Fraction(rng.randint(1, ENDPOINT_DEN - 1), ENDPOINT_DEN))
    return union


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
