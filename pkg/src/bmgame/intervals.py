"""Exact open-set algebra on the unit interval.

Every endpoint is an arbitrary-precision rational (``fractions.Fraction``);
there is no floating point anywhere, so subset tests, closure containment
and measure are decided exactly.

Open sets are finite unions of bounded open intervals inside (0, 1).  The
representation distinguishes a genuinely removed point from a merged gap:
``{(0,1/2), (1/2,1)}`` is a valid normalized union, distinct from
``{(0,1)}``.  Point-abutting components are only ever produced by the
subtraction operations; :meth:`IntervalUnion.normalize` of raw input merges
abutting intervals, because no point was explicitly removed there.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class EmptySetError(ValueError):
    """An operation required a nonempty set (e.g. a witness of the empty union)."""


def format_rational(value: Fraction) -> str:
    """Render ``p/q`` with an explicit denominator, e.g. ``0/1`` or ``1/2``."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` (or a bare integer) into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True, order=True)
class OpenInterval:
    """A bounded open interval (lo, hi) with 0 <= lo < hi <= 1."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(f"malformed interval: lo={self.lo} >= hi={self.hi}")
        if self.lo < ZERO or self.hi > ONE:
            raise ValueError(f"interval ({self.lo}, {self.hi}) leaves the unit hull")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, q: Fraction) -> bool:
        return self.lo < q < self.hi

    def to_pair(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi)]

    @classmethod
    def from_pair(cls, pair: Sequence[str]) -> "OpenInterval":
        if len(pair) != 2:
            raise ValueError(f"interval pair must have two entries, got {pair!r}")
        return cls(parse_rational(pair[0]), parse_rational(pair[1]))

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


@dataclass(frozen=True)
class IntervalUnion:
    """Normalized finite union of open intervals.

    Invariants: components sorted by ``lo``, strictly ascending, with
    ``prev.hi <= next.lo``.  Equal endpoints (``prev.hi == next.lo``) mark an
    excluded point and are preserved.  The empty tuple is the unique
    representation of the empty set.
    """

    components: tuple[OpenInterval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        for prev, cur in zip(self.components, self.components[1:]):
            if prev.hi > cur.lo:
                raise ValueError(
                    f"components overlap or are unsorted: {prev} then {cur}"
                )

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return _EMPTY

    @classmethod
    def of(cls, *intervals: OpenInterval) -> "IntervalUnion":
        return cls.normalize(intervals)

    @classmethod
    def normalize(cls, intervals: Iterable[OpenInterval]) -> "IntervalUnion":
        """Canonicalize raw intervals, merging overlapping and abutting ones.

        ``(a,b)`` and ``(b,c)`` merge to ``(a,c)`` here: no point was
        explicitly removed.  Use :meth:`subtract_point` to split off a point.
        """
        items = sorted(intervals, key=lambda iv: (iv.lo, iv.hi))
        merged: list[OpenInterval] = []
        for iv in items:
            if merged and iv.lo <= merged[-1].hi:
                if iv.hi > merged[-1].hi:
                    merged[-1] = OpenInterval(merged[-1].lo, iv.hi)
            else:
                merged.append(iv)
        return cls(tuple(merged))

    # -- basic queries ----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.components

    def __bool__(self) -> bool:
        return bool(self.components)

    def __iter__(self) -> Iterator[OpenInterval]:
        return iter(self.components)

    def contains(self, q: Fraction) -> bool:
        """Exact membership of a rational point."""
        idx = bisect_right(self.components, q, key=lambda iv: iv.lo)
        return idx > 0 and self.components[idx - 1].contains(q)

    def __contains__(self, q: Fraction) -> bool:
        return self.contains(q)

    def measure(self) -> Fraction:
        return sum((iv.length for iv in self.components), ZERO)

    def diameter(self) -> Fraction:
        """Spread from the leftmost to the rightmost endpoint; 0 for the empty set."""
        if self.is_empty:
            return ZERO
        return self.components[-1].hi - self.components[0].lo

    def hull(self) -> OpenInterval:
        if self.is_empty:
            raise EmptySetError("empty union has no hull")
        return OpenInterval(self.components[0].lo, self.components[-1].hi)

    # -- set algebra --------------------------------------------------------

    def intersect(self, other: "IntervalUnion") -> "IntervalUnion":
        out: list[OpenInterval] = []
        a, b = self.components, other.components
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i].lo, b[j].lo)
            hi = min(a[i].hi, b[j].hi)
            if lo < hi:
                out.append(OpenInterval(lo, hi))
            # advance whichever component ends first; on a tie, both
            if a[i].hi == b[j].hi:
                i += 1
                j += 1
            elif a[i].hi < b[j].hi:
                i += 1
            else:
                j += 1
        return IntervalUnion(tuple(out))

    def subtract_point(self, q: Fraction) -> "IntervalUnion":
        """Remove a single point, splitting the component that contains it.

        Measure is preserved exactly; a point on a gap or endpoint is a no-op.
        """
        idx = bisect_right(self.components, q, key=lambda iv: iv.lo)
        if idx == 0 or not self.components[idx - 1].contains(q):
            return self
        hit = self.components[idx - 1]
        split = (OpenInterval(hit.lo, q), OpenInterval(q, hit.hi))
        return IntervalUnion(
            self.components[: idx - 1] + split + self.components[idx:]
        )

    def subtract_closed(self, lo: Fraction, hi: Fraction) -> "IntervalUnion":
        """Remove the closed interval [lo, hi]; the result is open again."""
        if lo > hi:
            raise ValueError(f"degenerate closed interval: [{lo}, {hi}]")
        out: list[OpenInterval] = []
        for iv in self.components:
            if iv.hi <= lo or hi <= iv.lo:
                out.append(iv)
                continue
            if iv.lo < lo:
                out.append(OpenInterval(iv.lo, lo))
            if hi < iv.hi:
                out.append(OpenInterval(hi, iv.hi))
        return IntervalUnion(tuple(out))

    def is_subset(self, other: "IntervalUnion") -> bool:
        """True iff every point of self lies in other."""
        for iv in self.components:
            idx = bisect_right(other.components, iv.lo, key=lambda o: o.lo)
            if idx == 0 or other.components[idx - 1].hi < iv.hi:
                return False
        return True

    def closure_subset(self, other: "IntervalUnion") -> bool:
        """True iff the closure of self (endpoints added per component) lies in other."""
        for iv in self.components:
            idx = bisect_right(other.components, iv.lo, key=lambda o: o.lo)
            # need a component (c, d) with c < lo and hi < d
            cand = None
            if idx > 0 and other.components[idx - 1].lo < iv.lo:
                cand = other.components[idx - 1]
            if cand is None or not iv.hi < cand.hi:
                return False
        return True

    def witness(self) -> Fraction:
        """Deterministic point of a nonempty union: the smallest-denominator
        rational in the leftmost component, ties broken by smallest numerator."""
        if self.is_empty:
            raise EmptySetError("no witness in empty set")
        first = self.components[0]
        return simplest_rational_between(first.lo, first.hi)

    # -- serialization ------------------------------------------------------

    def to_pairs(self) -> list[list[str]]:
        return [iv.to_pair() for iv in self.components]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[str]]) -> "IntervalUnion":
        # no merging: round-trips must be bit-exact, including split points
        return cls(tuple(OpenInterval.from_pair(p) for p in pairs))

    def __str__(self) -> str:
        if self.is_empty:
            return "{}"
        return "{" + ", ".join(str(iv) for iv in self.components) + "}"


_EMPTY = IntervalUnion(())

#: The whole board (0, 1); the fixed ambient hull of every representable set.
UNIT = IntervalUnion((OpenInterval(ZERO, ONE),))


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The fraction of smallest denominator (then smallest numerator) in (lo, hi).

    Walks the continued-fraction expansion of the bounds, so it stays fast
    even when the interval is astronomically narrow.  The result is the first
    Stern-Brocot tree node falling inside the interval, which minimizes
    numerator and denominator simultaneously.
    """
    if not ZERO <= lo < hi:
        raise ValueError(f"need 0 <= lo < hi, got ({lo}, {hi})")
    integer_parts: list[Fraction] = []
    tail: Fraction
    while True:
        n = lo.numerator // lo.denominator
        if n + 1 < hi:
            tail = Fraction(n + 1)
            break
        frac = lo - n
        if frac == 0:
            # interval is (n, hi) with hi <= n + 1: candidates are n + 1/k
            inv = ONE / (hi - n)
            k = inv.numerator // inv.denominator + 1
            tail = n + Fraction(1, k)
            break
        integer_parts.append(Fraction(n))
        lo, hi = ONE / (hi - n), ONE / frac
    value = tail
    while integer_parts:
        value = integer_parts.pop() + 1 / value
    return value
