"""Game boards and exact topology tests.

Two ambient spaces are playable: the real unit interval (0,1), which is a
Baire space, and its rational trace Q ∩ (0,1), which is countable, has no
isolated points, and is meagre in itself.  Moves are open sets represented
as :class:`~bmgame.intervals.IntervalUnion`, interpreted as traces on the
chosen board.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable

from .intervals import UNIT, IntervalUnion, Rational


class AmbientSpace(Enum):
    """The board a game is played on."""

    REAL = "real"
    RATIONAL = "rational"

    @classmethod
    def parse(cls, text: str) -> "AmbientSpace":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown space {text!r}; expected 'real' or 'rational'")


@dataclass(frozen=True)
class Region:
    """An open set interpreted on an ambient board.

    Every nonempty open rational interval contains both rationals and
    irrationals, so a region is nonempty iff its interval union is.
    """

    space: AmbientSpace
    set: IntervalUnion

    @property
    def is_empty(self) -> bool:
        return self.set.is_empty

    def to_json(self) -> dict:
        return {"space": self.space.value, "set": self.set.to_pairs()}

    @classmethod
    def from_json(cls, data: dict) -> "Region":
        return cls(AmbientSpace.parse(data["space"]), IntervalUnion.from_pairs(data["set"]))


# -- rational enumeration ---------------------------------------------------

_farey_lock = threading.Lock()
_farey_cache: list[Fraction] = []
_farey_next_den = 2


def enumerate_rational(n: int) -> Fraction:
    """The n-th rational of (0,1) in Farey order (n >= 1).

    Reduced fractions are listed by ascending denominator, then ascending
    numerator: 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...  The listing is a bijection
    onto Q ∩ (0,1).  Results are memoized; behavior is identical to
    recomputation.
    """
    if n < 1:
        raise ValueError(f"enumeration index must be >= 1, got {n}")
    global _farey_next_den
    if len(_farey_cache) < n:
        with _farey_lock:
            while len(_farey_cache) < n:
                q = _farey_next_den
                _farey_cache.extend(
                    Fraction(p, q) for p in range(1, q) if gcd(p, q) == 1
                )
                _farey_next_den += 1
    return _farey_cache[n - 1]


@dataclass(frozen=True)
class MeagreCover:
    """A countable cover of the rational board by singletons.

    The enumeration must be injective and surjective onto Q ∩ (0,1); each
    singleton is nowhere dense there because the space has no isolated
    points.  The canonical cover is the Farey enumeration.
    """

    name: str
    enumeration: Callable[[int], Fraction]


def farey_cover() -> MeagreCover:
    return MeagreCover(name="farey", enumeration=enumerate_rational)


@dataclass(frozen=True)
class DenseOpenFamily:
    """A stage-indexed family n >= 1 of dense open sets.

    Each generated set must be (0,1) minus finitely many points, so it is
    open and dense on the real board, and removing it from a nonempty open
    set can never empty it.
    """

    name: str
    generator: Callable[[int], IntervalUnion]

    def __call__(self, n: int) -> IntervalUnion:
        return self.generator(n)


def cofinite_dense_open(points: Iterable[Rational]) -> IntervalUnion:
    """(0,1) with every listed point removed; open and dense on the real board."""
    out = UNIT
    for q in points:
        out = out.subtract_point(Fraction(q))
    return out


def farey_family(per_stage: int = 1) -> DenseOpenFamily:
    """Family whose stage n removes the first ``n * per_stage`` enumerated rationals."""
    if per_stage < 1:
        raise ValueError("per_stage must be >= 1")

    def generate(n: int) -> IntervalUnion:
        if n < 1:
            raise ValueError("family stage must be >= 1")
        return cofinite_dense_open(
            enumerate_rational(i) for i in range(1, n * per_stage + 1)
        )

    return DenseOpenFamily(name=f"farey-cofinite:{per_stage}", generator=generate)


def constant_family(value: IntervalUnion = UNIT) -> DenseOpenFamily:
    return DenseOpenFamily(name="constant", generator=lambda n: value)


# -- exact density tests ------------------------------------------------------

def is_dense(a: IntervalUnion, space: AmbientSpace) -> bool:
    """Exact density of a representable open set on either board.

    The closure equals the whole space iff every gap (between consecutive
    components and at both ends of the unit hull) has zero length.  The test
    is the same on both boards: a positive-length gap misses rationals too.
    """
    if a.is_empty:
        return False
    comps = a.components
    if comps[0].lo != 0 or comps[-1].hi != 1:
        return False
    return all(prev.hi == cur.lo for prev, cur in zip(comps, comps[1:]))


def is_nowhere_dense(
    descriptor: IntervalUnion | Iterable[Rational], space: AmbientSpace
) -> bool:
    """Nowhere-density for the two descriptor shapes the engine manipulates.

    A finite point set (possibly empty) is nowhere dense on both boards.  An
    interval union is open, hence its own interior: nowhere dense iff empty.
    """
    if isinstance(descriptor, IntervalUnion):
        return descriptor.is_empty
    list(descriptor)  # force: the descriptor must be finite
    return True
