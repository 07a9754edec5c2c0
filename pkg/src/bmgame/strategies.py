"""Strategies and constructive procedures for the interval game.

A strategy maps the play so far to the next region.  Because the players
strictly alternate, a strategy about to move has made exactly
``len(history) // 2`` moves already, regardless of which seat it occupies;
its own 1-based move counter is therefore derivable from the history alone
and the same strategy object can play either seat.

The implemented strategies realize the classical arguments at finite depth:

* ``alice_exclusion``: removes the n-th enumerated rational on her n-th
  turn.  On the rational board every point of the (countable) space is
  eventually excluded, so the intersection of an infinite play is empty.
* ``bob_shrink``: replies with a short interval whose closure sits strictly
  inside the opponent's region, with geometrically decaying diameter.  On
  the real board, completeness then pins a limit point inside every move,
  which is exactly how the exclusion strategy fails to win there.
* ``bob_dense_chaser``: shrinks inside the intersection with a stage-indexed
  dense open set, the move pattern of the nested-ball density construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .intervals import (
    UNIT,
    EmptySetError,
    IntervalUnion,
    OpenInterval,
    format_rational,
)
from .referee import (
    Certificate,
    CertificateKind,
    Ruleset,
    Transcript,
    Violation,
    new_game,
)
from .spaces import (
    AmbientSpace,
    DenseOpenFamily,
    MeagreCover,
    Region,
    farey_cover,
    farey_family,
)

History = Sequence[Region]
NextMove = Callable[[AmbientSpace, History], Region]


@dataclass(frozen=True)
class Strategy:
    """A deterministic move rule: (seed, board, play so far) -> next region."""

    name: str
    next: NextMove
    seed: int = 0

    def __call__(self, space: AmbientSpace, history: History) -> Region:
        return self.next(space, history)


class StrategyFault(RuntimeError):
    """A strategy produced an illegal move; names the offender and the stage."""

    def __init__(self, strategy: str, stage: int, violation: Violation):
        super().__init__(
            f"strategy {strategy!r} played an illegal move at stage {stage}: "
            f"{violation.kind.value} ({violation.reason})"
        )
        self.strategy = strategy
        self.stage = stage
        self.violation = violation


def _own_turn(history: History) -> int:
    # strict alternation: the mover has len(history) // 2 moves behind it
    return len(history) // 2 + 1


def _base_set(history: History) -> IntervalUnion:
    return history[-1].set if history else UNIT


def shrink_select(candidates: IntervalUnion, turn: int) -> OpenInterval:
    """The shrink rule: centered subinterval of the longest component.

    Picks the longest component (leftmost on ties), centers on its midpoint,
    and uses radius min(L/8, 2^-(turn+2)).  The closure of the output is
    strictly inside the chosen component, and its diameter is at most
    2^-(turn+1).
    """
    if candidates.is_empty:
        raise EmptySetError("cannot shrink inside an empty set")
    best = candidates.components[0]
    for iv in candidates.components[1:]:
        if iv.length > best.length:  # strictly longer only: leftmost wins ties
            best = iv
    radius = min(best.length / 8, Fraction(1, 2 ** (turn + 2)))
    center = best.midpoint
    return OpenInterval(center - radius, center + radius)


def alice_exclusion(cover: MeagreCover | None = None) -> Strategy:
    """Exclude the n-th enumerated rational on the n-th turn.

    Intended as the second mover on the rational board.  Removing one point
    from a nonempty open set leaves it nonempty and open, so the move is
    always legal; the excluded point can never reappear in later moves.
    """
    cover = cover or farey_cover()

    def next_move(space: AmbientSpace, history: History) -> Region:
        turn = _own_turn(history)
        base = _base_set(history)
        return Region(space, base.subtract_point(cover.enumeration(turn)))

    return Strategy(name="alice-exclusion", next=next_move)


def bob_shrink() -> Strategy:
    """Centered geometric shrinking inside the opponent's region."""

    def next_move(space: AmbientSpace, history: History) -> Region:
        turn = _own_turn(history)
        pick = shrink_select(_base_set(history), turn)
        return Region(space, IntervalUnion((pick,)))

    return Strategy(name="bob-shrink", next=next_move)


def bob_dense_chaser(family: DenseOpenFamily | None = None) -> Strategy:
    """Shrink inside the opponent's region intersected with family(n).

    The family's sets are (0,1) minus finitely many points, so the
    intersection is never empty and the closure of the output lies inside
    it: each move of an infinite play would land inside one more dense open
    set, the move pattern that witnesses the intersection of countably many
    dense open sets being dense.
    """
    family = family or farey_family()

    def next_move(space: AmbientSpace, history: History) -> Region:
        turn = _own_turn(history)
        window = _base_set(history).intersect(family(turn))
        if window.is_empty:
            raise EmptySetError(
                f"family stage {turn} removed all of the opponent's region"
            )
        pick = shrink_select(window, turn)
        return Region(space, IntervalUnion((pick,)))

    return Strategy(name="bob-dense-chaser", next=next_move)


def random_strategy(seed: int) -> Strategy:
    """Fuzz opponent: a random rational subinterval of the middle half.

    Deterministic in (seed, history).  Staying inside the middle half of a
    component keeps the closure of the move strictly inside the previous
    region, so the move is always legal on any board.
    """

    def next_move(space: AmbientSpace, history: History) -> Region:
        turn = _own_turn(history)
        base = _base_set(history)
        key = f"random:{seed}:{turn}:{base.to_pairs()}"
        rng = random.Random(key)
        comp = base.components[rng.randrange(len(base.components))]
        quarter = comp.length / 4
        mid_lo = comp.lo + quarter
        span = comp.length / 2
        i, j = sorted(rng.sample(range(1, 256), 2))
        lo = mid_lo + span * Fraction(i, 256)
        hi = mid_lo + span * Fraction(j, 256)
        return Region(space, IntervalUnion((OpenInterval(lo, hi),)))

    return Strategy(name=f"random:{seed}", next=next_move, seed=seed)


def strategy_from_id(text: str) -> Strategy:
    """Resolve the CLI/service strategy ids."""
    if text == "alice-exclusion":
        return alice_exclusion()
    if text == "bob-shrink":
        return bob_shrink()
    if text == "bob-dense-chaser":
        return bob_dense_chaser()
    if text.startswith("random:"):
        try:
            return random_strategy(int(text.split(":", 1)[1]))
        except ValueError:
            raise ValueError(f"bad random seed in strategy id {text!r}")
    raise ValueError(f"unknown strategy id {text!r}")


def run_match(first: Strategy, second: Strategy, ruleset: Ruleset) -> Transcript:
    """Play max_depth full rounds through the referee."""
    transcript = new_game(ruleset)
    seats = (first, second)
    while not transcript.is_complete:
        mover = seats[len(transcript.moves) % 2]
        history = [m.region for m in transcript.moves]
        region = mover(ruleset.space, history)
        violation = transcript.legal_move(region)
        if violation is not None:
            raise StrategyFault(mover.name, len(transcript.moves), violation)
        transcript = transcript.apply(region)
    return transcript


# -- nested-ball construction -------------------------------------------------

def baire_point(
    family: DenseOpenFamily, x: Fraction, eps: Fraction, depth: int
) -> tuple[OpenInterval, Certificate]:
    """Drive the nested shrinking-ball construction for ``depth`` stages.

    Starting from B(x; eps) ∩ (0,1), stage n shrinks inside the current
    interval intersected with family(n).  The final interval I satisfies,
    exactly: closure(I) ⊆ family(n) for every n <= depth, closure(I) ⊆
    B(x; eps), and diameter(I) <= 2^-depth.  By completeness of the real
    board the point common to all stages lies in closure(I), so I
    approximates it with error bound diameter(I).
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if eps <= 0:
        raise ValueError("radius must be positive")
    lo = max(Fraction(0), x - eps)
    hi = min(Fraction(1), x + eps)
    if not lo < hi:
        raise ValueError(f"ball B({x}; {eps}) misses the unit interval")
    ball = IntervalUnion((OpenInterval(lo, hi),))
    chain = [ball.hull()]
    current = ball
    for n in range(1, depth + 1):
        window = current.intersect(family(n))
        pick = shrink_select(window, n)
        chain.append(pick)
        current = IntervalUnion((pick,))
    final = chain[-1]
    certificate = Certificate(
        kind=CertificateKind.LOCALIZATION,
        verified_depth=depth,
        payload={
            "interval": final.to_pair(),
            "error_bound": format_rational(final.length),
            "closure_stages": list(range(1, depth + 1)),
            "decay_stages": [
                n for n in range(1, depth + 1)
                if chain[n].length <= Fraction(1, 2**n)
            ],
            "stages": [iv.to_pair() for iv in chain],
        },
    )
    return final, certificate


# -- disjoint refinement ------------------------------------------------------

RefinementMap = Callable[[IntervalUnion], IntervalUnion]


@dataclass(frozen=True)
class RefinementFamily:
    """A greedy finite realization of a disjoint dense refinement.

    ``pairs`` holds (input, output) with output = f(input) ⊆ input ⊆ base;
    outputs are pairwise disjoint and their closures leave no uncovered gap
    of length >= residual_resolution inside the base.
    """

    base: IntervalUnion
    pairs: tuple[tuple[IntervalUnion, IntervalUnion], ...]
    residual_resolution: Fraction

    def residual(self) -> IntervalUnion:
        """base minus the closures of all outputs; every component is short."""
        left = self.base
        for _, out in self.pairs:
            for iv in out.components:
                left = left.subtract_closed(iv.lo, iv.hi)
        return left

    def to_json(self) -> dict:
        return {
            "base": self.base.to_pairs(),
            "residual_resolution": format_rational(self.residual_resolution),
            "pairs": [
                {"input": v.to_pairs(), "output": fv.to_pairs()}
                for v, fv in self.pairs
            ],
        }


class CapExceeded(RuntimeError):
    """The refinement loop hit its iteration cap before reaching eps-density."""

    def __init__(self, partial: RefinementFamily, achieved: Fraction, history: tuple = ()):
        super().__init__(
            f"refinement cap exceeded; coarsest uncovered gap is {achieved} "
            f"(target < {partial.residual_resolution})"
        )
        self.partial = partial
        self.achieved = achieved
        self.history = history


def disjoint_refinement(
    base: IntervalUnion,
    f: RefinementMap,
    eps: Fraction,
    cap: int,
) -> RefinementFamily:
    """Greedy sweep: repeatedly apply f to the leftmost coarse uncovered gap.

    Maintains ``uncovered = base minus the closures of all chosen outputs``
    and stops when every uncovered component is shorter than eps.  The cap
    turns a too-fast-shrinking f into an explicit error instead of a stall.
    """
    if base.is_empty:
        raise EmptySetError("cannot refine an empty set")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    uncovered = base
    pairs: list[tuple[IntervalUnion, IntervalUnion]] = []
    iterations = 0
    while True:
        coarse = [iv for iv in uncovered.components if iv.length >= eps]
        if not coarse:
            return RefinementFamily(base, tuple(pairs), eps)
        if iterations >= cap:
            partial = RefinementFamily(base, tuple(pairs), eps)
            achieved = max(iv.length for iv in uncovered.components)
            raise CapExceeded(partial, achieved)
        chosen = IntervalUnion((coarse[0],))
        image = f(chosen)
        if image.is_empty or not image.is_subset(chosen):
            raise ValueError(
                f"refinement map must send a set into a nonempty subset of itself; "
                f"got {image} from {chosen}"
            )
        pairs.append((chosen, image))
        for iv in image.components:
            uncovered = uncovered.subtract_closed(iv.lo, iv.hi)
        iterations += 1


def left_third_map(region: IntervalUnion) -> IntervalUnion:
    """The left third of the region's leftmost component; a simple test map."""
    if region.is_empty:
        raise EmptySetError("left_third_map needs a nonempty set")
    first = region.components[0]
    return IntervalUnion((OpenInterval(first.lo, first.lo + first.length / 3),))


# -- strategy refinement tree -------------------------------------------------

@dataclass(frozen=True)
class RefinementNode:
    """One refinement family together with the play prefix that produced it.

    ``history`` is the alternating play leading into this node's base: the
    strategy's own moves interleaved with the probed opponent moves.
    """

    history: tuple[IntervalUnion, ...]
    family: RefinementFamily


@dataclass(frozen=True)
class RefinementTree:
    """Layered refinement families demonstrating that a first-mover strategy
    cannot control a Baire board.

    Layer n refines every output of layer n-1 using the strategy's own
    replies, so the union over each layer stays dense (up to the finite
    resolution) in the strategy's opening move, and every root-to-leaf chain
    is itself a legal play consistent with the strategy.
    """

    opening: IntervalUnion
    layers: tuple[tuple[RefinementNode, ...], ...]

    def layer_outputs(self, depth: int) -> list[IntervalUnion]:
        return [out for node in self.layers[depth] for _, out in node.family.pairs]

    def layer_gaps(self, depth: int) -> IntervalUnion:
        """The opening move minus the closures of layer ``depth``'s outputs."""
        left = self.opening
        for out in self.layer_outputs(depth):
            for iv in out.components:
                left = left.subtract_closed(iv.lo, iv.hi)
        return left

    def chains(self) -> list[tuple[IntervalUnion, ...]]:
        """Full alternating plays from the opening through the last layer."""
        if not self.layers:
            return [(self.opening,)]
        leaves = []
        for node in self.layers[-1]:
            for probe, reply in node.family.pairs:
                leaves.append(node.history + (probe, reply))
        return leaves

    def to_json(self) -> dict:
        return {
            "opening": self.opening.to_pairs(),
            "layers": [
                [
                    {
                        "history": [s.to_pairs() for s in node.history],
                        "family": node.family.to_json(),
                    }
                    for node in layer
                ]
                for layer in self.layers
            ],
        }


def sigma_refinement_tree(
    sigma: Strategy,
    depth: int,
    eps: Fraction,
    cap: int,
    space: AmbientSpace = AmbientSpace.REAL,
) -> RefinementTree:
    """Unfold a first-mover strategy into layered disjoint refinements.

    The strategy's reply to a probe V is a nonempty subset of V, so within
    any base it acts as a refinement map; the greedy sweep then produces a
    disjoint family whose union is eps-dense in the base.  Applying this
    along every output for ``depth`` layers mirrors how a single strategy is
    outflanked on a Baire board: density survives at every layer no matter
    how the strategy replies.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    opening = sigma(space, []).set

    def refine(history: tuple[IntervalUnion, ...], base: IntervalUnion) -> RefinementFamily:
        def respond(probe: IntervalUnion) -> IntervalUnion:
            regions = [Region(space, s) for s in history + (probe,)]
            return sigma(space, regions).set

        try:
            return disjoint_refinement(base, respond, eps, cap)
        except CapExceeded as exc:
            raise CapExceeded(exc.partial, exc.achieved, history) from exc

    layers: list[tuple[RefinementNode, ...]] = []
    frontier = [RefinementNode(history=(opening,), family=refine((opening,), opening))]
    layers.append(tuple(frontier))
    for _ in range(depth - 1):
        next_frontier = []
        for node in frontier:
            for probe, reply in node.family.pairs:
                history = node.history + (probe, reply)
                next_frontier.append(
                    RefinementNode(history=history, family=refine(history, reply))
                )
        frontier = next_frontier
        layers.append(tuple(frontier))
    return RefinementTree(opening=opening, layers=tuple(layers))
