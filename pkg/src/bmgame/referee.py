"""Banach-Mazur game referee: legality, transcripts, and finite-depth certificates.

The game alternates nested nonempty open sets.  The true winning condition
quantifies over an infinite play (Bob wins iff the intersection of all
played sets is nonempty), which no finite prefix can decide, so the referee
never declares a winner.  Instead it issues machine-checkable certificates:

* ``ExclusionPersistence``: on the rational board, each enumerated point
  q_n is verifiably absent from Alice's n-th move, hence from every later
  move and from the limit of the play.
* ``Localization``: on the real board, closure-nesting and diameter-decay
  evidence that pins the limit of the play inside one short interval; by
  completeness the intersection point exists in its closure.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Optional

from .intervals import UNIT, IntervalUnion, format_rational
from .spaces import AmbientSpace, MeagreCover, Region


class Player(Enum):
    ALICE = "Alice"
    BOB = "Bob"

    @property
    def opponent(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE

    @classmethod
    def parse(cls, text: str) -> "Player":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown player {text!r}")


class SubsetMode(Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"


@dataclass(frozen=True)
class Ruleset:
    space: AmbientSpace
    max_depth: int
    first_mover: Player = Player.BOB
    subset_mode: SubsetMode = SubsetMode.NONSTRICT

    def __post_init__(self) -> None:
        if self.max_depth < 1:
            raise ValueError(f"max_depth must be >= 1, got {self.max_depth}")

    def to_json(self) -> dict:
        return {
            "space": self.space.value,
            "first_mover": self.first_mover.value,
            "subset_mode": self.subset_mode.value,
            "max_depth": self.max_depth,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Ruleset":
        return cls(
            space=AmbientSpace.parse(data["space"]),
            max_depth=int(data["max_depth"]),
            first_mover=Player.parse(data.get("first_mover", "Bob")),
            subset_mode=SubsetMode(data.get("subset_mode", "nonstrict")),
        )


@dataclass(frozen=True)
class Move:
    player: Player
    region: Region
    index: int  # round number: both moves of round n carry index n

    def to_json(self) -> dict:
        return {
            "player": self.player.value,
            "index": self.index,
            "set": self.region.set.to_pairs(),
        }


class ViolationKind(Enum):
    EMPTY = "Empty"
    WRONG_SPACE = "WrongSpace"
    NOT_SUBSET = "NotSubset"
    NOT_STRICT = "NotStrict"
    GAME_OVER = "GameOver"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    stage: int
    reason: str

    def to_json(self) -> dict:
        return {"code": self.kind.value, "stage": self.stage, "reason": self.reason}


class IllegalMove(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(f"{violation.kind.value} at stage {violation.stage}: {violation.reason}")
        self.violation = violation


@dataclass(frozen=True)
class Transcript:
    """An immutable, replayable record of a (partial) play.

    Moves strictly alternate starting with ``ruleset.first_mover``; each
    region is nested in the previous one.  ``apply`` returns a new value, so
    branching a search over continuations is cheap and every prefix remains
    a valid transcript.
    """

    ruleset: Ruleset
    moves: tuple[Move, ...] = ()

    @property
    def next_player(self) -> Player:
        if len(self.moves) % 2 == 0:
            return self.ruleset.first_mover
        return self.ruleset.first_mover.opponent

    @property
    def is_complete(self) -> bool:
        return len(self.moves) >= 2 * self.ruleset.max_depth

    @property
    def current_region(self) -> Optional[Region]:
        return self.moves[-1].region if self.moves else None

    def moves_by(self, player: Player) -> list[Move]:
        return [m for m in self.moves if m.player is player]

    def legal_move(self, region: Region) -> Optional[Violation]:
        """None if the region is playable now, else the structured violation."""
        stage = len(self.moves)
        if self.is_complete:
            return Violation(ViolationKind.GAME_OVER, stage, "game reached max depth")
        if region.space is not self.ruleset.space:
            return Violation(
                ViolationKind.WRONG_SPACE,
                stage,
                f"move on {region.space.value}, game on {self.ruleset.space.value}",
            )
        if region.is_empty:
            return Violation(ViolationKind.EMPTY, stage, "moves must be nonempty open sets")
        previous = self.moves[-1].region.set if self.moves else None
        if previous is not None and not region.set.is_subset(previous):
            return Violation(
                ViolationKind.NOT_SUBSET,
                stage,
                f"{region.set} is not contained in {previous}",
            )
        if self.ruleset.subset_mode is SubsetMode.STRICT:
            # first move measured against the whole board
            reference = previous if previous is not None else UNIT
            if region.set == reference:
                return Violation(
                    ViolationKind.NOT_STRICT, stage, "strict mode forbids repeating the region"
                )
        return None

    def apply(self, region: Region) -> "Transcript":
        violation = self.legal_move(region)
        if violation is not None:
            raise IllegalMove(violation)
        move = Move(player=self.next_player, region=region, index=len(self.moves) // 2)
        return replace(self, moves=self.moves + (move,))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "ruleset": self.ruleset.to_json(),
            "moves": [m.to_json() for m in self.moves],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Transcript":
        """Rebuild and re-validate: every move is replayed through legality."""
        ruleset = Ruleset.from_json(data["ruleset"])
        t = cls(ruleset)
        for i, mv in enumerate(data["moves"]):
            region = Region(ruleset.space, IntervalUnion.from_pairs(mv["set"]))
            expected_player = t.next_player.value
            if mv.get("player", expected_player) != expected_player:
                raise ValueError(f"move {i}: player {mv['player']!r}, expected {expected_player!r}")
            if mv.get("index", i // 2) != i // 2:
                raise ValueError(f"move {i}: index {mv['index']}, expected {i // 2}")
            t = t.apply(region)
        return t


def new_game(ruleset: Ruleset) -> Transcript:
    return Transcript(ruleset)


# -- certificates -------------------------------------------------------------

class CertificateKind(Enum):
    EXCLUSION = "ExclusionPersistence"
    LOCALIZATION = "Localization"


class CertificateFailure(ValueError):
    def __init__(self, stage: int, reason: str):
        super().__init__(f"certificate fails at stage {stage}: {reason}")
        self.stage = stage
        self.reason = reason


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    verified_depth: int
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "verified_depth": self.verified_depth,
            "payload": self.payload,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        return cls(
            kind=CertificateKind(data["kind"]),
            verified_depth=int(data["verified_depth"]),
            payload=dict(data["payload"]),
        )


def exclusion_certificate(transcript: Transcript, cover: MeagreCover) -> Certificate:
    """Check that Alice's n-th move excludes the n-th enumerated point.

    Since later moves are subsets of earlier ones, q_n ∉ V_n already proves
    q_n is outside every subsequent move and outside the intersection of the
    whole play.  Fails at the first stage whose point survives.
    """
    if transcript.ruleset.space is not AmbientSpace.RATIONAL:
        raise ValueError("exclusion certificates apply to games on the rational board")
    exclusions = []
    for n, move in enumerate(transcript.moves_by(Player.ALICE), start=1):
        point = cover.enumeration(n)
        if move.region.set.contains(point):
            raise CertificateFailure(
                n, f"enumerated point {format_rational(point)} still inside move {n}"
            )
        exclusions.append(
            {"n": n, "point": format_rational(point), "stage": move.index}
        )
    return Certificate(
        kind=CertificateKind.EXCLUSION,
        verified_depth=len(exclusions),
        payload={"cover": cover.name, "exclusions": exclusions},
    )


def localization_certificate(transcript: Transcript) -> Certificate:
    """Closure-nesting and diameter-decay evidence from a real-board play.

    Let move_0, ..., move_K be the played sets.  The certificate records the
    stages k >= 1 whose closure lies inside the previous move, and the stages
    with diameter(move_k) <= 2^-k.  Every stage must be within one step of a
    closure-nested stage: that way the claimed stages form a chain of nested
    nonempty closed sets reaching the end of the play, and by completeness
    the limit of any continuation in this pattern lies in the closure of the
    final move's hull.  The approximation interval is that hull; the error
    bound is its diameter.
    """
    if transcript.ruleset.space is not AmbientSpace.REAL:
        raise ValueError("localization certificates apply to games on the real board")
    if not transcript.moves:
        raise ValueError("localization needs at least one move")
    sets = [m.region.set for m in transcript.moves]
    top = len(sets) - 1
    nested = [k for k in range(1, top + 1) if sets[k].closure_subset(sets[k - 1])]
    anchored = set(nested)
    for k in range(1, top + 1):
        if not ({k - 1, k, k + 1} & anchored):
            raise CertificateFailure(k, "no closure-nested stage within one step")
    decayed = [
        k for k in range(1, top + 1) if sets[k].diameter() <= Fraction(1, 2**k)
    ]
    hull = sets[-1].hull()
    return Certificate(
        kind=CertificateKind.LOCALIZATION,
        verified_depth=len(sets),
        payload={
            "interval": hull.to_pair(),
            "error_bound": format_rational(sets[-1].diameter()),
            "closure_stages": nested,
            "decay_stages": decayed,
        },
    )


def check_certificate(transcript: Transcript, certificate: Certificate, cover: MeagreCover | None = None) -> None:
    """Re-derive a certificate from its transcript and compare exactly.

    Raises :class:`CertificateFailure` when the stored evidence does not
    match what the transcript supports (tampered payloads included).
    """
    if certificate.kind is CertificateKind.EXCLUSION:
        if cover is None:
            from .spaces import farey_cover

            cover = farey_cover()
        fresh = exclusion_certificate(transcript, cover)
    else:
        fresh = localization_certificate(transcript)
    if fresh.to_json() != certificate.to_json():
        raise CertificateFailure(
            certificate.verified_depth,
            f"stored {certificate.kind.value} evidence does not match the transcript",
        )
