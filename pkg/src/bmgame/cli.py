"""Command-line harness: play matches, build points, refine, and verify artifacts.

Every run is reproducible from its flag set (all randomness is seeded), and
identical flags produce byte-identical output files.  Exit codes: 0 success,
1 usage or environment error, 2 verification or certificate failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .intervals import IntervalUnion, format_rational, parse_rational
from .referee import (
    Certificate,
    CertificateFailure,
    IllegalMove,
    Ruleset,
    Transcript,
    check_certificate,
    exclusion_certificate,
    localization_certificate,
)
from .spaces import AmbientSpace, farey_cover, farey_family
from .strategies import (
    CapExceeded,
    RefinementFamily,
    StrategyFault,
    baire_point,
    disjoint_refinement,
    left_third_map,
    run_match,
    strategy_from_id,
)

USAGE_ERROR = 1
VERIFY_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _write_json(path: str, data: dict) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bmgame", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    play = sub.add_parser("play", help="run two strategies against each other")
    play.add_argument("--space", default="real", choices=["real", "rational"])
    play.add_argument("--first", required=True, help="strategy id for the first mover")
    play.add_argument("--second", required=True, help="strategy id for the second mover")
    play.add_argument("--depth", type=int, required=True, help="full rounds to play")
    play.add_argument("--out", required=True, help="output path for the match file")

    baire = sub.add_parser("baire", help="run the nested shrinking-ball construction")
    baire.add_argument("--center", required=True, help="ball center as p/q")
    baire.add_argument("--radius", required=True, help="ball radius as p/q")
    baire.add_argument("--depth", type=int, required=True)
    baire.add_argument(
        "--per-stage", type=int, default=1,
        help="enumerated points removed per stage of the dense open family",
    )
    baire.add_argument("--out", help="optional output path for the report")

    refine = sub.add_parser("refine", help="greedy disjoint refinement of an interval")
    refine.add_argument("--eps", default="1/1024", help="target gap resolution as p/q")
    refine.add_argument("--cap", type=int, default=10_000)
    refine.add_argument("--map", default="left-third", choices=["left-third", "identity"])
    refine.add_argument("--lo", default="0/1")
    refine.add_argument("--hi", default="1/1")
    refine.add_argument("--out", help="optional output path for the family")

    verify = sub.add_parser("verify", help="replay and re-check a produced artifact")
    verify.add_argument("path", help="match, baire, or refinement JSON file")

    return parser


def _cmd_play(args: argparse.Namespace) -> int:
    if args.depth < 1:
        print("error: --depth must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        first = strategy_from_id(args.first)
        second = strategy_from_id(args.second)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    space = AmbientSpace.parse(args.space)
    ruleset = Ruleset(space=space, max_depth=args.depth)
    try:
        transcript = run_match(first, second, ruleset)
    except StrategyFault as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    certificates: list[Certificate] = []
    failures: list[str] = []
    try:
        if space is AmbientSpace.RATIONAL:
            certificates.append(exclusion_certificate(transcript, farey_cover()))
        else:
            certificates.append(localization_certificate(transcript))
    except CertificateFailure as exc:
        failures.append(str(exc))

    _write_json(args.out, {
        "kind": "match",
        "transcript": transcript.to_json(),
        "certificates": [c.to_json() for c in certificates],
    })

    last = transcript.moves[-1].region.set
    print(f"played {len(transcript.moves)} moves on the {space.value} board")
    print(f"final region: {last} (diameter {format_rational(last.diameter())})")
    for cert in certificates:
        print(f"certificate {cert.kind.value}: verified to depth {cert.verified_depth}")
    for failure in failures:
        print(f"certificate failure: {failure}")
    print(f"wrote {args.out}")
    return VERIFY_ERROR if failures else 0


def _cmd_baire(args: argparse.Namespace) -> int:
    try:
        center = parse_rational(args.center)
        radius = parse_rational(args.radius)
        if args.depth < 1 or args.per_stage < 1:
            raise ValueError("--depth and --per-stage must be >= 1")
        family = farey_family(args.per_stage)
        final, certificate = baire_point(family, center, radius, args.depth)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    from .spaces import enumerate_rational

    closure_lo, closure_hi = final.lo, final.hi
    excluded = []
    for i in range(1, args.depth * args.per_stage + 1):
        q = enumerate_rational(i)
        if closure_lo <= q <= closure_hi:
            print(f"error: point {format_rational(q)} inside the final closure", file=sys.stderr)
            return VERIFY_ERROR
        excluded.append(format_rational(q))

    print(f"final interval: {final} after {args.depth} stages")
    print(f"error bound: {format_rational(final.length)} (<= 2^-{args.depth})")
    print(f"excluded from the closure: {', '.join(excluded)}")
    if args.out:
        _write_json(args.out, {
            "kind": "baire",
            "center": format_rational(center),
            "radius": format_rational(radius),
            "depth": args.depth,
            "per_stage": args.per_stage,
            "certificate": certificate.to_json(),
            "excluded": excluded,
        })
        print(f"wrote {args.out}")
    return 0


def _refine_map(name: str):
    if name == "identity":
        return lambda region: region
    return left_third_map


def _cmd_refine(args: argparse.Namespace) -> int:
    try:
        eps = parse_rational(args.eps)
        lo, hi = parse_rational(args.lo), parse_rational(args.hi)
        base = IntervalUnion.from_pairs([[args.lo, args.hi]])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        family = disjoint_refinement(base, _refine_map(args.map), eps, args.cap)
    except CapExceeded as exc:
        print(f"cap exceeded: reached resolution {exc.achieved} with "
              f"{len(exc.partial.pairs)} pieces", file=sys.stderr)
        return VERIFY_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    residual = family.residual()
    print(f"{len(family.pairs)} disjoint pieces, residual gaps: {len(residual.components)}"
          f" (all shorter than {format_rational(eps)})")
    if args.out:
        _write_json(args.out, {"kind": "refinement", "map": args.map,
                               "family": family.to_json()})
        print(f"wrote {args.out}")
    return 0


def _verify_match(data: dict) -> int:
    try:
        transcript = Transcript.from_json(data["transcript"] if "transcript" in data else data)
    except IllegalMove as exc:
        print(f"verification failed: illegal move, {exc}", file=sys.stderr)
        return VERIFY_ERROR
    for cert_data in data.get("certificates", []):
        certificate = Certificate.from_json(cert_data)
        try:
            check_certificate(transcript, certificate)
        except CertificateFailure as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return VERIFY_ERROR
    print(f"ok: {len(transcript.moves)} moves replay legally, "
          f"{len(data.get('certificates', []))} certificate(s) re-checked")
    return 0


def _verify_baire(data: dict) -> int:
    family = farey_family(int(data["per_stage"]))
    final, certificate = baire_point(
        family, parse_rational(data["center"]), parse_rational(data["radius"]),
        int(data["depth"]),
    )
    if certificate.to_json() != data["certificate"]:
        print("verification failed: stored construction does not replay identically",
              file=sys.stderr)
        return VERIFY_ERROR
    from .spaces import enumerate_rational

    for i in range(1, int(data["depth"]) * int(data["per_stage"]) + 1):
        q = enumerate_rational(i)
        if final.lo <= q <= final.hi:
            print(f"verification failed: {format_rational(q)} inside the closure",
                  file=sys.stderr)
            return VERIFY_ERROR
    print(f"ok: construction replays identically to depth {data['depth']}")
    return 0


def _verify_refinement(data: dict) -> int:
    fam = data["family"]
    base = IntervalUnion.from_pairs(fam["base"])
    eps = parse_rational(fam["residual_resolution"])
    pairs = [
        (IntervalUnion.from_pairs(p["input"]), IntervalUnion.from_pairs(p["output"]))
        for p in fam["pairs"]
    ]
    family = RefinementFamily(base, tuple(pairs), eps)
    for i, (probe, image) in enumerate(pairs):
        if image.is_empty or not image.is_subset(probe) or not probe.is_subset(base):
            print(f"verification failed: pair {i} breaks output ⊆ input ⊆ base",
                  file=sys.stderr)
            return VERIFY_ERROR
        for j in range(i + 1, len(pairs)):
            if not image.intersect(pairs[j][1]).is_empty:
                print(f"verification failed: outputs {i} and {j} overlap", file=sys.stderr)
                return VERIFY_ERROR
    residual = family.residual()
    if any(iv.length >= eps for iv in residual.components):
        print("verification failed: an uncovered gap reaches the resolution",
              file=sys.stderr)
        return VERIFY_ERROR
    print(f"ok: {len(pairs)} disjoint pieces cover the base to resolution "
          f"{format_rational(eps)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        data = _load_json(args.path)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    kind = data.get("kind", "match")
    try:
        if kind == "match":
            return _verify_match(data)
        if kind == "baire":
            return _verify_baire(data)
        if kind == "refinement":
            return _verify_refinement(data)
    except (KeyError, ValueError) as exc:
        print(f"error: malformed {kind} file: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(f"error: unknown artifact kind {kind!r}", file=sys.stderr)
    return USAGE_ERROR


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "play": _cmd_play,
        "baire": _cmd_baire,
        "refine": _cmd_refine,
        "verify": _cmd_verify,
    }
    return handlers[args.verb](args)


if __name__ == "__main__":
    sys.exit(main())
