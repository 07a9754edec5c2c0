/**
 * Board geometry: pure logic behind the number-line rendering.
 *
 * Everything here works on exact rationals; conversion to screen
 * coordinates happens last, per viewport, and never feeds back into game
 * state.
 */

import { Rat, add, parseRat, cmp, le, lt, rat, sub, toNumber } from "./rational.js";
import type { MoveJson, Pair, TranscriptJson } from "./api.js";

export interface Interval {
  lo: Rat;
  hi: Rat;
}

export function parseUnion(pairs: Pair[]): Interval[] {
  return pairs.map(([lo, hi]) => ({ lo: parseRat(lo), hi: parseRat(hi) }));
}

/** The open interval (lo, hi) fits inside one component of the union. */
export function fitsInside(union: Interval[], lo: Rat, hi: Rat): boolean {
  if (!lt(lo, hi)) return false;
  return union.some((iv) => le(iv.lo, lo) && le(hi, iv.hi));
}

/** A proposed move is submittable iff it nests in the current region. */
export function moveAllowed(current: Pair[] | null, lo: Rat, hi: Rat): boolean {
  if (current === null) return lt(lo, hi); // opening move: anywhere on the board
  return fitsInside(parseUnion(current), lo, hi);
}

export function currentRegion(transcript: TranscriptJson): Pair[] | null {
  const moves = transcript.moves;
  return moves.length ? moves[moves.length - 1]!.set : null;
}

/** Zoom window: the hull of the current region, padded by a quarter span. */
export interface Viewport {
  lo: Rat;
  hi: Rat;
}

export const UNIT_VIEW: Viewport = {
  lo: { n: 0n, d: 1n },
  hi: { n: 1n, d: 1n },
};

export function zoomToRegion(region: Pair[]): Viewport {
  const union = parseUnion(region);
  if (union.length === 0) return UNIT_VIEW;
  const lo = union[0]!.lo;
  const hi = union[union.length - 1]!.hi;
  const pad = rat(sub(hi, lo).n, sub(hi, lo).d * 4n);
  const paddedLo = sub(lo, pad);
  const paddedHi = add(hi, pad);
  return {
    lo: cmp(paddedLo, UNIT_VIEW.lo) < 0 ? UNIT_VIEW.lo : paddedLo,
    hi: cmp(paddedHi, UNIT_VIEW.hi) > 0 ? UNIT_VIEW.hi : paddedHi,
  };
}

/** Fraction of the viewport width at which a value sits, clamped to [0,1]. */
export function toScreen(view: Viewport, value: Rat): number {
  const lo = toNumber(view.lo);
  const hi = toNumber(view.hi);
  const x = (toNumber(value) - lo) / (hi - lo || 1);
  return Math.min(Math.max(x, 0), 1);
}

export interface SegmentLayout {
  x: number; // 0..1 within the viewport
  width: number;
  loLabel: string;
  hiLabel: string;
}

export interface RowLayout {
  player: string;
  index: number;
  isCurrent: boolean;
  segments: SegmentLayout[];
}

/** One row per move, newest last; labels stay exact "p/q" strings. */
export function layoutMoves(moves: MoveJson[], view: Viewport): RowLayout[] {
  return moves.map((move, i) => ({
    player: move.player,
    index: move.index,
    isCurrent: i === moves.length - 1,
    segments: move.set.map(([loText, hiText]) => {
      const lo = parseRat(loText);
      const hi = parseRat(hiText);
      const x = toScreen(view, lo);
      return {
        x,
        width: Math.max(toScreen(view, hi) - x, 0),
        loLabel: loText,
        hiLabel: hiText,
      };
    }),
  }));
}

/** Marker positions for excluded points that fall inside the viewport. */
export function layoutExcluded(
  points: { point: string }[],
  view: Viewport,
): { x: number; label: string }[] {
  return points
    .map(({ point }) => ({ value: parseRat(point), label: point }))
    .filter(({ value }) => le(view.lo, value) && le(value, view.hi))
    .map(({ value, label }) => ({ x: toScreen(view, value), label }));
}
