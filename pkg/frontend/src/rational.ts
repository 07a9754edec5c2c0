/**
 * Exact rational arithmetic over bigint.
 *
 * Every endpoint shown in the arena is an exact "p/q" string; floating
 * point is only ever used for pixel placement, never for labels or for the
 * values submitted to the service.
 */

export interface Rat {
  readonly n: bigint;
  readonly d: bigint;
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

/** Canonical form: positive denominator, lowest terms. */
export function rat(n: bigint, d: bigint): Rat {
  if (d === 0n) throw new Error("zero denominator");
  if (d < 0n) {
    n = -n;
    d = -d;
  }
  const g = gcd(n, d) || 1n;
  return { n: n / g, d: d / g };
}

/** Parse "p/q" (or a bare integer). Throws on malformed input like "1/0". */
export function parseRat(text: string): Rat {
  const trimmed = text.trim();
  const match = /^(-?\d+)(?:\s*\/\s*(-?\d+))?$/.exec(trimmed);
  if (!match) throw new Error(`not a rational: "${text}"`);
  const n = BigInt(match[1]!);
  const d = match[2] === undefined ? 1n : BigInt(match[2]);
  if (d === 0n) throw new Error(`zero denominator: "${text}"`);
  return rat(n, d);
}

export function fmt(x: Rat): string {
  return `${x.n}/${x.d}`;
}

export function cmp(a: Rat, b: Rat): number {
  const left = a.n * b.d;
  const right = b.n * a.d;
  return left < right ? -1 : left > right ? 1 : 0;
}

export const lt = (a: Rat, b: Rat): boolean => cmp(a, b) < 0;
export const le = (a: Rat, b: Rat): boolean => cmp(a, b) <= 0;
export const eq = (a: Rat, b: Rat): boolean => cmp(a, b) === 0;

export function add(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d + b.n * a.d, a.d * b.d);
}

export function sub(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d - b.n * a.d, a.d * b.d);
}

export function mul(a: Rat, b: Rat): Rat {
  return rat(a.n * b.n, a.d * b.d);
}

export function scale(a: Rat, num: bigint, den: bigint): Rat {
  return rat(a.n * num, a.d * den);
}

export function midpoint(a: Rat, b: Rat): Rat {
  return rat(a.n * b.d + b.n * a.d, 2n * a.d * b.d);
}

/** Lossy, for pixel placement only. */
export function toNumber(x: Rat): number {
  if (x.d < 2n ** 52n) return Number(x.n) / Number(x.d);
  // keep enough precision for drawing when denominators explode
  const shift = x.d.toString(2).length - 52;
  return Number(x.n >> BigInt(shift)) / Number(x.d >> BigInt(shift));
}

/** Nearest dyadic k/2^bits to a screen fraction; exact by construction. */
export function snapToDyadic(value: number, bits: number): Rat {
  const den = 2 ** bits;
  const k = Math.round(Math.min(Math.max(value, 0), 1) * den);
  return rat(BigInt(k), BigInt(den));
}
