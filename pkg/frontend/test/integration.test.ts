/**
 * Scripted round trip against the real engine service: create a session,
 * play five human moves with exact rational entries, reject a non-nested
 * entry, export the transcript, and verify it with the CLI.
 */

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { ArenaClient, type Pair, type SessionState } from "../src/api.js";
import { currentRegion, moveAllowed, parseUnion } from "../src/board.js";
import { add, fmt, rat, sub, type Rat } from "../src/rational.js";

const PORT = 8873;
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;
const client = new ArenaClient(BASE);

async function waitForService(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const response = await fetch(`${BASE}/sessions/warmup-probe`);
      if (response.status === 404) return;
    } catch {
      // not listening yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "uvicorn", "bmgame.service:app", "--port", String(PORT), "--log-level", "warning"],
    { stdio: "ignore" },
  );
  await waitForService();
}, 30_000);

afterAll(() => {
  service?.kill();
});

/** A centered strict subinterval of the region's first component, exactly. */
function centeredReply(region: Pair[]): Pair {
  const [first] = parseUnion(region);
  if (!first) throw new Error("empty region");
  const quarter: Rat = rat(sub(first.hi, first.lo).n, sub(first.hi, first.lo).d * 4n);
  return [fmt(add(first.lo, quarter)), fmt(sub(first.hi, quarter))];
}

describe("arena round trip", () => {
  let session: SessionState;

  it("creates a session with the human leading", async () => {
    session = await client.createSession({
      space: "rational",
      max_depth: 8,
      engine_role: "Alice",
      strategy: "alice-exclusion",
    });
    expect(session.status).toBe("awaiting_human");
    expect(session.transcript.moves).toHaveLength(0);
  });

  it("plays five exact moves, each answered by the engine", async () => {
    for (let round = 0; round < 5; round++) {
      const region = currentRegion(session.transcript);
      const move = region ? centeredReply(region) : (["0/1", "1/1"] as Pair);
      const [lo, hi] = move;
      expect(moveAllowed(region, { n: BigInt(lo.split("/")[0]!), d: BigInt(lo.split("/")[1]!) },
        { n: BigInt(hi.split("/")[0]!), d: BigInt(hi.split("/")[1]!) })).toBe(true);
      const result = await client.submitMove(session.id, [move]);
      expect(result.ok).toBe(true);
      if (result.ok) session = result.session;
      expect(session.transcript.moves).toHaveLength(2 * (round + 1));
    }
    const last = session.transcript.moves.at(-1)!;
    expect(last.player).toBe("Alice");
  });

  it("rejects a non-nested entry with NotSubset and keeps the turn", async () => {
    const before = session.transcript.moves.length;
    const result = await client.submitMove(session.id, [["0/1", "1/1"]]);
    expect(result.ok).toBe(false);
    if (!result.ok) {
      expect(result.error.code).toBe("NotSubset");
      expect(result.error.stage).toBe(before);
    }
    const after = await client.getSession(session.id);
    expect(after.transcript.moves).toHaveLength(before); // turn retained
    expect(after.status).toBe("awaiting_human");
  });

  it("reports the engine's exclusions in diagnostics", async () => {
    const diagnostics = await client.diagnostics(session.id);
    expect(diagnostics.excluded?.map((e) => e.n)).toEqual([1, 2, 3, 4, 5]);
    expect(diagnostics.diameter).toBeTruthy();
  });

  it("exports a transcript that the CLI verifies", async () => {
    const exported = await client.exportMatch(session.id);
    const dir = mkdtempSync(join(tmpdir(), "bmgame-arena-"));
    const path = join(dir, "export.json");
    writeFileSync(path, JSON.stringify(exported));
    const verify = spawnSync("python3", ["-m", "bmgame.cli", "verify", path], {
      encoding: "utf-8",
    });
    expect(verify.stderr).toBe("");
    expect(verify.status).toBe(0);
    expect(verify.stdout).toContain("ok");
  });
});

describe("engine-led session", () => {
  it("shows the engine's opening move on the board", async () => {
    const session = await client.createSession({
      space: "real",
      max_depth: 4,
      engine_role: "Bob",
      strategy: "bob-shrink",
      first_mover: "Bob",
    });
    expect(session.status).toBe("awaiting_human");
    expect(session.transcript.moves).toHaveLength(1);
    expect(session.transcript.moves[0]!.set).toEqual([["3/8", "5/8"]]);
  });
});
