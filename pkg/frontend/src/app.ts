/**
 * Arena wiring: one session per tab, no optimistic updates.
 *
 * The board only ever renders state returned by the service, so an exported
 * transcript always replays through the referee.  Typed rational endpoints
 * are authoritative; dragging on the board just fills the inputs with
 * snapped dyadic values.
 */

import { ArenaClient, Diagnostics, Pair, SessionState } from "./api.js";
import {
  UNIT_VIEW,
  Viewport,
  currentRegion,
  layoutExcluded,
  layoutMoves,
  moveAllowed,
  zoomToRegion,
} from "./board.js";
import { add, fmt, mul, parseRat, snapToDyadic, sub, toNumber } from "./rational.js";
import { renderBoard } from "./render.js";

const client = new ArenaClient("");

interface UiState {
  session: SessionState | null;
  diagnostics: Diagnostics | null;
  viewport: Viewport;
  followZoom: boolean;
}

const state: UiState = {
  session: null,
  diagnostics: null,
  viewport: UNIT_VIEW,
  followZoom: true,
};

const $ = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
};

function showBanner(kind: "error" | "info", text: string): void {
  const banner = $("banner");
  banner.className = `banner banner-${kind}`;
  banner.textContent = text;
  banner.hidden = false;
}

function clearBanner(): void {
  $("banner").hidden = true;
}

function snapBits(): number {
  return Number(($("snap-bits") as unknown as HTMLSelectElement).value);
}

function humanTurn(): boolean {
  return state.session?.status === "awaiting_human";
}

function refreshBoard(): void {
  const container = $("board");
  if (!state.session) {
    container.replaceChildren();
    return;
  }
  const moves = state.session.transcript.moves;
  const region = currentRegion(state.session.transcript);
  if (state.followZoom && region && region.length > 0) {
    state.viewport = zoomToRegion(region);
  }
  const rows = layoutMoves(moves, state.viewport);
  const excluded = layoutExcluded(state.diagnostics?.excluded ?? [], state.viewport);
  renderBoard(container, rows, excluded, {
    lo: fmt(state.viewport.lo),
    hi: fmt(state.viewport.hi),
  }, {
    onDragSelect: (a, b, done) => handleDrag(a, b, done),
  });
  $("view-span").textContent = `view: (${fmt(state.viewport.lo)}, ${fmt(state.viewport.hi)})`;
}

function handleDrag(a: number, b: number, done: boolean): void {
  if (!humanTurn()) return;
  const [lo, hi] = a <= b ? [a, b] : [b, a];
  const span = sub(state.viewport.hi, state.viewport.lo);
  const absolute = (frac: number) =>
    add(state.viewport.lo, mul(span, snapToDyadic(frac, snapBits())));
  const loRat = absolute(lo);
  const hiRat = absolute(hi);
  if (fmt(loRat) === fmt(hiRat)) return; // zero-width drag
  ($("move-lo") as unknown as HTMLInputElement).value = fmt(loRat);
  ($("move-hi") as unknown as HTMLInputElement).value = fmt(hiRat);
  validateMoveEntry();
  if (done) clearBanner();
}

function validateMoveEntry(): void {
  const submit = $("submit-move") as unknown as HTMLButtonElement;
  const hint = $("move-hint");
  if (!state.session || !humanTurn()) {
    submit.disabled = true;
    return;
  }
  const loText = ($("move-lo") as unknown as HTMLInputElement).value;
  const hiText = ($("move-hi") as unknown as HTMLInputElement).value;
  try {
    const lo = parseRat(loText);
    const hi = parseRat(hiText);
    const region = currentRegion(state.session.transcript);
    const allowed = moveAllowed(region, lo, hi);
    submit.disabled = !allowed;
    hint.textContent = allowed
      ? `play (${fmt(lo)}, ${fmt(hi)})`
      : "must be a nonempty open interval inside the highlighted region";
  } catch (error) {
    submit.disabled = true;
    hint.textContent = loText || hiText ? String((error as Error).message) : "";
  }
}

async function refreshDiagnostics(): Promise<void> {
  if (!state.session) return;
  state.diagnostics = await client.diagnostics(state.session.id);
  const panel = $("diagnostics");
  const d = state.diagnostics;
  const lines: string[] = [
    `status: ${d.status}`,
    `moves: ${d.moves} (round ${d.rounds})`,
  ];
  if (d.diameter) lines.push(`diameter: ${d.diameter}`);
  if (d.measure) lines.push(`measure: ${d.measure}`);
  if (d.excluded) {
    const points = d.excluded.map((e) => e.point).join(", ") || "none yet";
    lines.push(`excluded points: ${points}`);
  }
  if (d.closure_nesting) {
    const ok = d.closure_nesting.filter(Boolean).length;
    lines.push(`closure-nested stages: ${ok}/${d.closure_nesting.length}`);
  }
  for (const [kind, cert] of Object.entries(d.certificates)) {
    const summary = (cert as { verified_depth?: number; error?: { reason: string } });
    lines.push(
      summary.verified_depth !== undefined
        ? `${kind} certificate: verified to depth ${summary.verified_depth}`
        : `${kind} certificate: ${summary.error?.reason ?? "unavailable"}`,
    );
  }
  panel.textContent = lines.join("\n");
}

async function applySession(session: SessionState): Promise<void> {
  state.session = session;
  await refreshDiagnostics(); // poll after every move
  refreshBoard();
  validateMoveEntry();
  const status = $("status-line");
  if (session.status === "depth_reached") {
    status.textContent = "depth reached: game over, export the transcript below";
  } else if (session.status === "awaiting_human") {
    status.textContent = "your move";
  } else {
    status.textContent = "engine is thinking";
  }
}

async function startGame(event: Event): Promise<void> {
  event.preventDefault();
  clearBanner();
  const space = ($("space") as unknown as HTMLSelectElement).value as "real" | "rational";
  const role = ($("role") as unknown as HTMLSelectElement).value as "Alice" | "Bob";
  const strategy = ($("strategy") as unknown as HTMLSelectElement).value;
  const depth = Number(($("depth") as unknown as HTMLInputElement).value);
  const engineRole = role === "Alice" ? "Bob" : "Alice";
  try {
    const session = await client.createSession({
      space,
      max_depth: depth,
      engine_role: engineRole,
      strategy,
    });
    state.followZoom = true;
    state.viewport = UNIT_VIEW;
    await applySession(session);
    showBanner("info", session.transcript.moves.length
      ? "engine opened the game; reply inside its move"
      : "you open: choose any nonempty open interval");
  } catch (error) {
    showBanner("error", (error as Error).message);
  }
}

async function submitMove(event: Event): Promise<void> {
  event.preventDefault();
  if (!state.session) return;
  clearBanner();
  let set: Pair[];
  try {
    const lo = parseRat(($("move-lo") as unknown as HTMLInputElement).value);
    const hi = parseRat(($("move-hi") as unknown as HTMLInputElement).value);
    set = [[fmt(lo), fmt(hi)]];
  } catch (error) {
    showBanner("error", `parse error: ${(error as Error).message}`);
    return; // never submitted
  }
  const result = await client.submitMove(state.session.id, set);
  if (!result.ok) {
    const { code, reason, stage } = result.error;
    showBanner("error", `${code}${stage !== undefined ? ` at stage ${stage}` : ""}: ${reason}`);
    return; // turn retained; board unchanged
  }
  await applySession(result.session);
}

async function exportTranscript(): Promise<void> {
  if (!state.session) return;
  const data = await client.exportMatch(state.session.id);
  const blob = new Blob([JSON.stringify(data, null, 2)], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `bmgame-${state.session.id}.json`;
  link.click();
  URL.revokeObjectURL(link.href);
}

export function setup(): void {
  $("new-game").addEventListener("submit", (e) => void startGame(e));
  $("move-form").addEventListener("submit", (e) => void submitMove(e));
  $("move-lo").addEventListener("input", validateMoveEntry);
  $("move-hi").addEventListener("input", validateMoveEntry);
  $("export").addEventListener("click", () => void exportTranscript());
  $("zoom-follow").addEventListener("click", () => {
    state.followZoom = true;
    refreshBoard();
  });
  $("zoom-reset").addEventListener("click", () => {
    state.followZoom = false;
    state.viewport = UNIT_VIEW;
    refreshBoard();
  });
  validateMoveEntry();
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  setup();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", setup);
}
