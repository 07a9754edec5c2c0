/** Typed client for the bmgame session service. */

export type Pair = [string, string];

export interface MoveJson {
  player: "Alice" | "Bob";
  index: number;
  set: Pair[];
}

export interface TranscriptJson {
  ruleset: {
    space: "real" | "rational";
    first_mover: "Alice" | "Bob";
    subset_mode: "strict" | "nonstrict";
    max_depth: number;
  };
  moves: MoveJson[];
}

export interface SessionState {
  id: string;
  status: "awaiting_human" | "awaiting_engine" | "depth_reached";
  engine: { role: "Alice" | "Bob"; strategy: string };
  transcript: TranscriptJson;
}

export interface ApiError {
  code: string;
  reason: string;
  stage?: number;
}

export interface Diagnostics {
  status: string;
  moves: number;
  rounds: number;
  current: Pair[] | null;
  diameter: string | null;
  measure: string | null;
  excluded?: { n: number; point: string; stage: number }[];
  closure_nesting?: boolean[];
  diameter_decay?: boolean[];
  certificates: Record<string, unknown>;
}

export interface CreateOptions {
  space: "real" | "rational";
  max_depth: number;
  engine_role: "Alice" | "Bob";
  strategy: string;
  first_mover?: "Alice" | "Bob";
  subset_mode?: "strict" | "nonstrict";
}

export type SubmitResult =
  | { ok: true; session: SessionState }
  | { ok: false; error: ApiError };

export class ArenaClient {
  constructor(private readonly base: string = "") {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    return fetch(`${this.base}${path}`, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
  }

  async createSession(options: CreateOptions): Promise<SessionState> {
    const response = await this.request("/sessions", {
      method: "POST",
      body: JSON.stringify(options),
    });
    const body = await response.json();
    if (!response.ok) throw new Error((body as ApiError).reason ?? response.statusText);
    return body as SessionState;
  }

  async getSession(id: string): Promise<SessionState> {
    const response = await this.request(`/sessions/${id}`);
    if (!response.ok) throw new Error(`session fetch failed: ${response.status}`);
    return (await response.json()) as SessionState;
  }

  /** Violations come back as a value, not an exception: the turn is retained. */
  async submitMove(id: string, set: Pair[]): Promise<SubmitResult> {
    const response = await this.request(`/sessions/${id}/moves`, {
      method: "POST",
      body: JSON.stringify({ set }),
    });
    const body = await response.json();
    if (response.ok) return { ok: true, session: body as SessionState };
    return { ok: false, error: body as ApiError };
  }

  async diagnostics(id: string): Promise<Diagnostics> {
    const response = await this.request(`/sessions/${id}/diagnostics`);
    if (!response.ok) throw new Error(`diagnostics failed: ${response.status}`);
    return (await response.json()) as Diagnostics;
  }

  async exportMatch(id: string): Promise<unknown> {
    const response = await this.request(`/sessions/${id}/export`);
    if (!response.ok) throw new Error(`export failed: ${response.status}`);
    return response.json();
  }
}
