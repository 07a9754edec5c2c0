"""Session service: the referee and engine strategies behind a JSON API.

Endpoints:
  POST /sessions                    create a game vs an engine strategy
  GET  /sessions/{id}               full session state
  POST /sessions/{id}/moves         submit the human move; engine replies synchronously
  GET  /sessions/{id}/diagnostics   exclusion/localization readouts for the play so far
  GET  /sessions/{id}/export        match-file JSON (same format the CLI verifies)

Rationals travel as "p/q" strings; errors as {code, stage?, reason}.
Sessions are in memory; requests within one session are serialized.
"""

from __future__ import annotations

import os
import threading
import uuid
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .intervals import IntervalUnion, format_rational
from .referee import (
    Certificate,
    CertificateFailure,
    Player,
    Ruleset,
    SubsetMode,
    Transcript,
    exclusion_certificate,
    localization_certificate,
    new_game,
)
from .spaces import AmbientSpace, Region, enumerate_rational, farey_cover
from .strategies import Strategy, strategy_from_id


class CreateSessionRequest(BaseModel):
    space: str
    max_depth: int = 8
    engine_role: str = "Alice"
    strategy: str = "alice-exclusion"
    first_mover: str = "Bob"
    subset_mode: str = "nonstrict"


class MoveRequest(BaseModel):
    set: list[list[str]]


@dataclass
class Session:
    id: str
    ruleset: Ruleset
    engine_role: Player
    engine_strategy: Strategy
    transcript: Transcript
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def status(self) -> str:
        if self.transcript.is_complete:
            return "depth_reached"
        if self.transcript.next_player is self.engine_role:
            return "awaiting_engine"
        return "awaiting_human"

    def engine_reply_if_due(self) -> None:
        if not self.transcript.is_complete and self.transcript.next_player is self.engine_role:
            history = [m.region for m in self.transcript.moves]
            region = self.engine_strategy(self.ruleset.space, history)
            self.transcript = self.transcript.apply(region)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "engine": {
                "role": self.engine_role.value,
                "strategy": self.engine_strategy.name,
            },
            "transcript": self.transcript.to_json(),
        }


def _error(status: int, code: str, reason: str, stage: Optional[int] = None) -> JSONResponse:
    body: dict = {"code": code, "reason": reason}
    if stage is not None:
        body["stage"] = stage
    return JSONResponse(status_code=status, content=body)


def _diagnostics(session: Session) -> dict:
    transcript = session.transcript
    sets = [m.region.set for m in transcript.moves]
    current = sets[-1] if sets else None
    report: dict = {
        "status": session.status,
        "moves": len(sets),
        "rounds": len(sets) // 2,
        "current": current.to_pairs() if current is not None else None,
        "diameter": format_rational(current.diameter()) if current is not None else None,
        "measure": format_rational(current.measure()) if current is not None else None,
        "certificates": {},
    }
    if session.ruleset.space is AmbientSpace.RATIONAL:
        excluded = []
        for n, move in enumerate(transcript.moves_by(Player.ALICE), start=1):
            point = enumerate_rational(n)
            if not move.region.set.contains(point):
                excluded.append(
                    {"n": n, "point": format_rational(point), "stage": move.index}
                )
        report["excluded"] = excluded
        try:
            cert = exclusion_certificate(transcript, farey_cover())
            report["certificates"]["exclusion"] = cert.to_json()
        except CertificateFailure as exc:
            report["certificates"]["exclusion"] = {
                "error": {"stage": exc.stage, "reason": exc.reason}
            }
    else:
        nesting = [
            sets[k].closure_subset(sets[k - 1]) for k in range(1, len(sets))
        ]
        decay = [
            sets[k].diameter() <= Fraction(1, 2**k) for k in range(1, len(sets))
        ]
        report["closure_nesting"] = nesting
        report["diameter_decay"] = decay
        if sets:
            try:
                cert = localization_certificate(transcript)
                report["certificates"]["localization"] = cert.to_json()
            except CertificateFailure as exc:
                report["certificates"]["localization"] = {
                    "error": {"stage": exc.stage, "reason": exc.reason}
                }
    return report


def _export(session: Session) -> dict:
    certificates: list[Certificate] = []
    try:
        if session.ruleset.space is AmbientSpace.RATIONAL:
            if session.transcript.moves_by(Player.ALICE):
                certificates.append(
                    exclusion_certificate(session.transcript, farey_cover())
                )
        elif session.transcript.moves:
            certificates.append(localization_certificate(session.transcript))
    except CertificateFailure:
        pass  # export stays verifiable: only evidence that holds is embedded
    return {
        "kind": "match",
        "transcript": session.transcript.to_json(),
        "certificates": [c.to_json() for c in certificates],
    }


def create_app() -> FastAPI:
    app = FastAPI(title="bmgame arena service")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def get_session(session_id: str) -> Optional[Session]:
        return sessions.get(session_id)

    @app.post("/sessions")
    def create_session(request: CreateSessionRequest):
        try:
            ruleset = Ruleset(
                space=AmbientSpace.parse(request.space),
                max_depth=request.max_depth,
                first_mover=Player.parse(request.first_mover),
                subset_mode=SubsetMode(request.subset_mode),
            )
            engine_role = Player.parse(request.engine_role)
        except ValueError as exc:
            return _error(400, "BadRuleset", str(exc))
        try:
            strategy = strategy_from_id(request.strategy)
        except ValueError as exc:
            return _error(400, "UnknownStrategy", str(exc))
        session = Session(
            id=uuid.uuid4().hex[:12],
            ruleset=ruleset,
            engine_role=engine_role,
            engine_strategy=strategy,
            transcript=new_game(ruleset),
        )
        session.engine_reply_if_due()
        with registry_lock:
            sessions[session.id] = session
        return JSONResponse(status_code=201, content=session.to_json())

    @app.get("/sessions/{session_id}")
    def fetch_session(session_id: str):
        session = get_session(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        return session.to_json()

    @app.post("/sessions/{session_id}/moves")
    def submit_move(session_id: str, request: MoveRequest):
        session = get_session(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        try:
            region = Region(session.ruleset.space, IntervalUnion.from_pairs(request.set))
        except ValueError as exc:
            return _error(400, "ParseError", str(exc))
        with session.lock:
            violation = session.transcript.legal_move(region)
            if violation is not None:
                return _error(
                    409, violation.kind.value, violation.reason, stage=violation.stage
                )
            session.transcript = session.transcript.apply(region)
            session.engine_reply_if_due()
            return session.to_json()

    @app.get("/sessions/{session_id}/diagnostics")
    def diagnostics(session_id: str):
        session = get_session(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        with session.lock:
            return _diagnostics(session)

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str):
        session = get_session(session_id)
        if session is None:
            return _error(404, "UnknownSession", f"no session {session_id!r}")
        with session.lock:
            return _export(session)

    static_dir = Path(os.environ.get("BMGAME_STATIC", "frontend/dist"))
    if static_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app


app = create_app()


def main() -> None:
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=int(os.environ.get("BMGAME_PORT", "8722")))


if __name__ == "__main__":
    main()
