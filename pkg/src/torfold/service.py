"""Local HTTP session service for interactive orbit-mutation.

Sessions live in process memory. Each session keeps an undo stack of
orbit-seeds; a mutation that would break foldability is answered with 409
and the virtual-2-cycle witness, and the session state is left untouched —
probing where foldability breaks is the point of the explorer.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import FoldabilityViolationError, FrozenVertexError, InputError
from .laurent import poly_to_json
from .periodic import (
    admissibility_check,
    build_AQ,
    build_gamma_infinity,
    periodic_from_json,
    periodic_to_json,
)
from .quiver import IceQuiver, quiver_from_json, quiver_to_json
from .seeds import (
    OrbitSeed,
    fold_orbit_seed,
    initial_orbit_seed,
    orbit_mutate_seed,
    seed_to_json,
)

PRESETS = {
    "gammaInfinity": "alternating strip with frozen partners; parameter n (period 2n)",
    "aq": "periodic line quiver of a cycle orientation; body field 'quiver'",
    "cyclic3": "periodic line quiver of the cyclically oriented 3-cycle",
}


def _cyclic3_quiver() -> IceQuiver:
    return IceQuiver(
        {0: False, 1: False, 2: False}, {(0, 1): 1, (1, 2): 1, (2, 0): 1}
    )


class CreateSession(BaseModel):
    preset: str | None = None
    n: int | None = None
    quiver: dict | None = None
    periodic: dict | None = None


class MutateBody(BaseModel):
    orbit: int | str


class Session:
    def __init__(self, seed: OrbitSeed):
        self.id = uuid.uuid4().hex
        self.stack = [seed]
        self.lock = threading.Lock()

    @property
    def seed(self) -> OrbitSeed:
        return self.stack[-1]


def _render_cluster(seed: OrbitSeed) -> dict:
    out = {}
    for site, poly in seed.cluster.items():
        out[str(site)] = {
            "rendered": poly.as_str(),
            "termCount": len(poly.terms),
            "poly": poly_to_json(poly),
        }
    return out


def _state(session: Session) -> dict:
    seed = session.seed
    report = admissibility_check(seed.pquiver)
    folded = fold_orbit_seed(seed)
    return {
        "id": session.id,
        "history": [str(k) for k in seed.history],
        "periodic": periodic_to_json(seed.pquiver),
        "admissible": report["admissible"],
        "violations": report["violations"],
        "folded": quiver_to_json(folded.quiver),
        "cluster": _render_cluster(seed),
        "undoDepth": len(session.stack) - 1,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="orbit-mutation explorer service")
    # the browser UI is served statically from a different origin
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}

    def _get(session_id: str) -> Session | None:
        return sessions.get(session_id)

    @app.get("/presets")
    def presets():
        return {"presets": PRESETS}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSession):
        try:
            if body.periodic is not None:
                pq = periodic_from_json(body.periodic)
            elif body.preset == "gammaInfinity":
                pq = build_gamma_infinity(body.n or 3)
            elif body.preset == "aq":
                if body.quiver is None:
                    return JSONResponse(
                        {"error": "preset 'aq' needs a 'quiver' field"}, status_code=422
                    )
                pq = build_AQ(quiver_from_json(body.quiver))
            elif body.preset == "cyclic3":
                pq = build_AQ(_cyclic3_quiver())
            else:
                return JSONResponse(
                    {"error": f"unknown preset {body.preset!r}"}, status_code=422
                )
            seed = initial_orbit_seed(pq)
        except InputError as exc:
            detail = {"error": str(exc)}
            violations = getattr(exc, "violations", None)
            if violations:
                detail["violations"] = violations
            return JSONResponse(detail, status_code=422)
        session = Session(seed)
        sessions[session.id] = session
        return _state(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return _state(session)

    @app.post("/sessions/{session_id}/mutate")
    def mutate_session(session_id: str, body: MutateBody):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with session.lock:
            orbit = body.orbit
            if isinstance(orbit, str) and orbit.lstrip("-").isdigit():
                orbit = int(orbit)
            try:
                nxt = orbit_mutate_seed(session.seed, orbit)
            except FrozenVertexError as exc:
                return JSONResponse({"error": str(exc)}, status_code=400)
            except FoldabilityViolationError as exc:
                return JSONResponse(
                    {
                        "error": str(exc),
                        "witness": exc.witness,
                        "violations": exc.violations,
                    },
                    status_code=409,
                )
            except InputError as exc:
                return JSONResponse({"error": str(exc)}, status_code=400)
            session.stack.append(nxt)
            return _state(session)

    @app.post("/sessions/{session_id}/undo")
    def undo_session(session_id: str):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        with session.lock:
            if len(session.stack) <= 1:
                return JSONResponse({"error": "nothing to undo"}, status_code=400)
            session.stack.pop()
            return _state(session)

    @app.get("/sessions/{session_id}/fold")
    def fold_session(session_id: str):
        session = _get(session_id)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return {"id": session.id, "folded": seed_to_json(fold_orbit_seed(session.seed))}

    return app


app = create_app()
