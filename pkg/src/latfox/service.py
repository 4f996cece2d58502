"""HTTP facade over the engine: one session per uploaded table.

Mutations are serialized per session and guarded by optimistic
concurrency: the current state version doubles as the ETag, and a
request carrying a stale If-Match is refused with 409 before any work
happens.  A request without If-Match is applied unconditionally.

Every mutation response returns the changeset and the full document, so
clients may either replay the delta or just swap in the new document.
"""

from __future__ import annotations

import json
import secrets
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from . import __version__, document, engine
from .context import AttributeColumn
from .cxt import parse_cxt
from .engine import DiagramState, InvalidSeed
from .errors import (DocumentError, NameCollision, NotFound, ParseError,
                     UniverseMismatch)
from .layout import Vec2


class _Session:
    __slots__ = ("state", "last_change", "lock")

    def __init__(self, state: DiagramState):
        self.state = state
        self.last_change = None
        self.lock = threading.Lock()


def _error(status: int, message: str, **extra: Any) -> JSONResponse:
    return JSONResponse({"error": message, **extra}, status_code=status)


def _etag(state: DiagramState) -> str:
    return f'"{state.version}"'


def _document_response(session: _Session, status: int = 200,
                       changeset: dict | None = None,
                       session_id: str | None = None) -> JSONResponse:
    state = session.state
    body: dict[str, Any] = {
        "document": document.export_document(state, session.last_change),
        "version": state.version,
    }
    if changeset is not None:
        body["changeset"] = changeset
    if session_id is not None:
        body["id"] = session_id
    return JSONResponse(body, status_code=status,
                        headers={"ETag": _etag(state)})


def _version_conflict(session: _Session, request: Request) -> JSONResponse | None:
    """409 when If-Match names a version other than the current one."""
    header = request.headers.get("if-match")
    if header is None or header.strip() == "*":
        return None
    current = session.state.version
    if header.strip().strip('"') != str(current):
        return _error(409, "version mismatch", currentVersion=current)
    return None


def create_app(snapshot_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="latfox", version=__version__)
    sessions: dict[str, _Session] = {}

    @app.post("/contexts")
    async def create_context(request: Request) -> Response:
        raw = await request.body()
        text = raw.decode("utf-8", errors="replace")
        content_type = request.headers.get("content-type", "")
        try:
            if "json" in content_type or text.lstrip().startswith("{"):
                state = document.parse_document(text)
            else:
                state = engine.build_state(parse_cxt(text))
        except ParseError as exc:
            return _error(400, str(exc), line=exc.line)
        except DocumentError as exc:
            return _error(400, str(exc))
        session_id = secrets.token_hex(8)
        sessions[session_id] = _Session(state)
        return _document_response(sessions[session_id], status=201,
                                  session_id=session_id)

    @app.get("/contexts/{session_id}/diagram")
    async def get_diagram(session_id: str) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "unknown session")
        return _document_response(session)

    @app.post("/contexts/{session_id}/attributes")
    async def insert_attribute(session_id: str, request: Request) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "unknown session")
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError:
            return _error(400, "body must be JSON")
        name = body.get("name") if isinstance(body, dict) else None
        extent = body.get("extent") if isinstance(body, dict) else None
        if not isinstance(name, str) or not isinstance(extent, list) or \
                not all(isinstance(g, str) for g in extent):
            return _error(400, "body must carry name and extent:[objects]")
        with session.lock:
            conflict = _version_conflict(session, request)
            if conflict is not None:
                return conflict
            try:
                column = AttributeColumn(
                    name, session.state.context.object_set(extent))
                new, change = engine.insert_column(session.state, column)
            except NotFound as exc:
                return _error(400, str(exc))
            except NameCollision as exc:
                return _error(409, str(exc))
            session.state = new
            session.last_change = change
        return _document_response(
            session, changeset=document.changeset_to_json(change))

    @app.delete("/contexts/{session_id}/attributes/{name}")
    async def remove_attribute(session_id: str, name: str,
                               request: Request) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "unknown session")
        with session.lock:
            conflict = _version_conflict(session, request)
            if conflict is not None:
                return conflict
            try:
                new, change = engine.remove_column(session.state, name)
            except NotFound as exc:
                return _error(404, str(exc))
            session.state = new
            session.last_change = change
        return _document_response(
            session, changeset=document.changeset_to_json(change))

    @app.put("/contexts/{session_id}/seeds/{name}")
    async def set_seed(session_id: str, name: str,
                       request: Request) -> Response:
        session = sessions.get(session_id)
        if session is None:
            return _error(404, "unknown session")
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError:
            return _error(400, "body must be JSON")
        if not isinstance(body, list) or len(body) != 2 or \
                not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                        for x in body):
            return _error(400, "body must be an [x, y] pair")
        with session.lock:
            conflict = _version_conflict(session, request)
            if conflict is not None:
                return conflict
            try:
                new = engine.with_seed(session.state, name,
                                       Vec2(float(body[0]), float(body[1])))
            except NotFound as exc:
                return _error(404, str(exc))
            except InvalidSeed as exc:
                return _error(400, str(exc))
            session.state = new
            # a seed move does not reclassify nodes; keep the last change
        return _document_response(session)

    if snapshot_dir is not None:
        @app.on_event("shutdown")
        def snapshot_sessions() -> None:
            target = Path(snapshot_dir)
            target.mkdir(parents=True, exist_ok=True)
            for session_id, session in sessions.items():
                path = target / f"{session_id}.json"
                path.write_text(document.export_json(session.state,
                                                     session.last_change))

    return app
