"""HTTP service exposing the pipeline and edit sessions.

Edits use optimistic concurrency: each request carries the revision it
was computed against and conflicts come back as 409.  Projects persist to
the data directory on every successful mutation (write to a temp file,
then rename).  The built web UI, when present, is served at /.
"""

from __future__ import annotations

import os
import threading
import uuid
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import editsession, project
from .diagram import emit_plantuml
from .editsession import Session
from .errors import (DuplicateActor, DuplicateUseCase, EmptyInput,
                     InvalidCommand, NothingToUndo, Story2UmlError,
                     UnknownActor, UnknownUseCase)
from .project import PipelineConfig, PipelineResult

DATA_DIR_ENV = "STORY2UML_DATA_DIR"
UI_DIR_ENV = "STORY2UML_UI_DIR"

_VALIDATION_ERRORS = (DuplicateActor, DuplicateUseCase, UnknownActor,
                      UnknownUseCase, InvalidCommand, NothingToUndo,
                      EmptyInput)


class CreateProjectRequest(BaseModel):
    story: str
    system_name: str | None = None
    filter: bool = True
    include_infinitives: bool = False


class EditRequest(BaseModel):
    expected_revision: int = Field(ge=0)
    command: dict


class UndoRequest(BaseModel):
    expected_revision: int | None = Field(default=None, ge=0)


class RevisionConflict(Story2UmlError):
    code = "revision_conflict"

    def __init__(self, expected, actual):
        super().__init__(f"request expected revision {expected}, "
                         f"but the project is at revision {actual}")


class UnknownProject(Story2UmlError):
    code = "unknown_project"

    def __init__(self, project_id):
        super().__init__(f"no project '{project_id}'")


@dataclass
class _Entry:
    result: PipelineResult
    session: Session
    lock: threading.Lock


class ProjectStore:
    """In-memory project registry with per-project locks and disk persistence."""

    def __init__(self, data_dir: Path | str | None = None):
        self.data_dir = Path(data_dir) if data_dir else None
        if self.data_dir:
            self.data_dir.mkdir(parents=True, exist_ok=True)
        self._entries: dict[str, _Entry] = {}
        self._registry_lock = threading.Lock()

    def _path(self, project_id: str) -> Path | None:
        return self.data_dir / f"{project_id}.json" if self.data_dir else None

    def _persist(self, project_id: str, entry: _Entry) -> None:
        path = self._path(project_id)
        if not path:
            return
        tmp = path.with_suffix(".json.tmp")
        project.save_project(entry.result, entry.session, tmp)
        os.replace(tmp, path)

    def _load_from_disk(self, project_id: str) -> _Entry | None:
        path = self._path(project_id)
        if not path or not path.exists():
            return None
        result, session = project.load_project(path)
        return _Entry(result=result, session=session, lock=threading.Lock())

    def _get(self, project_id: str) -> _Entry:
        with self._registry_lock:
            entry = self._entries.get(project_id)
            if entry is None:
                entry = self._load_from_disk(project_id)
                if entry is None:
                    raise UnknownProject(project_id)
                self._entries[project_id] = entry
            return entry

    def create(self, request: CreateProjectRequest) -> tuple[str, _Entry]:
        config = PipelineConfig(
            filter_enabled=request.filter,
            include_infinitives=request.include_infinitives,
            system_name=request.system_name or "System",
        )
        result = project.run_pipeline(request.story, config)
        session = Session(model=result.filtered_model)
        entry = _Entry(result=result, session=session, lock=threading.Lock())
        project_id = uuid.uuid4().hex
        with self._registry_lock:
            self._entries[project_id] = entry
        self._persist(project_id, entry)
        return project_id, entry

    def snapshot(self, project_id: str) -> dict:
        entry = self._get(project_id)
        with entry.lock:
            return self._snapshot_locked(entry)

    def _snapshot_locked(self, entry: _Entry) -> dict:
        data = project.result_to_dict(entry.result)
        data["filtered_model"] = project.model_to_dict(entry.session.model)
        data["plantuml"] = emit_plantuml(entry.session.model)
        return {"result": data, "revision": entry.session.revision}

    def edit(self, project_id: str, request: EditRequest) -> dict:
        entry = self._get(project_id)
        command = project.command_from_dict(request.command)
        with entry.lock:
            if request.expected_revision != entry.session.revision:
                raise RevisionConflict(request.expected_revision,
                                       entry.session.revision)
            entry.session = editsession.apply_edit(entry.session, command)
            self._persist(project_id, entry)
            return self._edit_response(entry)

    def undo(self, project_id: str, expected_revision: int | None) -> dict:
        entry = self._get(project_id)
        with entry.lock:
            if expected_revision is not None and expected_revision != entry.session.revision:
                raise RevisionConflict(expected_revision, entry.session.revision)
            entry.session = editsession.undo(entry.session)
            self._persist(project_id, entry)
            return self._edit_response(entry)

    def _edit_response(self, entry: _Entry) -> dict:
        return {"model": project.model_to_dict(entry.session.model),
                "plantuml": emit_plantuml(entry.session.model),
                "revision": entry.session.revision}

    def plantuml(self, project_id: str) -> str:
        entry = self._get(project_id)
        with entry.lock:
            return emit_plantuml(entry.session.model)

    def delete(self, project_id: str) -> None:
        self._get(project_id)
        with self._registry_lock:
            self._entries.pop(project_id, None)
        path = self._path(project_id)
        if path and path.exists():
            path.unlink()


def _error_payload(exc: Story2UmlError) -> dict:
    payload = {"code": exc.code, "message": str(exc)}
    location = getattr(exc, "location", None)
    if location:
        payload["location"] = list(location)
    return payload


def _resolve_ui_dir(ui_dir: Path | str | None) -> Path | None:
    candidates = [ui_dir, os.environ.get(UI_DIR_ENV),
                  Path(__file__).parent / "webui_dist"]
    for candidate in candidates:
        if candidate and Path(candidate).is_dir():
            return Path(candidate)
    return None


def create_app(data_dir: Path | str | None = None,
               ui_dir: Path | str | None = None) -> FastAPI:
    store = ProjectStore(data_dir or os.environ.get(DATA_DIR_ENV))
    app = FastAPI(title="story2uml", version="0.1.0")
    app.state.store = store

    @app.exception_handler(Story2UmlError)
    async def domain_error_handler(request: Request, exc: Story2UmlError):
        if isinstance(exc, UnknownProject):
            status = 404
        elif isinstance(exc, RevisionConflict):
            status = 409
        elif isinstance(exc, _VALIDATION_ERRORS):
            status = 422
        else:
            status = 500
        return JSONResponse(status_code=status, content=_error_payload(exc))

    @app.post("/api/projects", status_code=201)
    def create_project(request: CreateProjectRequest):
        project_id, _ = store.create(request)
        return {"project_id": project_id, **store.snapshot(project_id)}

    @app.get("/api/projects/{project_id}")
    def get_project(project_id: str):
        return store.snapshot(project_id)

    @app.post("/api/projects/{project_id}/edits")
    def post_edit(project_id: str, request: EditRequest):
        return store.edit(project_id, request)

    @app.post("/api/projects/{project_id}/undo")
    def post_undo(project_id: str, request: UndoRequest | None = None):
        expected = request.expected_revision if request else None
        return store.undo(project_id, expected)

    @app.get("/api/projects/{project_id}/plantuml")
    def get_plantuml(project_id: str):
        return PlainTextResponse(store.plantuml(project_id))

    @app.delete("/api/projects/{project_id}", status_code=204)
    def delete_project(project_id: str):
        store.delete(project_id)
        return Response(status_code=204)

    resolved_ui = _resolve_ui_dir(ui_dir)
    if resolved_ui:
        app.mount("/", StaticFiles(directory=resolved_ui, html=True), name="ui")
    return app
