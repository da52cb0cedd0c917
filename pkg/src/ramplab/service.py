"""Local HTTP/JSON facade: asynchronous generation jobs with live progress,
refinement, evaluation, suggestions, and embedded benchmarks.

Jobs run on background threads and stream one progress event per
temperature rung over server-sent events. The job table is in-memory with
an LRU cap — this is a single-user local tool, not a multi-tenant service.
"""

from __future__ import annotations

import json
import queue
import threading
import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response, StreamingResponse
from pydantic import BaseModel, Field, field_validator

from .annealer import AnnealProgress, CancelToken, OptimizerConfig, optimize
from .benchmarks import benchmark, benchmark_names
from .colorspace import lab_to_srgb
from .cvd import CvdModel, simulate
from .document import (
    ColormapDocument,
    DocumentError,
    ParseError,
    config_from_snapshot,
    srgb_to_hex,
)
from .metrics import evaluate
from .preference import PreferenceShelf, absorb_edit
from .profiles import LuminanceProfile
from .render import ramp_strip
from .suggest import suggestions

__all__ = ["create_app", "JobManager", "Job"]

JOB_STATES = ("queued", "running", "done", "cancelled", "failed")


# -- request bodies ----------------------------------------------------------


class ProfileBody(BaseModel):
    kind: str = "linear"
    inverted: bool = False
    l_min: float = 5.0
    l_max: float = 95.0
    n: int = 0

    @field_validator("kind")
    @classmethod
    def _known_kind(cls, v):
        from .profiles import PROFILE_KINDS

        if v not in PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {v!r}, expected one of {PROFILE_KINDS}")
        return v

    def build(self) -> LuminanceProfile:
        return LuminanceProfile(
            kind=self.kind, inverted=self.inverted,
            l_min=self.l_min, l_max=self.l_max, n=self.n,
        )


class WeightsBody(BaseModel):
    omega_u: float = 0.85
    omega_s: float = 1.0
    omega_c: float = 2.0
    omega_s2: float = 0.25
    K: float = 70.0


class ConfigBody(BaseModel):
    iter_count: int = Field(default=5500, ge=1)
    quality: float = Field(default=1.0, gt=0.0, le=16.0)
    seed: Optional[int] = None
    cvd: str = "off"
    step_size: float = Field(default=5.0, gt=0.0)
    restart_temp: float = Field(default=0.1, gt=0.0)
    weights: WeightsBody = Field(default_factory=WeightsBody)

    @field_validator("cvd")
    @classmethod
    def _parseable(cls, v):
        CvdModel.parse(v)
        return v

    def build(self, seed: Optional[int] = None) -> OptimizerConfig:
        from .cost import CostWeights

        w = self.weights
        return OptimizerConfig(
            seed=self.seed if seed is None else seed,
            iter_count=self.iter_count,
            step_size=self.step_size,
            restart_temp=self.restart_temp,
            cvd=CvdModel.parse(self.cvd),
            weights=CostWeights(
                omega_u=w.omega_u, omega_s=w.omega_s, omega_c=w.omega_c,
                omega_s2=w.omega_s2, K=w.K,
            ),
        ).scaled(self.quality)


class ShelfBlockBody(BaseModel):
    lab: list[float] = Field(min_length=3, max_length=3)
    center: float = Field(ge=0.0, le=1.0)
    extent: float = Field(default=0.1, gt=0.0, le=1.0)


class GenerateBody(BaseModel):
    profile: ProfileBody = Field(default_factory=ProfileBody)
    config: ConfigBody = Field(default_factory=ConfigBody)
    shelf: list[ShelfBlockBody] = Field(default_factory=list)
    count: int = Field(default=1)

    @field_validator("count")
    @classmethod
    def _allowed_count(cls, v):
        if v not in (1, 3, 5):
            raise ValueError("count must be 1, 3, or 5")
        return v


class EditBody(BaseModel):
    position: float = Field(ge=0.0, le=1.0)
    lab: list[float] = Field(min_length=3, max_length=3)
    extent: Optional[float] = Field(default=None, gt=0.0, le=1.0)


class RefineBody(BaseModel):
    document: dict
    shelf: Optional[list[ShelfBlockBody]] = None
    edits: list[EditBody] = Field(default_factory=list)
    config: Optional[ConfigBody] = None


class EvaluateBody(BaseModel):
    document: dict
    cvd: str = "deutan:1"


# -- jobs ---------------------------------------------------------------------


def _shelf_from_bodies(blocks: list[ShelfBlockBody]) -> PreferenceShelf:
    from .preference import PreferenceBlock

    return PreferenceShelf(
        blocks=tuple(
            PreferenceBlock(color=tuple(b.lab), center=b.center, extent=b.extent)
            for b in blocks
        )
    )


@dataclass
class Job:
    id: str
    profile: LuminanceProfile
    config: OptimizerConfig
    shelf: PreferenceShelf
    initial: Optional[ColormapDocument] = None
    state: str = "queued"
    progress: Optional[dict] = None
    result: Optional[ColormapDocument] = None
    error: Optional[str] = None
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    cancel_token: CancelToken = field(default_factory=CancelToken)
    subscribers: list[queue.Queue] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def snapshot(self) -> dict:
        with self.lock:
            return {
                "id": self.id,
                "state": self.state,
                "request": {
                    "profile": self.profile.to_dict(),
                    "shelf": self.shelf.to_json(),
                    "config": {
                        "iter_count": self.config.iter_count,
                        "seed": self.config.seed,
                        "cvd": self.config.cvd.spec_string(),
                    },
                    "warm_start": self.initial is not None,
                },
                "seed": self.config.seed,
                "progress": self.progress,
                "result": self.result.to_json_dict() if self.result else None,
                "error": self.error,
                "created": self.created,
                "updated": self.updated,
            }

    def _publish(self, event: str, data: dict):
        for q in list(self.subscribers):
            q.put((event, data))


class JobManager:
    """Runs optimization jobs on worker threads with a bounded history."""

    def __init__(self, parallel: bool = False, capacity: int = 100):
        self.capacity = capacity
        self._jobs: dict[str, Job] = {}
        self._order: list[str] = []
        self._lock = threading.Lock()
        self._executor = ThreadPoolExecutor(max_workers=4 if parallel else 1)

    def submit(
        self,
        profile: LuminanceProfile,
        config: OptimizerConfig,
        shelf: PreferenceShelf,
        initial: Optional[ColormapDocument] = None,
    ) -> Job:
        job = Job(
            id=uuid.uuid4().hex[:12],
            profile=profile,
            config=config,
            shelf=shelf,
            initial=initial,
        )
        with self._lock:
            self._jobs[job.id] = job
            self._order.append(job.id)
            self._evict()
        self._executor.submit(self._run, job)
        return job

    def _evict(self):
        # drop oldest finished jobs beyond capacity; running jobs are kept
        while len(self._order) > self.capacity:
            for jid in self._order:
                if self._jobs[jid].state in ("done", "cancelled", "failed"):
                    self._order.remove(jid)
                    del self._jobs[jid]
                    break
            else:
                break

    def get(self, job_id: str) -> Job:
        with self._lock:
            if job_id not in self._jobs:
                raise KeyError(job_id)
            return self._jobs[job_id]

    def jobs(self) -> list[Job]:
        with self._lock:
            return [self._jobs[j] for j in self._order]

    def _run(self, job: Job):
        with job.lock:
            if job.cancel_token.is_set():
                job.state = "cancelled"
                job.updated = time.time()
                job._publish("cancelled", {"id": job.id})
                return
            job.state = "running"
            job.updated = time.time()

        def on_progress(p: AnnealProgress):
            payload = {
                "temperature": p.temperature,
                "iterations_done": p.iterations_done,
                "rung": p.rung,
                "rung_total": p.rung_total,
                "cost": {
                    "uniformity": p.cost.uniformity,
                    "smoothness": p.cost.smoothness,
                    "cvd": p.cost.cvd,
                    "total": p.cost.total,
                },
                "hex": srgb_to_hex(lab_to_srgb(p.best.points)),
            }
            with job.lock:
                job.progress = payload
                job.updated = time.time()
            job._publish("progress", payload)

        try:
            initial = job.initial.colormap() if job.initial is not None else None
            result = optimize(
                job.profile,
                job.config,
                shelf=job.shelf,
                initial=initial,
                progress=on_progress,
                cancel=job.cancel_token,
            )
            doc = ColormapDocument.from_result(result, job.config, shelf=job.shelf)
            with job.lock:
                job.result = doc
                job.state = "cancelled" if result.cancelled else "done"
                job.updated = time.time()
            job._publish(job.state, {"id": job.id, "result": doc.to_json_dict()})
        except Exception as exc:  # surfaced via the job record
            with job.lock:
                job.state = "failed"
                job.error = str(exc)
                job.updated = time.time()
            job._publish("failed", {"id": job.id, "error": str(exc)})

    def cancel(self, job_id: str) -> Job:
        job = self.get(job_id)
        job.cancel_token.set()
        # a queued job flips immediately; a running one is flipped by its worker
        with job.lock:
            if job.state == "queued":
                job.state = "cancelled"
                job.updated = time.time()
        return job


# -- HTTP app ------------------------------------------------------------------


def _document_from_dict(d: dict) -> ColormapDocument:
    try:
        return ColormapDocument.from_json_dict(d)
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def create_app(parallel: bool = False, capacity: int = 100, serve_ui: bool = True) -> FastAPI:
    app = FastAPI(title="ramplab", version="0.1.0")
    manager = JobManager(parallel=parallel, capacity=capacity)
    app.state.manager = manager

    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def _validation_to_400(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={
                "detail": [
                    {"field": ".".join(str(p) for p in e["loc"]), "message": e["msg"]}
                    for e in exc.errors()
                ]
            },
        )

    @app.post("/api/generate", status_code=202)
    def generate(body: GenerateBody):
        profile = body.profile.build()
        shelf = _shelf_from_bodies(body.shelf)
        base_seed = body.config.seed
        ids = []
        for i in range(body.count):
            seed = None if base_seed is None else base_seed + i
            config = body.config.build(seed=seed)
            if config.seed is None:
                config = OptimizerConfig(
                    **{**config.__dict__, "seed": int(np.random.SeedSequence().entropy % (2**63))}
                )
            job = manager.submit(profile, config, shelf)
            ids.append(job.id)
        return {"jobs": ids}

    @app.get("/api/jobs")
    def list_jobs():
        return {"jobs": [j.snapshot() for j in manager.jobs()]}

    @app.get("/api/jobs/{job_id}")
    def get_job(job_id: str):
        try:
            return manager.get(job_id).snapshot()
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no job {job_id}")

    @app.get("/api/jobs/{job_id}/events")
    def job_events(job_id: str):
        try:
            job = manager.get(job_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no job {job_id}")

        def stream():
            q: queue.Queue = queue.Queue()
            with job.lock:
                state = job.state
                progress = job.progress
                result = job.result
                job.subscribers.append(q)
            try:
                if progress is not None:
                    yield f"event: progress\ndata: {json.dumps(progress)}\n\n"
                if state in ("done", "cancelled", "failed"):
                    payload = {"id": job.id}
                    if result is not None:
                        payload["result"] = result.to_json_dict()
                    if job.error:
                        payload["error"] = job.error
                    yield f"event: {state}\ndata: {json.dumps(payload)}\n\n"
                    return
                while True:
                    event, data = q.get()
                    yield f"event: {event}\ndata: {json.dumps(data)}\n\n"
                    if event in ("done", "cancelled", "failed"):
                        return
            finally:
                with job.lock:
                    if q in job.subscribers:
                        job.subscribers.remove(q)

        return StreamingResponse(stream(), media_type="text/event-stream")

    @app.post("/api/jobs/{job_id}/cancel")
    def cancel_job(job_id: str):
        try:
            return manager.cancel(job_id).snapshot()
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no job {job_id}")

    @app.post("/api/refine", status_code=202)
    def refine_endpoint(body: RefineBody):
        doc = _document_from_dict(body.document)
        if doc.profile is None:
            raise HTTPException(status_code=400, detail="document has no profile to refine against")
        shelf = _shelf_from_bodies(body.shelf) if body.shelf is not None else doc.shelf
        for edit in body.edits:
            shelf = absorb_edit(shelf, edit.position, tuple(edit.lab), extent=edit.extent)
        if body.config is not None:
            config = body.config.build()
        else:
            config = config_from_snapshot(doc.config)
        if config.seed is None:
            config = OptimizerConfig(
                **{**config.__dict__, "seed": int(np.random.SeedSequence().entropy % (2**63))}
            )
        job = manager.submit(doc.profile, config, shelf, initial=doc)
        return {"jobs": [job.id]}

    @app.post("/api/evaluate")
    def evaluate_endpoint(body: EvaluateBody):
        doc = _document_from_dict(body.document)
        model = CvdModel.parse(body.cvd)
        report = evaluate(doc.points, model if not model.is_identity else CvdModel())
        simulated = simulate(doc.points, model)
        return {
            "report": report.to_dict(),
            "hex": doc.hex_stops,
            "simulated_hex": srgb_to_hex(lab_to_srgb(simulated)),
        }

    @app.get("/api/suggestions")
    def suggestions_endpoint(doc: str = Query(...), t: float = Query(ge=0.0, le=1.0)):
        try:
            document = ColormapDocument.import_(doc, "json")
        except DocumentError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return suggestions(document.points, t)

    @app.get("/api/benchmarks")
    def benchmarks_endpoint():
        out = []
        for name in benchmark_names():
            bm = benchmark(name)
            pts = bm.lab_points()
            out.append(
                {
                    "name": name,
                    "family": bm.family,
                    "source": bm.source,
                    "points": [list(p) for p in pts.tolist()],
                    "hex": srgb_to_hex(lab_to_srgb(pts)),
                }
            )
        return {"benchmarks": out}

    @app.get("/api/preview/{job_id}.png")
    def preview(job_id: str):
        try:
            job = manager.get(job_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no job {job_id}")
        with job.lock:
            doc = job.result
        if doc is None:
            raise HTTPException(status_code=404, detail="job has no result yet")
        return Response(content=ramp_strip(doc.points), media_type="image/png")

    if serve_ui:
        _mount_ui(app)

    return app


def _mount_ui(app: FastAPI):
    """Serve the studio frontend when its build output is present."""
    import pathlib

    from fastapi.staticfiles import StaticFiles

    candidates = [
        pathlib.Path(__file__).resolve().parents[2] / "frontend" / "dist",
        pathlib.Path.cwd() / "frontend" / "dist",
    ]
    for root in candidates:
        if root.is_dir():
            app.mount("/", StaticFiles(directory=str(root), html=True), name="ui")
            return
