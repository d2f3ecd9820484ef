"""Local HTTP service for the curation workbench.

Single-session: one corpus loaded at startup, one mutable cast guarded by
a lock and versioned (the version increments on every accepted edit, and
analyses report the version they used).  The corpus itself is never
mutated through the API.
"""

import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .cast import Cast, CastError, ExtractionConstraints, NameEntry, extract_raw_words, format_cast_file
from .corpus import Corpus
from .metrics import KERNEL_KINDS, ProximityKernel
from .network import Thresholds, graph_payload
from .pipeline import AnalysisParams, run_analysis

_KERNEL_ALIASES = {"rect": "rectangular", "exp": "exponential"}


class CastEntryBody(BaseModel):
    canonical: str
    variants: list[str]
    kind: str = "character"


class CastBody(BaseModel):
    entries: list[CastEntryBody]
    ifVersion: int | None = None


class KernelBody(BaseModel):
    kind: str = "rectangular"
    window: int = 60
    decay: float = 40.0


class ThresholdsBody(BaseModel):
    node_min: float = 0.15
    edge_min: float = 0.15


class AnalyzeBody(BaseModel):
    unit: int | None = None
    kernel: KernelBody = KernelBody()
    thresholds: ThresholdsBody = ThresholdsBody()


class SaveBody(BaseModel):
    path: str | None = None


class Session:
    def __init__(self, corpus: Corpus, cast: Cast | None, cast_path: str | None):
        self.corpus = corpus
        self.cast = cast if cast is not None else Cast(entries=())
        self.version = 1
        self.cast_path = cast_path
        self.last_dot: str | None = None
        self.rawword_cache: dict[tuple[int, bool, int], list] = {}
        self.lock = threading.Lock()

    def snapshot(self) -> tuple[Cast, int]:
        with self.lock:
            return self.cast, self.version

    def raw_words(self, constraints: ExtractionConstraints) -> list:
        key = (constraints.min_length, constraints.capitalized_only, constraints.min_count)
        with self.lock:
            cached = self.rawword_cache.get(key)
        if cached is not None:
            return cached
        words = extract_raw_words(self.corpus, constraints)
        with self.lock:
            self.rawword_cache[key] = words
        return words


def _entries_to_cast(entries: list[CastEntryBody]) -> Cast:
    try:
        return Cast(
            entries=tuple(
                NameEntry(canonical=e.canonical, variants=tuple(e.variants), kind=e.kind)
                for e in entries
            )
        )
    except CastError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None


def _kernel_from_body(body: KernelBody) -> ProximityKernel:
    kind = _KERNEL_ALIASES.get(body.kind, body.kind)
    if kind not in KERNEL_KINDS:
        raise HTTPException(status_code=400, detail=f"unknown kernel kind {body.kind!r}")
    try:
        return ProximityKernel(kind=kind, window=body.window, decay_length=body.decay)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e)) from None


def create_app(
    corpus: Corpus, cast: Cast | None = None, cast_path: str | None = None
) -> FastAPI:
    app = FastAPI(title="castnet")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    session = Session(corpus, cast, cast_path)
    app.state.session = session

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/corpus/units")
    def corpus_units():
        return [
            {"index": u.index, "id": u.id, "tokens": len(u.tokens)}
            for u in session.corpus.units
        ]

    @app.get("/rawwords")
    def rawwords(
        minLen: int = Query(default=3),
        capitalized: bool = Query(default=True),
        minCount: int = Query(default=2),
    ):
        if minLen < 1 or minCount < 1:
            raise HTTPException(status_code=400, detail="minLen and minCount must be >= 1")
        constraints = ExtractionConstraints(
            min_length=minLen, capitalized_only=capitalized, min_count=minCount
        )
        words = session.raw_words(constraints)
        return [
            {"folded": w.folded, "count": w.count, "sample": w.sample_surface}
            for w in words
        ]

    @app.get("/cast")
    def get_cast():
        cast_now, version = session.snapshot()
        return {
            "version": version,
            "entries": [
                {"canonical": e.canonical, "kind": e.kind, "variants": list(e.variants)}
                for e in cast_now.entries
            ],
        }

    @app.put("/cast")
    def put_cast(body: CastBody):
        new_cast = _entries_to_cast(body.entries)
        with session.lock:
            if body.ifVersion is not None and body.ifVersion != session.version:
                raise HTTPException(
                    status_code=409,
                    detail=f"version mismatch: expected {body.ifVersion}, current {session.version}",
                )
            session.cast = new_cast
            session.version += 1
            return {"version": session.version}

    @app.post("/analyze")
    def analyze(body: AnalyzeBody):
        kernel = _kernel_from_body(body.kernel)
        try:
            thresholds = Thresholds(
                node_min=body.thresholds.node_min, edge_min=body.thresholds.edge_min
            )
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e)) from None
        if body.unit is not None and body.unit not in session.corpus.unit_indices:
            raise HTTPException(status_code=400, detail=f"unknown unit index {body.unit}")

        cast_now, version = session.snapshot()
        if len(cast_now) == 0:
            raise HTTPException(status_code=422, detail="cast is empty; nothing to analyze")

        result = run_analysis(
            session.corpus,
            cast_now,
            AnalysisParams(unit_index=body.unit, kernel=kernel, thresholds=thresholds),
        )
        with session.lock:
            session.last_dot = result.dot
        return {
            "castVersion": version,
            "graph": graph_payload(result.graph),
            "tables": result.tables,
            "dot": result.dot,
        }

    @app.get("/graph.dot")
    def graph_dot():
        with session.lock:
            dot = session.last_dot
        if dot is None:
            raise HTTPException(status_code=404, detail="no analysis has run yet")
        return PlainTextResponse(dot, media_type="text/vnd.graphviz")

    @app.post("/cast/save")
    def cast_save(body: SaveBody):
        target = body.path or session.cast_path
        if not target:
            raise HTTPException(status_code=400, detail="no save path configured or given")
        with session.lock:
            text = format_cast_file(session.cast)
            version = session.version
        Path(target).write_text(text, encoding="utf-8")
        return {"path": str(target), "version": version}

    return app
