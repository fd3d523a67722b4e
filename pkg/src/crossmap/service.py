"""HTTP API exposing engines as sessions over loaded app configs.

One server process hosts any number of apps; dataset and index memory is
shared immutably across sessions of the same app, while each session owns its
own filter state. Mutations are serialized per session, so every StatePayload
reflects one consistent snapshot.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.staticfiles import StaticFiles

from .engine import (
    BBox,
    Bin,
    Engine,
    GroupResult,
    PathPrefix,
    Range,
    RollupNode,
    TablePage,
    Term,
    ValueSet,
)
from .errors import (
    CrossmapError,
    IllegalFilterKind,
    InvalidBbox,
    InvalidFilterSpec,
    UnknownDimension,
    UnknownSortColumn,
)
from .geo import cluster
from .ingest import App, AppConfig, build_app, load_config
from .textviz import term_counts

DEFAULT_TTL_S = 1800
WORLD_ZOOM = 2


# --- wire format ----------------------------------------------------------

def filter_from_json(doc: dict) -> Any:
    kind = doc.get("type")
    try:
        if kind == "value_set":
            return ValueSet(doc["values"])
        if kind == "range":
            return Range(float(doc["lo"]), float(doc["hi"]))
        if kind == "bbox":
            return BBox(float(doc["min_lat"]), float(doc["min_lon"]),
                        float(doc["max_lat"]), float(doc["max_lon"]))
        if kind == "term":
            return Term(str(doc["term"]))
        if kind == "path_prefix":
            return PathPrefix([str(p) for p in doc["path"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise HTTPException(400, f"malformed filter payload: {exc}") from exc
    raise HTTPException(400, f"unknown filter type {kind!r}")


def filter_to_json(spec: Any) -> dict:
    if isinstance(spec, ValueSet):
        return {"type": "value_set", "values": sorted(spec.values)}
    if isinstance(spec, Range):
        return {"type": "range", "lo": spec.lo, "hi": spec.hi}
    if isinstance(spec, BBox):
        return {"type": "bbox", "min_lat": spec.min_lat, "min_lon": spec.min_lon,
                "max_lat": spec.max_lat, "max_lon": spec.max_lon}
    if isinstance(spec, Term):
        return {"type": "term", "term": spec.term}
    if isinstance(spec, PathPrefix):
        return {"type": "path_prefix", "path": list(spec.path)}
    raise TypeError(type(spec).__name__)


def _bin_json(b: Bin) -> dict:
    if b.key is not None:
        return {"key": b.key, "value": b.value}
    return {"lo": b.lo, "hi": b.hi, "value": b.value}


def group_to_json(result: GroupResult) -> dict:
    return {"dimension": result.dimension,
            "bins": [_bin_json(b) for b in result.bins]}


def rollup_to_json(node: RollupNode) -> dict:
    return {"path": list(node.path), "value": node.value,
            "children": [rollup_to_json(c) for c in node.children]}


def page_to_json(page: TablePage) -> dict:
    return {"rows": list(page.rows), "matched": page.matched,
            "visible": page.visible, "offset": page.offset, "limit": page.limit}


def clusters_to_json(clusters: list) -> list[dict]:
    return [{"zoom": c.zoom, "cell": list(c.cell), "count": c.count,
             "centroid": list(c.centroid),
             "members": list(c.members) if c.members is not None else None}
            for c in clusters]


def config_summary(config: AppConfig, app: App) -> dict:
    return {
        "title": config.title,
        "schema": [{"name": c.name, "kind": c.kind} for c in app.dataset.schema],
        "dimensions": [{"name": d.name, "kind": d.kind, "columns": list(d.columns)}
                       for d in config.dimensions],
        "components": [{"id": c.id, "kind": c.kind, "dimension": c.dimension,
                        "options": c.options} for c in config.components],
        "map_elements": {
            "title": config.map_elements.title,
            "legend": config.map_elements.legend,
            "scale_bar": config.map_elements.scale_bar,
            "north_arrow": config.map_elements.north_arrow,
            "minimap": config.map_elements.minimap,
            "basemaps": list(config.map_elements.basemaps),
        },
        "palette": list(config.palette),
        "record_count": app.dataset.record_count,
    }


# --- sessions -------------------------------------------------------------

@dataclass
class Session:
    id: str
    app_name: str
    app: App
    engine: Engine
    ttl: float
    last_touch: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def expired(self) -> bool:
        return time.monotonic() - self.last_touch > self.ttl

    def touch(self) -> None:
        self.last_touch = time.monotonic()


class SessionStore:
    def __init__(self, ttl: float):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, app_name: str, app: App) -> Session:
        from .engine import build_engine
        engine = build_engine(app.dataset, app.config.dimensions)
        session = Session(id=uuid.uuid4().hex, app_name=app_name, app=app,
                          engine=engine, ttl=self.ttl)
        with self._lock:
            self._sessions = {k: s for k, s in self._sessions.items()
                              if not s.expired()}
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, "unknown session")
        if session.expired():
            with self._lock:
                self._sessions.pop(session_id, None)
            raise HTTPException(410, "session expired")
        session.touch()
        return session


# --- payload assembly -----------------------------------------------------

def state_payload(session: Session) -> dict:
    engine = session.engine
    config = session.app.config
    selected, total = engine.visible_count()
    components = []
    for comp in config.components:
        data: dict[str, Any]
        if comp.kind == "map":
            data = {"zoom": WORLD_ZOOM,
                    "clusters": clusters_to_json(cluster(engine, WORLD_ZOOM,
                                                         dim=comp.dimension))}
        elif comp.kind == "sunburst":
            data = {"root": rollup_to_json(engine.hierarchy_rollup(comp.dimension))}
        elif comp.kind == "line_zoom_focus":
            data = group_to_json(engine.histogram(comp.dimension))
        elif comp.kind == "word_cloud":
            k = int(comp.options.get("k", 50))
            data = {"terms": [{"term": t.term, "frequency": t.frequency}
                              for t in term_counts(engine, k, comp.dimension)]}
        elif comp.kind == "table":
            data = page_to_json(engine.record_page(limit=int(comp.options.get("limit", 10))))
        else:  # donut, bar, row, row_xscroll
            k = comp.options.get("k")
            result = engine.top_k(comp.dimension, int(k)) if k \
                else engine.group_reduce(comp.dimension)
            data = group_to_json(result)
        components.append({"id": comp.id, "kind": comp.kind,
                           "dimension": comp.dimension, "data": data})
    return {
        "session": session.id,
        "counter": {"selected": selected, "total": total},
        "filters": {name: filter_to_json(spec)
                    for name, spec in engine.active_filters().items()},
        "components": components,
    }


# --- application ----------------------------------------------------------

def create_service(apps: dict[str, App], session_ttl: float = DEFAULT_TTL_S,
                   static_dir: str | Path | None = None) -> FastAPI:
    service = FastAPI(title="crossmap", version="0.1.0")
    store = SessionStore(ttl=session_ttl)

    @service.get("/apps")
    def list_apps() -> dict:
        return {"apps": [{"name": name, "title": app.config.title,
                          "records": app.dataset.record_count}
                         for name, app in apps.items()]}

    @service.post("/apps/{app_name}/sessions")
    def create_session(app_name: str) -> dict:
        app = apps.get(app_name)
        if app is None:
            raise HTTPException(404, f"unknown app {app_name!r}")
        session = store.create(app_name, app)
        return {"session": session.id,
                "config": config_summary(app.config, app),
                "state": state_payload(session)}

    @service.put("/sessions/{session_id}/filters/{dim}")
    def put_filter(session_id: str, dim: str, body: dict) -> dict:
        session = store.get(session_id)
        spec = filter_from_json(body)
        with session.lock:
            try:
                session.engine.set_filter(dim, spec)
            except UnknownDimension as exc:
                raise HTTPException(404, str(exc)) from exc
            except (IllegalFilterKind, InvalidFilterSpec, InvalidBbox) as exc:
                raise HTTPException(400, str(exc)) from exc
            return state_payload(session)

    @service.delete("/sessions/{session_id}/filters/{dim}")
    def delete_filter(session_id: str, dim: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            try:
                session.engine.clear_filter(dim)
            except UnknownDimension as exc:
                raise HTTPException(404, str(exc)) from exc
            return state_payload(session)

    @service.delete("/sessions/{session_id}/filters")
    def delete_all_filters(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            session.engine.clear_all()
            return state_payload(session)

    @service.get("/sessions/{session_id}/state")
    def get_state(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            return state_payload(session)

    @service.get("/sessions/{session_id}/table")
    def get_table(session_id: str, offset: int = 0, limit: int = 10,
                  sort: str | None = None, dir: str = "asc",
                  search: str | None = None) -> dict:
        session = store.get(session_id)
        if offset < 0 or limit < 1 or dir not in ("asc", "desc"):
            raise HTTPException(400, "bad table params")
        with session.lock:
            try:
                page = session.engine.record_page(offset=offset, limit=limit,
                                                  sort=sort, direction=dir,
                                                  search=search)
            except UnknownSortColumn as exc:
                raise HTTPException(400, f"unknown sort column: {exc}") from exc
        return page_to_json(page)

    @service.get("/sessions/{session_id}/clusters")
    def get_clusters(session_id: str, zoom: int = Query(..., ge=0, le=22),
                     bbox: str | None = None) -> dict:
        session = store.get(session_id)
        box = None
        if bbox:
            try:
                min_lat, min_lon, max_lat, max_lon = (float(p) for p in bbox.split(","))
                box = BBox(min_lat, min_lon, max_lat, max_lon)
            except (ValueError, InvalidBbox) as exc:
                raise HTTPException(400, f"bad bbox: {exc}") from exc
        with session.lock:
            try:
                clusters = cluster(session.engine, zoom, box)
            except CrossmapError as exc:
                raise HTTPException(400, str(exc)) from exc
        return {"zoom": zoom, "clusters": clusters_to_json(clusters)}

    @service.get("/sessions/{session_id}/terms")
    def get_terms(session_id: str, k: int = Query(50, ge=1)) -> dict:
        session = store.get(session_id)
        with session.lock:
            try:
                counts = term_counts(session.engine, k)
            except CrossmapError as exc:
                raise HTTPException(400, str(exc)) from exc
        return {"terms": [{"term": t.term, "frequency": t.frequency} for t in counts]}

    @service.get("/sessions/{session_id}/export.csv")
    def export_csv(session_id: str) -> Response:
        session = store.get(session_id)
        with session.lock:
            payload = session.engine.export_records()
        return Response(content=payload, media_type="text/csv",
                        headers={"Content-Disposition":
                                 "attachment; filename=export.csv"})

    if static_dir is not None and Path(static_dir).is_dir():
        service.mount("/", StaticFiles(directory=str(static_dir), html=True),
                      name="ui")

    return service


def service_from_configs(config_paths: list[str | Path],
                         session_ttl: float = DEFAULT_TTL_S,
                         static_dir: str | Path | None = None) -> FastAPI:
    apps = {}
    for path in config_paths:
        config = load_config(path)
        apps[Path(path).stem] = build_app(config)
    return create_service(apps, session_ttl=session_ttl, static_dir=static_dir)
