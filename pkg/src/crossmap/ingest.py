"""CSV/JSON/GeoJSON ingestion, declarative app configs, and config linting.

The chart/data-type compatibility rules live in one table
(COMPONENT_DIMENSION_KINDS); the validator reads it rather than scattering
per-chart branches.
"""

from __future__ import annotations

import csv
import colorsys
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .dataset import ColumnSchema, Dataset, NUMERIC_KINDS
from .engine import DimensionSpec, Engine, build_engine
from .errors import (
    EmptySample,
    LatLonOutOfRange,
    MalformedInput,
    NonPointGeometry,
    TypeCoercionFailure,
)

LAT_NAMES = frozenset({"lat", "latitude"})
LON_NAMES = frozenset({"lon", "lng", "long", "longitude"})

COMPONENT_KINDS = ("map", "donut", "bar", "row", "row_xscroll", "sunburst",
                   "line_zoom_focus", "word_cloud", "table")

# One row per component kind: which dimension kinds it may bind.
COMPONENT_DIMENSION_KINDS: dict[str, frozenset[str]] = {
    "map": frozenset({"spatial"}),
    "donut": frozenset({"categorical", "multi_value"}),
    "bar": frozenset({"categorical", "multi_value"}),
    "row": frozenset({"categorical", "multi_value"}),
    "row_xscroll": frozenset({"categorical", "multi_value"}),
    "sunburst": frozenset({"hierarchy"}),
    "line_zoom_focus": frozenset({"scalar_ordered"}),
    "word_cloud": frozenset({"text_term"}),
    "table": frozenset(),
}

RED_HUES = ((0.0, 20.0), (340.0, 360.0))
GREEN_HUES = ((90.0, 150.0),)
BRUSHING_MIN_SPAN = 8


# --- parsing --------------------------------------------------------------

def infer_schema(header: list[str], rows: list[list[str]],
                 overrides: dict[str, str] | None = None) -> list[ColumnSchema]:
    """Numeric iff every non-empty cell parses as a number; lat/lon by name."""
    if not rows:
        raise EmptySample("cannot infer a schema from zero rows")
    overrides = overrides or {}
    schema = []
    for j, name in enumerate(header):
        if name in overrides:
            schema.append(ColumnSchema(name=name, kind=overrides[name]))
            continue
        lowered = name.lower()
        if lowered in LAT_NAMES:
            kind = "geo_lat"
        elif lowered in LON_NAMES:
            kind = "geo_lon"
        else:
            cells = [r[j] for r in rows if j < len(r) and r[j] != ""]
            kind = "numeric" if cells and all(_is_number(c) for c in cells) else "text"
        schema.append(ColumnSchema(name=name, kind=kind))
    return schema


def _is_number(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False


def _coerce(cell: str, col: ColumnSchema, line: int, delimiter: str):
    if col.kind in NUMERIC_KINDS:
        if cell == "":
            return float("nan")
        try:
            v = float(cell)
        except ValueError:
            raise TypeCoercionFailure(
                f"column {col.name!r}, line {line}: {cell!r} is not numeric") from None
        if col.kind == "geo_lat" and not -90.0 <= v <= 90.0:
            raise LatLonOutOfRange(f"line {line}: latitude {v}")
        if col.kind == "geo_lon" and not -180.0 <= v <= 180.0:
            raise LatLonOutOfRange(f"line {line}: longitude {v}")
        return v
    if col.kind == "multi_categorical":
        return [e.strip() for e in cell.split(delimiter) if e.strip()]
    return None if cell == "" else cell


def parse_tabular(data: bytes | str, format: str = "csv",
                  schema: list[ColumnSchema] | None = None,
                  overrides: dict[str, str] | None = None,
                  delimiters: dict[str, str] | None = None) -> Dataset:
    """Parse CSV (RFC 4180), JSON records, or GeoJSON Points into a Dataset.

    `overrides` force a column kind when `schema` is inferred; `delimiters`
    set the per-column splitter for multi_categorical cells (default ",").
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8-sig")
    delimiters = delimiters or {}
    if format == "csv":
        return _parse_csv(data, schema, overrides, delimiters)
    if format == "json_records":
        records = json.loads(data)
        if not isinstance(records, list):
            raise MalformedInput("json_records input must be a JSON array of objects")
        return _parse_records(records, schema, overrides, delimiters)
    if format == "geojson_points":
        return _parse_geojson(data, schema, overrides, delimiters)
    raise ValueError(f"unknown format {format!r}")


def _parse_csv(text: str, schema, overrides, delimiters) -> Dataset:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedInput("missing header row") from None
    raw = []
    for line, row in enumerate(reader, start=2):
        if len(row) != len(header):
            raise MalformedInput(
                f"line {line}: {len(row)} fields, expected {len(header)}")
        raw.append(row)
    if schema is None:
        if raw:
            schema = infer_schema(header, raw, overrides)
        else:
            overrides = overrides or {}
            schema = [ColumnSchema(name=n, kind=overrides.get(n, "text"))
                      for n in header]
    columns: dict[str, list] = {c.name: [] for c in schema}
    positions = {c.name: header.index(c.name) for c in schema}
    for line, row in enumerate(raw, start=2):
        for col in schema:
            delim = delimiters.get(col.name, ",")
            columns[col.name].append(_coerce(row[positions[col.name]], col, line, delim))
    return Dataset.from_columns(schema, columns, record_count=len(raw))


def _parse_records(records: list[dict], schema, overrides, delimiters,
                   start_line: int = 1) -> Dataset:
    if schema is None:
        header: list[str] = []
        for rec in records:
            for key in rec:
                if key not in header:
                    header.append(key)
        rows = [[_cell_to_str(rec.get(k)) for k in header] for rec in records]
        if rows:
            schema = infer_schema(header, rows, overrides)
        else:
            overrides = overrides or {}
            schema = [ColumnSchema(name=n, kind=overrides.get(n, "text"))
                      for n in header]
    columns: dict[str, list] = {c.name: [] for c in schema}
    for line, rec in enumerate(records, start=start_line):
        for col in schema:
            v = rec.get(col.name)
            delim = delimiters.get(col.name, ",")
            if isinstance(v, list):
                if col.kind != "multi_categorical":
                    raise TypeCoercionFailure(
                        f"column {col.name!r}, record {line}: unexpected array")
                columns[col.name].append([str(e).strip() for e in v if str(e).strip()])
            elif isinstance(v, (int, float)) and not isinstance(v, bool):
                columns[col.name].append(_coerce(repr(float(v)), col, line, delim))
            else:
                columns[col.name].append(_coerce("" if v is None else str(v),
                                                 col, line, delim))
    return Dataset.from_columns(schema, columns, record_count=len(records))


def _cell_to_str(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return repr(float(v))
    if isinstance(v, list):
        return ",".join(str(e) for e in v)
    return str(v)


def _parse_geojson(text: str, schema, overrides, delimiters) -> Dataset:
    doc = json.loads(text)
    features = doc.get("features")
    if doc.get("type") != "FeatureCollection" or not isinstance(features, list):
        raise MalformedInput("expected a GeoJSON FeatureCollection")
    records = []
    for i, feature in enumerate(features):
        geom = feature.get("geometry") or {}
        if geom.get("type") != "Point":
            raise NonPointGeometry(f"feature {i}: {geom.get('type')!r}")
        lon, lat = geom["coordinates"][:2]
        rec = dict(feature.get("properties") or {})
        rec["lat"] = lat
        rec["lon"] = lon
        records.append(rec)
    overrides = dict(overrides or {})
    overrides.setdefault("lat", "geo_lat")
    overrides.setdefault("lon", "geo_lon")
    return _parse_records(records, schema, overrides, delimiters)


# --- app config -----------------------------------------------------------

@dataclass(frozen=True)
class DatasetSource:
    path: str
    format: str = "csv"


@dataclass(frozen=True)
class ColumnOverride:
    name: str
    kind: str | None = None
    delimiter: str | None = None


@dataclass(frozen=True)
class ComponentSpec:
    kind: str
    id: str
    dimension: str | None = None
    options: dict = field(default_factory=dict)


@dataclass(frozen=True)
class MapElements:
    title: str | None = None
    legend: bool = False
    scale_bar: bool = False
    north_arrow: bool = False
    minimap: bool = False
    basemaps: tuple[str, ...] = ()


@dataclass(frozen=True)
class AppConfig:
    title: str
    dataset: DatasetSource
    columns: tuple[ColumnOverride, ...]
    dimensions: tuple[DimensionSpec, ...]
    components: tuple[ComponentSpec, ...]
    map_elements: MapElements
    palette: tuple[str, ...]
    base_dir: Path

    def dimension(self, name: str) -> DimensionSpec | None:
        for d in self.dimensions:
            if d.name == name:
                return d
        return None


def config_schema() -> dict:
    """The published JSON Schema describing app config files."""
    from importlib import resources
    text = resources.files("crossmap").joinpath(
        "data/appconfig.schema.json").read_text("utf-8")
    return json.loads(text)


def load_config(path: str | Path) -> AppConfig:
    path = Path(path)
    doc = yaml.safe_load(path.read_text("utf-8"))
    if not isinstance(doc, dict):
        raise MalformedInput(f"{path}: config must be a mapping")
    src = doc.get("dataset") or {}
    columns = tuple(
        ColumnOverride(name=c["name"], kind=c.get("kind"), delimiter=c.get("delimiter"))
        for c in doc.get("columns", []))
    dimensions = tuple(
        DimensionSpec(name=d["name"], kind=d["kind"], columns=tuple(d["columns"]),
                      bin_width=d.get("bin_width"), bin_count=d.get("bin_count"))
        for d in doc.get("dimensions", []))
    components = []
    for i, c in enumerate(doc.get("components", [])):
        kind = c.get("kind", "")
        components.append(ComponentSpec(
            kind=kind,
            id=c.get("id", f"{kind}-{i}"),
            dimension=c.get("dimension"),
            options=dict(c.get("options", {}))))
    me = doc.get("map_elements", {}) or {}
    return AppConfig(
        title=doc.get("title", path.stem),
        dataset=DatasetSource(path=src.get("path", ""), format=src.get("format", "csv")),
        columns=columns,
        dimensions=dimensions,
        components=tuple(components),
        map_elements=MapElements(
            title=me.get("title"),
            legend=bool(me.get("legend", False)),
            scale_bar=bool(me.get("scale_bar", False)),
            north_arrow=bool(me.get("north_arrow", False)),
            minimap=bool(me.get("minimap", False)),
            basemaps=tuple(me.get("basemaps", ())),
        ),
        palette=tuple(doc.get("palette", ())),
        base_dir=path.parent.resolve(),
    )


def load_dataset(config: AppConfig) -> Dataset:
    path = (config.base_dir / config.dataset.path).resolve()
    overrides = {c.name: c.kind for c in config.columns if c.kind}
    delimiters = {c.name: c.delimiter for c in config.columns if c.delimiter}
    return parse_tabular(path.read_bytes(), config.dataset.format,
                         overrides=overrides, delimiters=delimiters)


@dataclass(frozen=True)
class App:
    config: AppConfig
    dataset: Dataset
    engine: Engine


def build_app(config: AppConfig) -> App:
    dataset = load_dataset(config)
    engine = build_engine(dataset, config.dimensions)
    return App(config=config, dataset=dataset, engine=engine)


# --- validation -----------------------------------------------------------

@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    rule: str
    message: str
    location: str


def _hue_deg(color: str) -> float | None:
    """Hue in degrees of a #rrggbb color; None for achromatic colors."""
    c = color.lstrip("#")
    if len(c) != 6:
        return None
    r, g, b = (int(c[i:i + 2], 16) / 255.0 for i in (0, 2, 4))
    h, _l, s = colorsys.rgb_to_hls(r, g, b)
    if s == 0:
        return None
    return h * 360.0


def _in_bands(hue: float, bands) -> bool:
    return any(lo <= hue <= hi for lo, hi in bands)


def _distinct_count(dataset: Dataset, spec: DimensionSpec) -> int | None:
    if spec.kind == "categorical":
        values = dataset.column(spec.columns[0])
        return len({v for v in values if v is not None and not _is_nan(v)})
    if spec.kind == "multi_value":
        values = dataset.column(spec.columns[0])
        return len({e for vals in values for e in vals})
    if spec.kind == "scalar_ordered":
        values = dataset.column(spec.columns[0])
        return len({float(v) for v in values if not _is_nan(v)})
    return None


def _is_nan(v) -> bool:
    return isinstance(v, float) and math.isnan(v)


def validate_config(config: AppConfig, dataset: Dataset | None = None) -> list[Diagnostic]:
    """Lint a config against the compatibility matrix and design rules.

    Errors block serving; warnings do not. The brushing_low_span rule needs
    data (distinct counts) and is skipped when no dataset is given.
    """
    out: list[Diagnostic] = []

    for want in ("map", "table"):
        n = sum(1 for c in config.components if c.kind == want)
        if n != 1:
            out.append(Diagnostic("error", "component_cardinality",
                                  f"exactly one {want} component required, found {n}",
                                  want))

    for comp in config.components:
        if comp.kind not in COMPONENT_DIMENSION_KINDS:
            out.append(Diagnostic("error", "unknown_component_kind",
                                  f"unknown component kind {comp.kind!r}", comp.id))
            continue
        allowed = COMPONENT_DIMENSION_KINDS[comp.kind]
        if not allowed:
            continue  # table binds no dimension
        dim = config.dimension(comp.dimension) if comp.dimension else None
        if dim is None:
            out.append(Diagnostic("error", "unknown_dimension",
                                  f"component {comp.id!r} references missing dimension "
                                  f"{comp.dimension!r}", comp.id))
            continue
        if dim.kind not in allowed:
            out.append(Diagnostic("error", "chart_data_mismatch",
                                  f"{comp.kind} component cannot bind {dim.kind} "
                                  f"dimension {dim.name!r} (allowed: "
                                  f"{', '.join(sorted(allowed))})", comp.id))
            continue
        if comp.options.get("brushing") and dataset is not None:
            distinct = _distinct_count(dataset, dim)
            if distinct is not None and distinct < BRUSHING_MIN_SPAN:
                out.append(Diagnostic("warning", "brushing_low_span",
                                      f"brushing on dimension {dim.name!r} with only "
                                      f"{distinct} distinct values", comp.id))

    hues = [h for h in (_hue_deg(c) for c in config.palette) if h is not None]
    if any(_in_bands(h, RED_HUES) for h in hues) and \
            any(_in_bands(h, GREEN_HUES) for h in hues):
        out.append(Diagnostic("warning", "redgreen_palette",
                              "palette mixes red and green hues, hard to tell apart "
                              "for color-blind users", "palette"))

    me = config.map_elements
    for element, present in (("title", bool(me.title)), ("legend", me.legend),
                             ("scale_bar", me.scale_bar), ("north_arrow", me.north_arrow)):
        if not present:
            out.append(Diagnostic("warning", "missing_map_element",
                                  f"map is missing its {element}", f"map_elements.{element}"))

    severity_rank = {"error": 0, "warning": 1}
    out.sort(key=lambda d: (severity_rank[d.severity], d.rule, d.location, d.message))
    return out
