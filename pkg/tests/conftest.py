import math
import random
from pathlib import Path

import pytest

from crossmap import (
    BBox,
    ColumnSchema,
    Dataset,
    DimensionSpec,
    PathPrefix,
    Range,
    Term,
    ValueSet,
    build_engine,
)

from .oracle import Oracle

APPS_DIR = Path(__file__).resolve().parents[1] / "apps"

CATS = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta",
        "eta", "theta", "iota", "kappa", "lambda", "mu"]
TAGS = ["ndvi", "sar", "lidar", "optical", "thermal", "radar", "dem",
        "hyperspectral", "uav", "ground-truth", "landsat", "sentinel",
        "modis", "planet", "viirs"]
WORDS = ["mapping", "the", "of", "flood", "drought", "yield", "maize",
         "wheat", "a", "model", "deep", "learning", "random", "forest",
         "soil", "moisture", "satellite", "time", "series", "x", "is",
         "detection", "classification", "urban", "growth", "2020"]
CONTINENTS = {
    "Europe": ["Denmark", "Finland", "Poland", None],
    "Asia": ["Kazakhstan", "UAE", "Japan", None],
    "Africa": ["Ethiopia", "Kenya", None],
    "Americas": ["Brazil", "Canada", None],
}


def make_random_rows(n: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for i in range(n):
        continent = rng.choice([*CONTINENTS, None]) if rng.random() < 0.97 \
            else None
        country = rng.choice(CONTINENTS[continent]) if continent else None
        rows.append({
            "rid": f"r{i:05d}",
            "cat": rng.choice(CATS) if rng.random() > 0.05 else None,
            "score": round(rng.uniform(0, 100), 3) if rng.random() > 0.03 else None,
            "tags": sorted(set(rng.sample(TAGS, rng.randint(0, 4)))),
            "lat": round(rng.uniform(-60, 70), 4) if rng.random() > 0.03 else None,
            "lon": round(rng.uniform(-170, 170), 4) if rng.random() > 0.03 else None,
            "continent": continent,
            "country": country,
            "title": " ".join(rng.choice(WORDS) for _ in range(rng.randint(3, 9))),
        })
    return rows


SCENARIO_SCHEMA = [
    ColumnSchema("rid", "identifier"),
    ColumnSchema("cat", "categorical", nullable=True),
    ColumnSchema("score", "numeric", nullable=True),
    ColumnSchema("tags", "multi_categorical"),
    ColumnSchema("lat", "geo_lat", nullable=True),
    ColumnSchema("lon", "geo_lon", nullable=True),
    ColumnSchema("continent", "categorical", nullable=True),
    ColumnSchema("country", "categorical", nullable=True),
    ColumnSchema("title", "text"),
]

SCENARIO_SPECS = [
    DimensionSpec("cat", "categorical", ("cat",)),
    DimensionSpec("score", "scalar_ordered", ("score",)),
    DimensionSpec("tags", "multi_value", ("tags",)),
    DimensionSpec("place", "spatial", ("lat", "lon")),
    DimensionSpec("location", "hierarchy", ("continent", "country")),
    DimensionSpec("topics", "text_term", ("title", "tags")),
]


def rows_to_dataset(rows: list[dict], schema=None) -> Dataset:
    schema = schema or SCENARIO_SCHEMA
    nan = float("nan")
    columns = {}
    for col in schema:
        if col.kind in ("numeric", "geo_lat", "geo_lon"):
            columns[col.name] = [nan if r[col.name] is None else float(r[col.name])
                                 for r in rows]
        else:
            columns[col.name] = [r[col.name] for r in rows]
    return Dataset.from_columns(schema, columns)


def random_filter(rng: random.Random, kind: str):
    if rng.random() < 0.15:
        return None
    if kind == "categorical":
        pool = CATS + ["nonexistent"]
        return ValueSet(rng.sample(pool, rng.randint(1, 3)))
    if kind == "scalar_ordered":
        lo, hi = sorted(rng.uniform(-5, 105) for _ in range(2))
        return Range(lo, hi)
    if kind == "multi_value":
        return ValueSet(rng.sample(TAGS, rng.randint(1, 3)))
    if kind == "spatial":
        lats = sorted(rng.uniform(-70, 80) for _ in range(2))
        lons = sorted(rng.uniform(-180, 180) for _ in range(2))
        return BBox(lats[0], lons[0], lats[1], lons[1])
    if kind == "hierarchy":
        continent = rng.choice(list(CONTINENTS) + ["Atlantis"])
        if rng.random() < 0.5:
            return PathPrefix([continent])
        countries = [c for c in CONTINENTS.get(continent, ["Lost"]) if c]
        return PathPrefix([continent, rng.choice(countries or ["Lost"])])
    if kind == "text_term":
        return Term(rng.choice(WORDS + ["zzz"]))
    raise AssertionError(kind)


def assert_engine_matches_oracle(engine, oracle: Oracle, filters: dict,
                                 rows: list[dict]) -> None:
    """Compare every query surface of the engine against the brute-force oracle."""
    assert engine.visible_count() == oracle.visible_count(filters)

    for spec in engine.specs:
        if spec.kind in ("categorical", "multi_value", "text_term"):
            got = [(b.key, b.value) for b in engine.group_reduce(spec.name).bins]
            assert got == oracle.ordered_bins(spec.name, filters), spec.name
        elif spec.kind == "scalar_ordered":
            got = [(b.lo, b.hi, b.value)
                   for b in engine.histogram(spec.name).bins]
            assert got == oracle.histogram(spec.name, filters,
                                           width=spec.bin_width,
                                           nbins=spec.bin_count), spec.name
        elif spec.kind == "hierarchy":
            got = flatten_rollup(engine.hierarchy_rollup(spec.name))
            exp = oracle.rollup(spec.name, filters)
            assert got == exp, spec.name

    # term_counts through the word-cloud helper must agree too
    from crossmap import term_counts
    top = term_counts(engine, 25)
    dim = engine.first_dimension_of_kind("text_term")
    assert [(t.term, t.frequency) for t in top] == \
        oracle.term_counts(dim, filters, 25)

    page = engine.record_page(offset=3, limit=7)
    ords, matched, visible = oracle.page(filters, SCENARIO_SCHEMA, offset=3, limit=7)
    assert (page.matched, page.visible) == (matched, visible)
    assert [r["rid"] for r in page.rows] == [rows[i]["rid"] for i in ords]

    needle = "an"
    page = engine.record_page(limit=5, search=needle)
    ords, matched, visible = oracle.page(filters, SCENARIO_SCHEMA, limit=5,
                                         search=needle)
    assert (page.matched, page.visible) == (matched, visible)
    assert [r["rid"] for r in page.rows] == [rows[i]["rid"] for i in ords]


def flatten_rollup(node) -> dict[tuple, int]:
    out = {node.path: node.value}
    for child in node.children:
        out.update(flatten_rollup(child))
    return out


def assert_incremental_equals_batch(engine, dataset, filters: dict) -> None:
    """A fresh engine given only the final filters must agree bit for bit."""
    import numpy as np

    fresh = build_engine(dataset, engine.specs)
    for dim, spec in filters.items():
        fresh.set_filter(dim, spec)
    assert np.array_equal(engine.visible_mask(), fresh.visible_mask())
    assert engine.visible_count() == fresh.visible_count()
    for spec in engine.specs:
        if spec.kind == "spatial":
            continue
        if spec.kind == "hierarchy":
            assert engine.hierarchy_rollup(spec.name) == \
                fresh.hierarchy_rollup(spec.name)
        elif spec.kind == "scalar_ordered":
            assert engine.histogram(spec.name) == fresh.histogram(spec.name)
        else:
            assert engine.group_reduce(spec.name) == fresh.group_reduce(spec.name)


def run_scenario(seed: int, dataset, rows, oracle: Oracle,
                 max_steps: int = 10) -> None:
    rng = random.Random(seed)
    engine = build_engine(dataset, SCENARIO_SPECS)
    filters: dict = {}
    for _ in range(rng.randint(1, max_steps)):
        spec = rng.choice(SCENARIO_SPECS)
        filt = random_filter(rng, spec.kind)
        engine.set_filter(spec.name, filt)
        if filt is None:
            filters.pop(spec.name, None)
        else:
            filters[spec.name] = filt
        assert engine.visible_count() == oracle.visible_count(filters)
    assert_engine_matches_oracle(engine, oracle, filters, rows)
    assert_incremental_equals_batch(engine, dataset, filters)


@pytest.fixture(scope="session")
def scenario_data():
    rows = make_random_rows(2000, seed=424242)
    dataset = rows_to_dataset(rows)
    return dataset, rows, Oracle(rows, SCENARIO_SPECS)


@pytest.fixture(scope="session")
def literature_app():
    from crossmap import build_app, load_config
    return build_app(load_config(APPS_DIR / "literature.yaml"))


@pytest.fixture(scope="session")
def fellows_app():
    from crossmap import build_app, load_config
    return build_app(load_config(APPS_DIR / "fellows.yaml"))


@pytest.fixture(scope="session")
def universities_app():
    from crossmap import build_app, load_config
    return build_app(load_config(APPS_DIR / "universities.yaml"))


def nan_or_none(v) -> bool:
    return v is None or (isinstance(v, float) and math.isnan(v))
