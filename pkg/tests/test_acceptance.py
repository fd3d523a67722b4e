"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they pass.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from crossmap import (
    BBox,
    ColumnSchema,
    Dataset,
    DimensionSpec,
    PathPrefix,
    Range,
    ValueSet,
    build_engine,
    cluster,
    parse_tabular,
    project,
    validate_config,
)
from crossmap.geo import MAX_LATITUDE

from .conftest import (
    APPS_DIR,
    SCENARIO_SPECS,
    make_random_rows,
    random_filter,
    rows_to_dataset,
    run_scenario,
)
from .oracle import Oracle


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"FAIL {name}")
        raise
    print(f"PASS {name}")


def test_oracle_equivalence_200_scenarios(scenario_data):
    with criterion("oracle equivalence: 200 randomized scenarios, exact match"):
        dataset, rows, oracle = scenario_data
        start = time.perf_counter()
        for seed in range(200):
            run_scenario(50_000 + seed, dataset, rows, oracle)
        elapsed = time.perf_counter() - start
        assert elapsed < 120, f"suite took {elapsed:.0f}s, budget 120s"


@pytest.mark.slow
def test_latency_one_million_records():
    with criterion("latency: 1M records x 8 dims, median < 30ms, p95 < 60ms"):
        from crossmap.bench import run_bench
        start = time.perf_counter()
        result = run_bench(records=1_000_000, dims=8, iters=50)
        total = time.perf_counter() - start
        print(f"  median {result.median_ms:.1f}ms p95 {result.p95_ms:.1f}ms "
              f"build {result.build_s:.1f}s total {total:.0f}s")
        assert result.median_ms < 30.0
        assert result.p95_ms < 60.0
        assert total < 300, f"data-gen + bench took {total:.0f}s, budget 300s"


def test_counter_reproduction(literature_app, fellows_app, universities_app):
    with criterion("counters: (200,200), (71,71), (1497,1497)"):
        assert literature_app.engine.visible_count() == (200, 200)
        assert fellows_app.engine.visible_count() == (71, 71)
        assert universities_app.engine.visible_count() == (1497, 1497)


def test_ten_row_micro_fixture():
    with criterion("micro-fixture: rollup {Europe:7, Asia:2, Africa:1}, "
                   "Denmark 2, search 'aalborg' -> 1"):
        data = (APPS_DIR / "universities_mini.csv").read_bytes()
        engine = build_engine(parse_tabular(data, "csv"), [
            DimensionSpec("location", "hierarchy",
                          ("continent", "country", "city"))])
        assert engine.visible_count() == (10, 10)
        root = engine.hierarchy_rollup("location")
        assert {n.path[-1]: n.value for n in root.children} == \
            {"Europe": 7, "Asia": 2, "Africa": 1}
        europe = next(n for n in root.children if n.path == ("Europe",))
        denmark = next(n for n in europe.children if n.path[-1] == "Denmark")
        assert denmark.value == 2
        assert engine.record_page(search="aalborg").matched == 1


def test_multi_value_semantics():
    with criterion("multi-value semantics: {B}->2, {C}->1, {C,D}->2"):
        ds = Dataset.from_columns(
            [ColumnSchema("kw", "multi_categorical")],
            {"kw": [["A", "B", "C"], ["A", "B", "D"]]})
        engine = build_engine(ds, [DimensionSpec("kw", "multi_value", ("kw",))])
        engine.set_filter("kw", ValueSet({"B"}))
        assert engine.visible_count()[0] == 2
        engine.set_filter("kw", ValueSet({"C"}))
        assert engine.visible_count()[0] == 1
        engine.set_filter("kw", ValueSet({"C", "D"}))
        assert engine.visible_count()[0] == 2


def test_self_exclusion_and_incremental_batch_invariants(scenario_data):
    with criterion("invariants: self-exclusion and incremental==batch, "
                   "zero violations over randomized runs"):
        import random
        dataset, rows, oracle = scenario_data
        violations = 0
        for seed in range(50):
            rng = random.Random(90_000 + seed)
            engine = build_engine(dataset, SCENARIO_SPECS)
            filters: dict = {}
            for _ in range(rng.randint(1, 10)):
                spec = rng.choice(SCENARIO_SPECS)
                filt = random_filter(rng, spec.kind)
                engine.set_filter(spec.name, filt)
                if filt is None:
                    filters.pop(spec.name, None)
                else:
                    filters[spec.name] = filt
            # incremental == batch, bit for bit
            fresh = build_engine(dataset, SCENARIO_SPECS)
            for name, filt in filters.items():
                fresh.set_filter(name, filt)
            if not np.array_equal(engine.visible_mask(), fresh.visible_mask()):
                violations += 1
            def query(eng, spec):
                if spec.kind == "hierarchy":
                    return eng.hierarchy_rollup(spec.name)
                if spec.kind == "scalar_ordered":
                    return eng.histogram(spec.name)
                return eng.group_reduce(spec.name)

            groupable = [s for s in SCENARIO_SPECS if s.kind != "spatial"]
            for spec in groupable:
                if query(engine, spec) != query(fresh, spec):
                    violations += 1
            # self-exclusion: changing a dim's own filter leaves its groups alone
            for spec in groupable:
                before = query(engine, spec)
                engine.set_filter(spec.name, random_filter(rng, spec.kind))
                if query(engine, spec) != before:
                    violations += 1
        assert violations == 0


def test_validator_goldens(literature_app, fellows_app, universities_app,
                           tmp_path):
    with criterion("validator goldens: mismatch errors, red+green warning, "
                   "shipped configs clean"):
        from crossmap.ingest import (
            AppConfig, ComponentSpec, DatasetSource, MapElements)
        base_dims = (
            DimensionSpec("place", "spatial", ("lat", "lon")),
            DimensionSpec("score", "scalar_ordered", ("score",)),
            DimensionSpec("cat", "categorical", ("cat",)),
        )
        base_comps = (ComponentSpec("map", "map", "place"),
                      ComponentSpec("table", "table"))

        def config(extra=(), palette=()):
            return AppConfig(
                title="t", dataset=DatasetSource(path="x.csv"), columns=(),
                dimensions=base_dims, components=base_comps + tuple(extra),
                map_elements=MapElements(title="t", legend=True, scale_bar=True,
                                         north_arrow=True),
                palette=tuple(palette), base_dir=tmp_path)

        donut_numeric = validate_config(config([ComponentSpec("donut", "d", "score")]))
        assert [d.rule for d in donut_numeric if d.severity == "error"] == \
            ["chart_data_mismatch"]
        line_cat = validate_config(
            config([ComponentSpec("line_zoom_focus", "l", "cat")]))
        assert [d.rule for d in line_cat if d.severity == "error"] == \
            ["chart_data_mismatch"]
        redgreen = validate_config(config(palette=["#d62728", "#2ca02c"]))
        assert any(d.rule == "redgreen_palette" and d.severity == "warning"
                   for d in redgreen)
        for app in (literature_app, fellows_app, universities_app):
            diags = validate_config(app.config, app.dataset)
            assert [d for d in diags if d.severity == "error"] == []


def test_geo_criteria(literature_app):
    with criterion("geo: projection spot values, cluster sums zooms 0-6, "
                   "zoom refinement"):
        p = project(0.0, 0.0)
        assert (p.x, p.y) == (0.5, 0.5)
        top = project(MAX_LATITUDE, 0.0)
        assert abs(top.y - 0.0) < 1e-9
        engine = literature_app.engine
        engine.clear_all()
        lat, lon = engine.spatial_points()
        in_bbox = BBox(-40.0, -130.0, 70.0, 60.0)
        for zoom in range(0, 7):
            full = cluster(engine, zoom)
            n_points = int(np.count_nonzero(~np.isnan(lat) & ~np.isnan(lon)))
            assert sum(c.count for c in full) == n_points
            boxed = cluster(engine, zoom, bbox=in_bbox)
            expected = int(np.count_nonzero(
                (lat >= in_bbox.min_lat) & (lat <= in_bbox.max_lat)
                & (lon >= in_bbox.min_lon) & (lon <= in_bbox.max_lon)))
            assert sum(c.count for c in boxed) == expected
        for zoom in range(0, 6):
            parent = {}
            for c in cluster(engine, zoom, members_limit=10_000):
                for m in c.members:
                    parent[m] = c.cell
            for c in cluster(engine, zoom + 1, members_limit=10_000):
                for m in c.members:
                    assert (c.cell[0] // 2, c.cell[1] // 2) == parent[m]


def test_export_round_trip_all_fixtures(literature_app, fellows_app,
                                        universities_app):
    with criterion("export round-trip: parse -> export -> parse on all "
                   "three fixtures"):
        for app in (literature_app, fellows_app, universities_app):
            app.engine.clear_all()
            exported = app.engine.export_records()
            overrides = {c.name: c.kind for c in app.config.columns if c.kind}
            reparsed = parse_tabular(exported, "csv", overrides=overrides)
            assert reparsed.equals(app.dataset)
