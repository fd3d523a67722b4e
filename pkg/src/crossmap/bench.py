"""Latency benchmark: one range-filter mutation against a large engine.

Measures the full cost of a mutation, i.e. mask maintenance plus the
recomputation of every dimension's group result, which is what a dashboard
re-renders after each interaction. Target: median < 30 ms on a million
records.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .dataset import ColumnSchema, Dataset
from .engine import DimensionSpec, Engine, Range, build_engine

_CATEGORIES = 32


@dataclass(frozen=True)
class BenchResult:
    records: int
    dims: int
    iters: int
    median_ms: float
    p95_ms: float
    build_s: float


def synthetic_dataset(records: int, dims: int, seed: int = 7) -> tuple[Dataset, list[DimensionSpec]]:
    """`dims` dimensions: two scalar, the rest categorical with 32 keys."""
    if dims < 2:
        raise ValueError("need at least 2 dimensions")
    rng = np.random.default_rng(seed)
    schema = [ColumnSchema("score", "numeric"), ColumnSchema("rank", "numeric")]
    columns: dict[str, list] = {
        "score": rng.uniform(0.0, 100.0, records),
        "rank": rng.uniform(0.0, 1000.0, records),
    }
    specs = [
        DimensionSpec("score", "scalar_ordered", ("score",)),
        DimensionSpec("rank", "scalar_ordered", ("rank",)),
    ]
    labels = [f"cat{i:02d}" for i in range(_CATEGORIES)]
    for d in range(dims - 2):
        name = f"group{d}"
        schema.append(ColumnSchema(name, "categorical"))
        codes = rng.integers(0, _CATEGORIES, records)
        columns[name] = [labels[c] for c in codes]
        specs.append(DimensionSpec(name, "categorical", (name,)))
    dataset = Dataset.from_columns(schema, columns, record_count=records)
    return dataset, specs


def run_bench(records: int = 1_000_000, dims: int = 8, iters: int = 50,
              seed: int = 7) -> BenchResult:
    t0 = time.perf_counter()
    dataset, specs = synthetic_dataset(records, dims, seed)
    engine: Engine = build_engine(dataset, specs)
    build_s = time.perf_counter() - t0
    rng = np.random.default_rng(seed + 1)
    timings = []
    for _ in range(iters):
        lo = float(rng.uniform(0.0, 80.0))
        hi = lo + float(rng.uniform(5.0, 20.0))
        t = time.perf_counter()
        engine.set_filter("score", Range(lo, hi))
        for spec in specs:
            if spec.kind != "spatial":
                engine.group_reduce(spec.name)
        engine.visible_count()
        timings.append((time.perf_counter() - t) * 1000.0)
    timings.sort()
    return BenchResult(
        records=records, dims=dims, iters=iters,
        median_ms=float(np.median(timings)),
        p95_ms=float(np.percentile(timings, 95)),
        build_s=build_s,
    )
