"""Immutable columnar store of typed records with stable ordinals.

Column storage by kind:
  numeric / geo_lat / geo_lon -> float64 ndarray, NaN marks null
  categorical / text / temporal / url / identifier -> list[str | None]
  multi_categorical -> list[list[str]] (empty list = no values)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

import numpy as np

from .errors import MissingColumn

STRING_KINDS = frozenset({"categorical", "text", "temporal", "url", "identifier"})
NUMERIC_KINDS = frozenset({"numeric", "geo_lat", "geo_lon"})
COLUMN_KINDS = STRING_KINDS | NUMERIC_KINDS | {"multi_categorical"}


@dataclass(frozen=True)
class ColumnSchema:
    name: str
    kind: str
    nullable: bool = True

    def __post_init__(self) -> None:
        if self.kind not in COLUMN_KINDS:
            raise ValueError(f"unknown column kind: {self.kind!r}")


def _freeze(kind: str, values: Sequence[Any], n: int) -> Any:
    if len(values) != n:
        raise ValueError(f"column has {len(values)} entries, expected {n}")
    if kind in NUMERIC_KINDS:
        arr = np.asarray(values, dtype=np.float64)
        arr.setflags(write=False)
        return arr
    return list(values)


@dataclass(frozen=True)
class Dataset:
    schema: tuple[ColumnSchema, ...]
    columns: dict[str, Any] = field(repr=False)
    record_count: int

    @classmethod
    def from_columns(cls, schema: Sequence[ColumnSchema],
                     columns: dict[str, Sequence[Any]],
                     record_count: int | None = None) -> "Dataset":
        names = [c.name for c in schema]
        if len(set(names)) != len(names):
            raise ValueError("duplicate column names in schema")
        if record_count is None:
            record_count = len(next(iter(columns.values()))) if columns else 0
        frozen: dict[str, Any] = {}
        for col in schema:
            if col.name not in columns:
                raise MissingColumn(col.name)
            frozen[col.name] = _freeze(col.kind, columns[col.name], record_count)
        return cls(schema=tuple(schema), columns=frozen, record_count=record_count)

    def column_schema(self, name: str) -> ColumnSchema:
        for col in self.schema:
            if col.name == name:
                return col
        raise MissingColumn(name)

    def has_column(self, name: str) -> bool:
        return any(c.name == name for c in self.schema)

    def column(self, name: str) -> Any:
        try:
            return self.columns[name]
        except KeyError:
            raise MissingColumn(name) from None

    def cell(self, name: str, ordinal: int) -> Any:
        """Value at (column, record); numeric nulls come back as None."""
        col = self.column(name)
        v = col[ordinal]
        if isinstance(v, (float, np.floating)) and math.isnan(v):
            return None
        if isinstance(v, np.floating):
            return float(v)
        return v

    def record(self, ordinal: int) -> dict[str, Any]:
        return {c.name: self.cell(c.name, ordinal) for c in self.schema}

    def records(self) -> Iterator[dict[str, Any]]:
        for i in range(self.record_count):
            yield self.record(i)

    def equals(self, other: "Dataset") -> bool:
        """Structural equality; NaN numeric cells compare equal."""
        if self.schema != other.schema or self.record_count != other.record_count:
            return False
        for col in self.schema:
            a, b = self.columns[col.name], other.columns[col.name]
            if col.kind in NUMERIC_KINDS:
                if not np.array_equal(a, b, equal_nan=True):
                    return False
            elif list(a) != list(b):
                return False
        return True
