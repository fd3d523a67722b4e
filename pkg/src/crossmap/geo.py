"""Web Mercator projection, bbox containment, and grid marker clustering.

Clustering is a plain zoom-dependent grid (not greedy hierarchical): every
visible point lands in exactly one cell, output order is deterministic, and a
cell at zoom z+1 maps onto its parent at zoom z under integer halving whenever
tile_px / cell_px is a power of two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import BBox, Engine
from .errors import InvalidBbox, NonFiniteInput

MAX_LATITUDE = 85.05112878  # standard Web Mercator latitude bound


@dataclass(frozen=True)
class MercatorPoint:
    x: float  # normalized world coordinate at zoom 0, east
    y: float  # normalized world coordinate at zoom 0, south


@dataclass(frozen=True)
class Cluster:
    zoom: int
    cell: tuple[int, int]  # (cx, cy)
    count: int
    centroid: tuple[float, float]  # (lat, lon), arithmetic mean of members
    members: tuple[int, ...] | None  # record ordinals, only when count <= limit


def project(lat: float, lon: float) -> MercatorPoint:
    """Normalized Web Mercator coordinates; latitude clamped to +/-85.05112878."""
    if not (math.isfinite(lat) and math.isfinite(lon)):
        raise NonFiniteInput(f"project({lat}, {lon})")
    lat = min(max(lat, -MAX_LATITUDE), MAX_LATITUDE)
    phi = math.radians(lat)
    x = (lon + 180.0) / 360.0
    y = (1.0 - math.log(math.tan(phi) + 1.0 / math.cos(phi)) / math.pi) / 2.0
    return MercatorPoint(x=x, y=y)


def bbox_pass(lat: float | None, lon: float | None, bbox: BBox) -> bool:
    """Inclusive containment; null points always fail."""
    if lat is None or lon is None or math.isnan(lat) or math.isnan(lon):
        return False
    return (bbox.min_lat <= lat <= bbox.max_lat
            and bbox.min_lon <= lon <= bbox.max_lon)


def _project_arrays(lat: np.ndarray, lon: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    clamped = np.clip(lat, -MAX_LATITUDE, MAX_LATITUDE)
    phi = np.radians(clamped)
    x = (lon + 180.0) / 360.0
    y = (1.0 - np.log(np.tan(phi) + 1.0 / np.cos(phi)) / np.pi) / 2.0
    return x, y


def cluster(engine: Engine, zoom: int, bbox: BBox | None = None,
            cell_px: int = 64, tile_px: int = 256,
            members_limit: int = 10, dim: str | None = None) -> list[Cluster]:
    """Grid clusters of the visible geo-bearing records inside bbox.

    One cluster per non-empty cell, ordered by (cy, cx); counts over all
    clusters sum exactly to the number of visible in-bbox points.
    """
    if not 0 <= zoom <= 22:
        raise ValueError(f"zoom must be in [0, 22], got {zoom}")
    lat, lon = engine.spatial_points(dim)
    with np.errstate(invalid="ignore"):
        keep = engine.visible_mask() & ~np.isnan(lat) & ~np.isnan(lon)
        if bbox is not None:
            if not (bbox.min_lat <= bbox.max_lat and bbox.min_lon <= bbox.max_lon):
                raise InvalidBbox(str(bbox))
            keep &= ((lat >= bbox.min_lat) & (lat <= bbox.max_lat)
                     & (lon >= bbox.min_lon) & (lon <= bbox.max_lon))
    idx = np.nonzero(keep)[0]
    if len(idx) == 0:
        return []
    x, y = _project_arrays(lat[idx], lon[idx])
    ncells = (1 << zoom) * tile_px / cell_px
    limit = max(int(math.ceil(ncells)) - 1, 0)
    cx = np.minimum(np.floor(x * ncells).astype(np.int64), limit)
    cy = np.minimum(np.floor(y * ncells).astype(np.int64), limit)
    order = np.lexsort((cx, cy))
    cx, cy, idx = cx[order], cy[order], idx[order]
    lat_s, lon_s = lat[idx], lon[idx]
    keys = np.stack([cy, cx], axis=1)
    change = np.ones(len(idx), dtype=bool)
    change[1:] = np.any(keys[1:] != keys[:-1], axis=1)
    starts = np.nonzero(change)[0].tolist() + [len(idx)]
    clusters = []
    for s, e in zip(starts[:-1], starts[1:]):
        count = e - s
        members = tuple(int(i) for i in idx[s:e]) if count <= members_limit else None
        clusters.append(Cluster(
            zoom=zoom,
            cell=(int(cx[s]), int(cy[s])),
            count=count,
            centroid=(float(np.mean(lat_s[s:e])), float(np.mean(lon_s[s:e]))),
            members=members,
        ))
    return clusters
