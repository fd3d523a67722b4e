"""Marker clustering and hierarchy rollups on the universities app.

Run from the repository root:

    python3 demos/map_clustering_tour.py
"""

from pathlib import Path

from crossmap import BBox, PathPrefix, build_app, cluster, load_config

APPS = Path(__file__).resolve().parents[1] / "apps"


def main() -> None:
    app = build_app(load_config(APPS / "universities.yaml"))
    engine = app.engine
    print(f"== {app.config.title} ==")

    print("\nCluster counts shrink as the grid refines with zoom:")
    for zoom in range(0, 6):
        clusters = cluster(engine, zoom)
        largest = max(c.count for c in clusters)
        print(f"  zoom {zoom}: {len(clusters):4d} clusters, largest {largest}")

    print("\nZoom 4 over Europe only:")
    europe = BBox(35.0, -10.0, 60.0, 30.0)
    for c in cluster(engine, 4, bbox=europe)[:6]:
        lat, lon = c.centroid
        print(f"  cell {c.cell}  count {c.count:4d}  centroid ({lat:.1f}, {lon:.1f})")

    print("\nSunburst rollup, continent ring:")
    root = engine.hierarchy_rollup("location")
    for node in root.children:
        print(f"  {node.path[-1]:15s} {node.value:5d}")

    print("\nClick the Europe > Denmark slice (a path-prefix filter):")
    engine.set_filter("location", PathPrefix(["Europe", "Denmark"]))
    selected, total = engine.visible_count()
    print(f"  {selected} selected out of {total} records")
    for row in engine.record_page(limit=5).rows:
        print(f"  {row['university']} ({row['city']})")

    engine.clear_all()


if __name__ == "__main__":
    main()
