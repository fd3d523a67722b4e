/** Cluster map. Points are grouped server-side per zoom level; circles scale
 * with count. Pan by dragging, zoom with the +/- controls, and use the
 * "select area" mode to drag a rectangle that becomes a bounding-box filter.
 * Furniture (title, legend, scale bar, north arrow, minimap) follows the
 * app config. */

import { ACCENT, clear, h, s } from "../dom";
import { thousands } from "../format";
import { project, unproject } from "../geom";
import { componentById, type Cluster } from "../types";
import type { ViewModel } from "../viewmodel";

const W = 420;
const H = 280;
const MAX_ZOOM = 8;

export function mountMap(root: HTMLElement, componentId: string, vm: ViewModel): void {
  const comp0 = componentById(vm.current, componentId);
  const dim = comp0.dimension as string;
  let zoom = (comp0.data as { zoom: number }).zoom;
  let clusters = (comp0.data as { clusters: Cluster[] }).clusters;
  let center = { x: 0.5, y: 0.5 }; // unit-square viewport center
  let selecting = false;
  let drag: { x: number; y: number } | null = null;
  let generation = 0;

  const span = () => 1 / Math.pow(2, zoom); // unit-square width of the viewport

  const viewBboxParam = (): string => {
    const half = span() / 2;
    const nw = unproject(center.x - half, Math.max(0, center.y - (half * H) / W));
    const se = unproject(center.x + half, Math.min(1, center.y + (half * H) / W));
    return [se.lat, nw.lon, nw.lat, se.lon].map((v) => v.toFixed(6)).join(",");
  };

  const toScreen = (lat: number, lon: number): { x: number; y: number } => {
    const p = project(lat, lon);
    return {
      x: ((p.x - center.x) / span()) * W + W / 2,
      y: ((p.y - center.y) / span()) * W + H / 2,
    };
  };

  const fromScreen = (sx: number, sy: number): { lat: number; lon: number } => {
    const x = center.x + ((sx - W / 2) / W) * span();
    const y = center.y + ((sy - H / 2) / W) * span();
    return unproject(x, Math.max(0, Math.min(1, y)));
  };

  const refetch = async (): Promise<void> => {
    generation += 1;
    const mine = generation;
    const doc = await vm.getClusters(zoom, zoom > 0 ? viewBboxParam() : undefined);
    if (mine !== generation) return;
    clusters = doc.clusters;
    render();
  };

  const render = () => {
    clear(root);
    const elements = vm.config?.map_elements;
    const svg = s("svg", {
      viewBox: `0 0 ${W} ${H}`,
      class: selecting ? "map selecting" : "map",
      "data-testid": `map-${componentId}`,
    });
    svg.append(s("rect", { x: 0, y: 0, width: W, height: H, class: "map-sea" }));

    const maxCount = clusters.reduce((m, c) => Math.max(m, c.count), 1);
    for (const c of clusters) {
      const pos = toScreen(c.centroid[0], c.centroid[1]);
      if (pos.x < -20 || pos.x > W + 20 || pos.y < -20 || pos.y > H + 20) continue;
      const r = 4 + 14 * Math.sqrt(c.count / maxCount);
      const dot = s("circle", {
        cx: pos.x.toFixed(1),
        cy: pos.y.toFixed(1),
        r: r.toFixed(1),
        class: "cluster",
        "data-count": String(c.count),
      });
      dot.append(s("title", {}, `${thousands(c.count)} records`));
      svg.append(dot);
      if (c.count > 1) {
        svg.append(
          s(
            "text",
            {
              x: pos.x.toFixed(1),
              y: (pos.y + 3).toFixed(1),
              class: "cluster-count",
              "text-anchor": "middle",
            },
            String(c.count),
          ),
        );
      }
    }

    if (elements?.title) {
      svg.append(s("text", { x: 8, y: 16, class: "map-title" }, elements.title));
    }
    if (elements?.north_arrow) {
      svg.append(s("text", { x: W - 18, y: 20, class: "north-arrow" }, "N↑"));
    }
    if (elements?.scale_bar) {
      // ground meters per unit-square x at the viewport center latitude
      const { lat } = unproject(center.x, center.y);
      const metersAcross =
        40075017 * Math.cos((lat * Math.PI) / 180) * span();
      const km = metersAcross / 1000 / 4; // bar is a quarter of the view
      const label = km >= 1 ? `${Math.round(km)} km` : `${Math.round(km * 1000)} m`;
      svg.append(
        s("line", { x1: 10, y1: H - 12, x2: 10 + W / 4, y2: H - 12, class: "scale-bar" }),
        s("text", { x: 10, y: H - 18, class: "scale-label" }, label),
      );
    }
    if (elements?.minimap) {
      const mw = 60;
      const mh = 34;
      svg.append(
        s("rect", { x: W - mw - 8, y: H - mh - 8, width: mw, height: mh, class: "minimap" }),
        s("rect", {
          x: (W - mw - 8 + Math.max(0, center.x - span() / 2) * mw).toFixed(1),
          y: (H - mh - 8 + Math.max(0, center.y - span() / 2) * mh).toFixed(1),
          width: Math.min(1, span()) * mw,
          height: Math.min(1, span()) * mh,
          class: "minimap-view",
        }),
      );
    }
    if (elements?.legend) {
      svg.append(
        s("circle", { cx: 16, cy: H - 40, r: 5, class: "cluster" }),
        s("text", { x: 26, y: H - 37, class: "legend-label" }, "record cluster"),
      );
    }

    const local = (event: Event): { x: number; y: number } => {
      const e = event as MouseEvent;
      const rect = (svg as unknown as { getBoundingClientRect(): DOMRect }).getBoundingClientRect();
      return {
        x: ((e.clientX - rect.left) / (rect.width || W)) * W,
        y: ((e.clientY - rect.top) / (rect.height || H)) * H,
      };
    };
    svg.addEventListener("mousedown", (event) => {
      drag = local(event);
    });
    svg.addEventListener("mouseup", (event) => {
      if (!drag) return;
      const start = drag;
      const end = local(event);
      drag = null;
      if (selecting) {
        const a = fromScreen(Math.min(start.x, end.x), Math.max(start.y, end.y));
        const b = fromScreen(Math.max(start.x, end.x), Math.min(start.y, end.y));
        if (Math.abs(start.x - end.x) < 3 || Math.abs(start.y - end.y) < 3) return;
        selecting = false;
        void vm.setFilter(dim, {
          type: "bbox",
          min_lat: a.lat,
          min_lon: a.lon,
          max_lat: b.lat,
          max_lon: b.lon,
        });
      } else {
        center = {
          x: center.x - ((end.x - start.x) / W) * span(),
          y: Math.max(0, Math.min(1, center.y - ((end.y - start.y) / W) * span())),
        };
        void refetch();
      }
    });

    const controls = h(
      "div",
      { class: "map-controls" },
      h(
        "button",
        {
          class: "zoom-in",
          disabled: zoom >= MAX_ZOOM,
          onclick: () => {
            zoom = Math.min(MAX_ZOOM, zoom + 1);
            void refetch();
          },
        },
        "+",
      ),
      h(
        "button",
        {
          class: "zoom-out",
          disabled: zoom <= 0,
          onclick: () => {
            zoom = Math.max(0, zoom - 1);
            if (zoom === 0) center = { x: 0.5, y: 0.5 };
            void refetch();
          },
        },
        "−",
      ),
      h(
        "button",
        {
          class: selecting ? "select-area on" : "select-area",
          onclick: () => {
            selecting = !selecting;
            render();
          },
        },
        "Select area",
      ),
    );
    if (vm.activeFilter(dim)) {
      controls.append(
        h(
          "button",
          { class: "clear-filter", onclick: () => void vm.clearFilter(dim) },
          "clear",
        ),
      );
    }

    const basemaps = elements?.basemaps ?? [];
    if (basemaps.length > 1) {
      const picker = h("select", {
        class: "basemap-picker",
        onchange: () => render(),
      });
      for (const name of basemaps) picker.append(h("option", { value: name }, name));
      controls.append(picker);
    }

    root.append(svg, controls);
    root.style.setProperty("--accent", ACCENT);
  };

  vm.subscribe(() => {
    void refetch(); // new filter state invalidates the cluster layer
  });
  render();
}
