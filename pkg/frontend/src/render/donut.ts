/** Donut chart over a categorical dimension; clicking a slice or legend row
 * toggles that key in a value_set filter. */

import { ACCENT, MUTED, PALETTE, clear, h, s } from "../dom";
import { arcPath } from "../geom";
import { thousands } from "../format";
import { componentById, isCategorical, type GroupData } from "../types";
import type { ViewModel } from "../viewmodel";

const SIZE = 180;

function selectedKeys(vm: ViewModel, dim: string): Set<string> {
  const spec = vm.activeFilter(dim);
  return new Set(spec && spec.type === "value_set" ? spec.values : []);
}

export function toggleValue(vm: ViewModel, dim: string, key: string): Promise<unknown> {
  const keys = selectedKeys(vm, dim);
  if (keys.has(key)) keys.delete(key);
  else keys.add(key);
  if (keys.size === 0) return vm.clearFilter(dim);
  return vm.setFilter(dim, { type: "value_set", values: [...keys].sort() });
}

export function mountDonut(root: HTMLElement, componentId: string, vm: ViewModel): void {
  const render = () => {
    const comp = componentById(vm.current, componentId);
    const dim = comp.dimension as string;
    const data = comp.data as GroupData;
    const bins = data.bins.filter(isCategorical);
    const active = selectedKeys(vm, dim);
    const total = bins.reduce((sum, b) => sum + b.value, 0);

    clear(root);
    const svg = s("svg", {
      viewBox: `0 0 ${SIZE} ${SIZE}`,
      class: "donut",
      "data-testid": `donut-${componentId}`,
    });
    let angle = 0;
    bins.forEach((bin, i) => {
      if (total === 0) return;
      const sweep = (bin.value / total) * 2 * Math.PI;
      const dimmed = active.size > 0 && !active.has(bin.key);
      const path = s("path", {
        d: arcPath(SIZE / 2, SIZE / 2, SIZE * 0.22, SIZE * 0.46, angle, angle + sweep),
        fill: dimmed ? MUTED : PALETTE[i % PALETTE.length],
        class: "slice",
        "data-key": bin.key,
        onclick: () => void toggleValue(vm, dim, bin.key),
      });
      path.append(s("title", {}, `${bin.key}: ${thousands(bin.value)}`));
      svg.append(path);
      angle += sweep;
    });

    const legend = h("ul", { class: "legend" });
    bins.forEach((bin, i) => {
      const on = active.size === 0 || active.has(bin.key);
      legend.append(
        h(
          "li",
          {
            class: on ? "legend-row" : "legend-row off",
            "data-key": bin.key,
            onclick: () => void toggleValue(vm, dim, bin.key),
          },
          h("span", {
            class: "swatch",
            style: `background:${on ? PALETTE[i % PALETTE.length] : MUTED}`,
          }),
          `${bin.key} (${thousands(bin.value)})`,
        ),
      );
    });
    root.append(svg, legend);
  };
  vm.subscribe(render);
  render();
}

export { ACCENT };
