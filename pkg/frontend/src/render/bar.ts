/** Vertical bar chart. Numeric bins support brushing: press on one bar and
 * release on another to select the covering half-open range. Categorical bins
 * fall back to click-to-toggle, like the row chart. */

import { ACCENT, MUTED, clear, h } from "../dom";
import { binLabel, thousands } from "../format";
import {
  componentById,
  isCategorical,
  type GroupData,
  type NumericBin,
} from "../types";
import type { ViewModel } from "../viewmodel";
import { toggleValue } from "./donut";

export function mountBar(root: HTMLElement, componentId: string, vm: ViewModel): void {
  let anchor: number | null = null; // bin index where the current brush started

  const render = () => {
    const comp = componentById(vm.current, componentId);
    const dim = comp.dimension as string;
    const bins = (comp.data as GroupData).bins;
    const spec = vm.activeFilter(dim);
    const max = bins.reduce((m, b) => Math.max(m, b.value), 0);

    clear(root);
    const chart = h("div", { class: "bars", "data-testid": `bar-${componentId}` });

    bins.forEach((bin, i) => {
      const height = max > 0 ? (bin.value / max) * 100 : 0;
      let on = true;
      let label: string;
      const attrs: Record<string, string | ((event: Event) => void)> = {};
      if (isCategorical(bin)) {
        label = bin.key;
        on = !spec || (spec.type === "value_set" && spec.values.includes(bin.key));
        if (spec && spec.type === "value_set" && !spec.values.includes(bin.key)) on = false;
        attrs.onclick = () => void toggleValue(vm, dim, bin.key);
      } else {
        label = binLabel(bin.lo, bin.hi);
        if (spec && spec.type === "range") on = bin.lo < spec.hi && bin.hi > spec.lo;
        attrs.onmousedown = () => {
          anchor = i;
        };
        attrs.onmouseup = () => {
          if (anchor === null) return;
          const [a, b] = anchor <= i ? [anchor, i] : [i, anchor];
          anchor = null;
          const lo = (bins[a] as NumericBin).lo;
          const hi = (bins[b] as NumericBin).hi;
          void vm.setFilter(dim, { type: "range", lo, hi });
        };
      }
      const bar = h(
        "div",
        { class: on ? "bar" : "bar off", "data-index": String(i), ...attrs },
        h("span", {
          class: "bar-fill",
          style: `height:${height.toFixed(1)}%;background:${on ? ACCENT : MUTED}`,
          title: `${label}: ${thousands(bin.value)}`,
        }),
        h("span", { class: "bar-label" }, label),
      );
      chart.append(bar);
    });

    const header = h("div", { class: "chart-head" });
    if (spec) {
      header.append(
        h(
          "button",
          { class: "clear-filter", onclick: () => void vm.clearFilter(dim) },
          "clear",
        ),
      );
    }
    root.append(header, chart);
  };
  vm.subscribe(render);
  render();
}
