/** Horizontal row chart over a categorical dimension; one bar per key,
 * clicking toggles the key in a value_set filter. row_xscroll is the same
 * chart inside a horizontally scrollable strip. */

import { ACCENT, MUTED, clear, h } from "../dom";
import { thousands } from "../format";
import { componentById, isCategorical, type GroupData } from "../types";
import type { ViewModel } from "../viewmodel";
import { toggleValue } from "./donut";

export function mountRows(
  root: HTMLElement,
  componentId: string,
  vm: ViewModel,
  scrollX = false,
): void {
  const render = () => {
    const comp = componentById(vm.current, componentId);
    const dim = comp.dimension as string;
    const bins = (comp.data as GroupData).bins.filter(isCategorical);
    const spec = vm.activeFilter(dim);
    const active = new Set(spec && spec.type === "value_set" ? spec.values : []);
    const max = bins.reduce((m, b) => Math.max(m, b.value), 0);

    clear(root);
    const list = h("div", {
      class: scrollX ? "rows rows-xscroll" : "rows",
      "data-testid": `rows-${componentId}`,
    });
    for (const bin of bins) {
      const on = active.size === 0 || active.has(bin.key);
      const width = max > 0 ? (bin.value / max) * 100 : 0;
      list.append(
        h(
          "div",
          {
            class: on ? "row-bar" : "row-bar off",
            "data-key": bin.key,
            onclick: () => void toggleValue(vm, dim, bin.key),
          },
          h("span", { class: "row-label" }, bin.key),
          h("span", {
            class: "row-fill",
            style: `width:${width.toFixed(1)}%;background:${on ? ACCENT : MUTED}`,
          }),
          h("span", { class: "row-value" }, thousands(bin.value)),
        ),
      );
    }
    root.append(list);
  };
  vm.subscribe(render);
  render();
}
