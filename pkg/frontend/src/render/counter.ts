/** Header strip: app title, live record counter, reset and export controls. */

import { clear, h } from "../dom";
import { counterText } from "../format";
import type { ViewModel } from "../viewmodel";

export function mountCounter(root: HTMLElement, vm: ViewModel): void {
  const render = () => {
    const state = vm.current;
    clear(root);
    root.append(
      h("h1", { class: "app-title" }, vm.config?.title ?? ""),
      h(
        "span",
        { class: "counter", "data-testid": "counter" },
        counterText(state.counter.selected, state.counter.total),
      ),
      h(
        "button",
        {
          class: "reset-all",
          disabled: Object.keys(state.filters).length === 0,
          onclick: () => void vm.resetAll(),
        },
        "Reset All",
      ),
      h(
        "a",
        { class: "export-link", href: vm.exportUrl(), download: "export.csv" },
        "Export CSV",
      ),
    );
  };
  vm.subscribe(render);
  render();
}
