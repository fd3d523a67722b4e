/** Word cloud over the text dimension; clicking a word filters to that term,
 * clicking the active word clears it. */

import { ACCENT, clear, s } from "../dom";
import { layoutCloud } from "../layout";
import { componentById, type TermCount } from "../types";
import type { ViewModel } from "../viewmodel";

const W = 320;
const H = 200;

export function mountCloud(root: HTMLElement, componentId: string, vm: ViewModel): void {
  const render = () => {
    const comp = componentById(vm.current, componentId);
    const dim = comp.dimension as string;
    const terms = (comp.data as { terms: TermCount[] }).terms;
    const spec = vm.activeFilter(dim);
    const activeTerm = spec && spec.type === "term" ? spec.term : null;

    clear(root);
    const svg = s("svg", {
      viewBox: `0 0 ${W} ${H}`,
      class: "cloud",
      "data-testid": `cloud-${componentId}`,
    });
    for (const word of layoutCloud(terms, W, H)) {
      const active = word.term === activeTerm;
      svg.append(
        s(
          "text",
          {
            x: word.x.toFixed(1),
            y: word.y.toFixed(1),
            "font-size": word.size.toFixed(1),
            "text-anchor": "middle",
            class: active ? "word active" : "word",
            fill: active ? ACCENT : "#555",
            "data-term": word.term,
            onclick: () =>
              void (active
                ? vm.clearFilter(dim)
                : vm.setFilter(dim, { type: "term", term: word.term })),
          },
          word.term,
        ),
      );
    }
    root.append(svg);
  };
  vm.subscribe(render);
  render();
}
