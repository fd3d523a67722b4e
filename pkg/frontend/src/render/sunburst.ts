/** Sunburst over a hierarchy dimension. Each ring is one level; clicking a
 * segment filters to that path prefix, clicking the center clears it. */

import { MUTED, PALETTE, clear, h, s } from "../dom";
import { arcPath } from "../geom";
import { thousands } from "../format";
import { componentById, type RollupNode } from "../types";
import type { ViewModel } from "../viewmodel";

const SIZE = 200;
const RING = 26;
const HUB = 28;

function isPrefix(prefix: string[], path: string[]): boolean {
  return prefix.length <= path.length && prefix.every((v, i) => path[i] === v);
}

export function mountSunburst(root: HTMLElement, componentId: string, vm: ViewModel): void {
  const render = () => {
    const comp = componentById(vm.current, componentId);
    const dim = comp.dimension as string;
    const data = comp.data as { root: RollupNode };
    const spec = vm.activeFilter(dim);
    const activePath = spec && spec.type === "path_prefix" ? spec.path : null;

    clear(root);
    const svg = s("svg", {
      viewBox: `0 0 ${SIZE} ${SIZE}`,
      class: "sunburst",
      "data-testid": `sunburst-${componentId}`,
    });
    const cx = SIZE / 2;
    const cyr = SIZE / 2;

    const hub = s("circle", {
      cx,
      cy: cyr,
      r: HUB - 4,
      class: "sunburst-hub",
      onclick: () => {
        if (vm.activeFilter(dim)) void vm.clearFilter(dim);
      },
    });
    hub.append(s("title", {}, `all: ${thousands(data.root.value)}`));
    svg.append(hub);

    // top-level children fix the hue; deeper segments inherit it
    const hueIndex = new Map<string, number>();
    data.root.children.forEach((c, i) => hueIndex.set(c.path[0], i));

    const draw = (node: RollupNode, a0: number, a1: number, level: number): void => {
      if (level > 0) {
        const onPath =
          !activePath || isPrefix(activePath, node.path) || isPrefix(node.path, activePath);
        const color = PALETTE[(hueIndex.get(node.path[0]) ?? 0) % PALETTE.length];
        const seg = s("path", {
          d: arcPath(cx, cyr, HUB + (level - 1) * RING, HUB + level * RING - 2, a0, a1),
          fill: onPath ? color : MUTED,
          class: "segment",
          "data-path": node.path.join("/"),
          onclick: () => void vm.setFilter(dim, { type: "path_prefix", path: node.path }),
        });
        seg.append(s("title", {}, `${node.path.join(" / ")}: ${thousands(node.value)}`));
        svg.append(seg);
      }
      const span = a1 - a0;
      const total = node.children.reduce((sum, c) => sum + c.value, 0);
      let angle = a0;
      for (const child of node.children) {
        if (total === 0) break;
        const sweep = (child.value / total) * span;
        draw(child, angle, angle + sweep, level + 1);
        angle += sweep;
      }
    };
    draw(data.root, 0, 2 * Math.PI, 0);

    root.append(svg);
    if (activePath) {
      root.append(
        h(
          "div",
          { class: "breadcrumb" },
          activePath.join(" / "),
          h(
            "button",
            { class: "clear-filter", onclick: () => void vm.clearFilter(dim) },
            "clear",
          ),
        ),
      );
    }
  };
  vm.subscribe(render);
  render();
}
