/** Zoom-and-focus line chart pair over a scalar dimension. The small context
 * strip always shows the full extent; dragging across it selects a range,
 * which the larger focus chart zooms into. */

import { ACCENT, MUTED, clear, h, s } from "../dom";
import { ticks } from "../geom";
import { componentById, type GroupData, type NumericBin } from "../types";
import type { ViewModel } from "../viewmodel";

const W = 320;
const FOCUS_H = 120;
const CONTEXT_H = 40;

function linePath(bins: NumericBin[], x: (v: number) => number, y: (v: number) => number): string {
  return bins
    .map((b, i) => `${i === 0 ? "M" : "L"} ${x((b.lo + b.hi) / 2).toFixed(2)} ${y(b.value).toFixed(2)}`)
    .join(" ");
}

export function mountLine(root: HTMLElement, componentId: string, vm: ViewModel): void {
  let dragStart: number | null = null; // context-strip x position in [0, W]

  const render = () => {
    const comp = componentById(vm.current, componentId);
    const dim = comp.dimension as string;
    const bins = (comp.data as GroupData).bins as NumericBin[];
    const spec = vm.activeFilter(dim);
    const range = spec && spec.type === "range" ? spec : null;

    clear(root);
    if (bins.length === 0) {
      root.append(h("p", { class: "empty" }, "no data"));
      return;
    }
    const lo = bins[0].lo;
    const hi = bins[bins.length - 1].hi;
    const maxV = bins.reduce((m, b) => Math.max(m, b.value), 1);
    const xOf = (v: number) => ((v - lo) / (hi - lo)) * W;
    const valueAt = (px: number) => lo + (px / W) * (hi - lo);

    // focus: only the bins inside the active range, full width
    const fBins = range ? bins.filter((b) => b.lo < range.hi && b.hi > range.lo) : bins;
    const fLo = fBins.length ? fBins[0].lo : lo;
    const fHi = fBins.length ? fBins[fBins.length - 1].hi : hi;
    const fMax = fBins.reduce((m, b) => Math.max(m, b.value), 1);
    const fx = (v: number) => ((v - fLo) / (fHi - fLo || 1)) * W;
    const fy = (v: number) => FOCUS_H - 14 - (v / fMax) * (FOCUS_H - 24);

    const focus = s("svg", {
      viewBox: `0 0 ${W} ${FOCUS_H}`,
      class: "line-focus",
      "data-testid": `line-focus-${componentId}`,
    });
    focus.append(
      s("path", { d: linePath(fBins, fx, fy), class: "line-path", stroke: ACCENT }),
    );
    for (const t of ticks(fLo, fHi, 5)) {
      focus.append(
        s("text", { x: fx(t).toFixed(1), y: FOCUS_H - 2, class: "tick" }, String(t)),
      );
    }

    // context: full extent with the selected window highlighted
    const cy = (v: number) => CONTEXT_H - 4 - (v / maxV) * (CONTEXT_H - 8);
    const context = s("svg", {
      viewBox: `0 0 ${W} ${CONTEXT_H}`,
      class: "line-context",
      "data-testid": `line-context-${componentId}`,
    });
    if (range) {
      context.append(
        s("rect", {
          x: xOf(Math.max(lo, range.lo)).toFixed(1),
          y: 0,
          width: (xOf(Math.min(hi, range.hi)) - xOf(Math.max(lo, range.lo))).toFixed(1),
          height: CONTEXT_H,
          class: "brush-window",
        }),
      );
    }
    context.append(
      s("path", { d: linePath(bins, xOf, cy), class: "line-path", stroke: MUTED }),
    );
    const localX = (event: Event) => {
      const e = event as MouseEvent;
      const rect = (context as unknown as { getBoundingClientRect(): DOMRect }).getBoundingClientRect();
      const width = rect.width || W;
      return Math.max(0, Math.min(W, ((e.clientX - rect.left) / width) * W));
    };
    context.addEventListener("mousedown", (event) => {
      dragStart = localX(event);
    });
    context.addEventListener("mouseup", (event) => {
      if (dragStart === null) return;
      const a = dragStart;
      const b = localX(event);
      dragStart = null;
      if (Math.abs(a - b) < 2) {
        void vm.clearFilter(dim); // a plain click resets the window
        return;
      }
      void vm.setFilter(dim, {
        type: "range",
        lo: valueAt(Math.min(a, b)),
        hi: valueAt(Math.max(a, b)),
      });
    });

    root.append(focus, context);
  };
  vm.subscribe(render);
  render();
}
