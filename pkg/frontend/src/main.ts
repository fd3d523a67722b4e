/** Boot: pick an app, open a session, and mount one card per configured
 * component. Everything after that is driven by published state payloads. */

import { Api } from "./api";
import { h, clear } from "./dom";
import { ViewModel } from "./viewmodel";
import { mountBar } from "./render/bar";
import { mountCloud } from "./render/cloud";
import { mountCounter } from "./render/counter";
import { mountDonut } from "./render/donut";
import { mountLine } from "./render/line";
import { mountMap } from "./render/map";
import { mountRows } from "./render/rows";
import { mountSunburst } from "./render/sunburst";
import { mountTable } from "./render/table";
import type { ComponentConfig } from "./types";

function mountComponent(card: HTMLElement, comp: ComponentConfig, vm: ViewModel): void {
  switch (comp.kind) {
    case "donut":
      mountDonut(card, comp.id, vm);
      break;
    case "bar":
      mountBar(card, comp.id, vm);
      break;
    case "row":
      mountRows(card, comp.id, vm);
      break;
    case "row_xscroll":
      mountRows(card, comp.id, vm, true);
      break;
    case "sunburst":
      mountSunburst(card, comp.id, vm);
      break;
    case "line_zoom_focus":
      mountLine(card, comp.id, vm);
      break;
    case "word_cloud":
      mountCloud(card, comp.id, vm);
      break;
    case "table":
      mountTable(card, comp.id, vm);
      break;
    case "map":
      mountMap(card, comp.id, vm);
      break;
    default:
      card.append(h("p", { class: "empty" }, `unknown component kind: ${comp.kind}`));
  }
}

export async function boot(root: HTMLElement, api: Api): Promise<ViewModel> {
  const { apps } = await api.listApps();
  if (apps.length === 0) throw new Error("no apps configured on the server");
  const wanted = new URLSearchParams(window.location.search).get("app");
  const app = apps.find((a) => a.name === wanted) ?? apps[0];

  const vm = new ViewModel(api, app.name);
  await vm.open();

  clear(root);
  const header = h("header", { class: "topbar" });
  mountCounter(header, vm);
  if (apps.length > 1) {
    const picker = h("select", {
      class: "app-picker",
      onchange: (event) => {
        const name = (event.target as HTMLSelectElement).value;
        window.location.search = `?app=${encodeURIComponent(name)}`;
      },
    });
    for (const a of apps) {
      const opt = h("option", { value: a.name }, a.title);
      if (a.name === app.name) opt.setAttribute("selected", "");
      picker.append(opt);
    }
    header.append(picker);
  }
  root.append(header);

  const grid = h("main", { class: "grid" });
  for (const comp of vm.config?.components ?? []) {
    const card = h("section", {
      class: `card card-${comp.kind}`,
      "data-component": comp.id,
    });
    card.append(h("h2", { class: "card-title" }, comp.id.replace(/[_-]/g, " ")));
    mountComponent(card, comp, vm);
    grid.append(card);
  }
  root.append(grid);
  return vm;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot(document.getElementById("app") as HTMLElement, new Api(""));
}
