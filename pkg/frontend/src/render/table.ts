/** Record table: view-local search, sortable columns, pagination. Search and
 * sorting never change the filter state; only the payload resets the view. */

import { clear, h } from "../dom";
import { cellText, isUrl, pageText } from "../format";
import { componentById, type TablePage } from "../types";
import type { ViewModel } from "../viewmodel";

export function mountTable(root: HTMLElement, componentId: string, vm: ViewModel): void {
  let page: TablePage = componentById(vm.current, componentId).data as TablePage;
  const limit = page.limit;
  let offset = 0;
  let sort: string | null = null;
  let dir: "asc" | "desc" = "asc";
  let search = "";
  let generation = 0; // drop stale responses from superseded queries

  const columns = (): string[] => (page.rows[0] ? Object.keys(page.rows[0]) : []);

  const refetch = async (): Promise<void> => {
    generation += 1;
    const mine = generation;
    const next = await vm.getTable({
      offset,
      limit,
      sort: sort ?? undefined,
      dir,
      search: search || undefined,
    });
    if (mine !== generation) return;
    page = next;
    render();
  };

  const render = () => {
    clear(root);
    const searchBox = h("input", {
      class: "table-search",
      type: "search",
      placeholder: "Search...",
      value: search,
      oninput: (event) => {
        search = (event.target as HTMLInputElement).value;
        offset = 0;
        void refetch();
      },
    });

    const head = h("tr", {});
    for (const col of columns()) {
      const active = sort === col;
      head.append(
        h(
          "th",
          {
            class: active ? `sort ${dir}` : "sort",
            onclick: () => {
              dir = active && dir === "asc" ? "desc" : "asc";
              sort = col;
              offset = 0;
              void refetch();
            },
          },
          col,
          active ? (dir === "asc" ? " ▴" : " ▾") : "",
        ),
      );
    }

    const body = h("tbody", {});
    for (const row of page.rows) {
      const tr = h("tr", {});
      for (const col of columns()) {
        const value = row[col];
        tr.append(
          h(
            "td",
            {},
            isUrl(value)
              ? h("a", { href: value, target: "_blank", rel: "noopener" }, value)
              : cellText(value),
          ),
        );
      }
      body.append(tr);
    }

    const pager = h(
      "div",
      { class: "pager" },
      h(
        "button",
        {
          disabled: offset === 0,
          onclick: () => {
            offset = Math.max(0, offset - limit);
            void refetch();
          },
        },
        "Previous",
      ),
      h(
        "span",
        { class: "page-info", "data-testid": `table-info-${componentId}` },
        pageText(page.offset, page.rows.length, page.matched),
      ),
      h(
        "button",
        {
          disabled: offset + limit >= page.matched,
          onclick: () => {
            offset += limit;
            void refetch();
          },
        },
        "Next",
      ),
    );

    root.append(
      searchBox,
      h("table", { class: "records", "data-testid": `table-${componentId}` },
        h("thead", {}, head), body),
      pager,
    );
  };

  vm.subscribe(() => {
    // a filter change invalidates the current page; re-run the local query
    offset = 0;
    if (!sort && !search) {
      page = componentById(vm.current, componentId).data as TablePage;
      render();
    } else {
      void refetch();
    }
  });
  render();
}
