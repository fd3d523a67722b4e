/** Tiny DOM/SVG element builders; no framework, output is deterministic. */

const SVG_NS = "http://www.w3.org/2000/svg";

type Attrs = Record<string, string | number | boolean | ((event: Event) => void)>;
type Child = Node | string;

function apply(node: Element, attrs: Attrs, children: Child[]): void {
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") {
      node.addEventListener(key.replace(/^on/, ""), value as EventListener);
    } else if (typeof value === "boolean") {
      if (value) node.setAttribute(key, "");
    } else {
      node.setAttribute(key, String(value));
    }
  }
  for (const child of children) {
    node.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
}

export function h<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  apply(node, attrs, children);
  return node;
}

export function s(tag: string, attrs: Attrs = {}, ...children: Child[]): SVGElement {
  const node = document.createElementNS(SVG_NS, tag) as SVGElement;
  apply(node, attrs, children);
  return node;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Default categorical palette; index 0 is the accent used for selections. */
export const PALETTE = [
  "#6a3d9a",
  "#1f78b4",
  "#33a02c",
  "#ff7f00",
  "#b15928",
  "#a6cee3",
  "#cab2d6",
  "#fdbf6f",
  "#b2df8a",
  "#8c6bb1",
];

export const ACCENT = PALETTE[0];
export const MUTED = "#c7c3ce";
