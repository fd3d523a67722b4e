/** Small text/number helpers shared by the components. */

export function thousands(n: number): string {
  return n.toLocaleString("en-US");
}

export function counterText(selected: number, total: number): string {
  return `${thousands(selected)} selected out of ${thousands(total)} records`;
}

export function pageText(offset: number, shown: number, matched: number): string {
  if (matched === 0) return "Showing 0 to 0 of 0 entries";
  const first = offset + 1;
  const last = offset + shown;
  return `Showing ${thousands(first)} to ${thousands(last)} of ${thousands(matched)} entries`;
}

export function binLabel(lo: number, hi: number): string {
  const f = (v: number) =>
    Number.isInteger(v) ? String(v) : v.toFixed(2).replace(/\.?0+$/, "");
  return `${f(lo)}–${f(hi)}`;
}

export function cellText(value: unknown): string {
  if (value === null || value === undefined) return "";
  if (typeof value === "number") {
    if (Number.isNaN(value)) return "";
    return Number.isInteger(value) ? String(value) : String(value);
  }
  if (Array.isArray(value)) return value.join(", ");
  return String(value);
}

export function isUrl(value: unknown): value is string {
  return typeof value === "string" && /^https?:\/\//.test(value);
}
