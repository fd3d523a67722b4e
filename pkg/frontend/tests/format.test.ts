import { describe, expect, it } from "vitest";
import { binLabel, cellText, counterText, isUrl, pageText, thousands } from "../src/format";

describe("format", () => {
  it("groups thousands", () => {
    expect(thousands(1497)).toBe("1,497");
    expect(thousands(1000000)).toBe("1,000,000");
  });

  it("renders the counter line", () => {
    expect(counterText(71, 71)).toBe("71 selected out of 71 records");
    expect(counterText(200, 1497)).toBe("200 selected out of 1,497 records");
  });

  it("renders pagination text with 1-based bounds", () => {
    expect(pageText(0, 10, 1497)).toBe("Showing 1 to 10 of 1,497 entries");
    expect(pageText(10, 10, 25)).toBe("Showing 11 to 20 of 25 entries");
    expect(pageText(0, 0, 0)).toBe("Showing 0 to 0 of 0 entries");
  });

  it("labels numeric bins", () => {
    expect(binLabel(2015, 2016)).toBe("2015–2016");
    expect(binLabel(0.5, 1)).toBe("0.5–1");
  });

  it("renders cell values", () => {
    expect(cellText(null)).toBe("");
    expect(cellText(NaN)).toBe("");
    expect(cellText(["a", "b"])).toBe("a, b");
    expect(cellText(42)).toBe("42");
    expect(cellText("x")).toBe("x");
  });

  it("detects link cells", () => {
    expect(isUrl("https://example.org/x")).toBe(true);
    expect(isUrl("not a url")).toBe(false);
    expect(isUrl(42)).toBe(false);
  });
});
