import { describe, expect, it } from "vitest";
import { arcPath, project, ticks, unproject } from "../src/geom";

describe("project", () => {
  it("maps the origin to the center of the unit square", () => {
    const p = project(0, 0);
    expect(p.x).toBeCloseTo(0.5, 12);
    expect(p.y).toBeCloseTo(0.5, 12);
  });

  it("matches the server's frozen reference value", () => {
    // same point the backend pins: (40N, 105W)
    const p = project(40, -105);
    expect(p.x).toBeCloseTo(75 / 360, 12);
    expect(p.y).toBeCloseTo(0.3785791577410809, 12);
  });

  it("clamps poles into the projectable band", () => {
    expect(project(90, 0).y).toBeGreaterThanOrEqual(-1e-9);
    expect(project(-90, 0).y).toBeLessThanOrEqual(1 + 1e-9);
  });

  it("round-trips through unproject", () => {
    for (const [lat, lon] of [[40, -105], [-33.9, 151.2], [0, 0], [60, 10]]) {
      const p = project(lat, lon);
      const back = unproject(p.x, p.y);
      expect(back.lat).toBeCloseTo(lat, 9);
      expect(back.lon).toBeCloseTo(lon, 9);
    }
  });
});

describe("arcPath", () => {
  it("is deterministic", () => {
    const a = arcPath(100, 100, 40, 80, 0, Math.PI / 3);
    const b = arcPath(100, 100, 40, 80, 0, Math.PI / 3);
    expect(a).toBe(b);
    expect(a.startsWith("M ")).toBe(true);
    expect(a.endsWith("Z")).toBe(true);
  });

  it("handles a full circle without degenerating", () => {
    const d = arcPath(50, 50, 10, 20, 0, 2 * Math.PI);
    expect(d).toContain("A ");
  });
});

describe("ticks", () => {
  it("produces round values covering the range", () => {
    const t = ticks(2015, 2023, 5);
    expect(t[0]).toBeGreaterThanOrEqual(2015);
    expect(t[t.length - 1]).toBeLessThanOrEqual(2023 + 1e-9);
    expect(t.length).toBeGreaterThan(1);
    for (const v of t) expect(Number.isInteger(v)).toBe(true);
  });

  it("degenerates gracefully", () => {
    expect(ticks(5, 5, 4)).toEqual([5]);
  });
});
