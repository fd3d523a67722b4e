/** Pure geometry: map projection, SVG arc paths, axis ticks. */

const MAX_LAT = 85.05112878;

/** Web Mercator to the unit square; latitude clamped to the projectable band. */
export function project(lat: number, lon: number): { x: number; y: number } {
  const phi = (Math.max(-MAX_LAT, Math.min(MAX_LAT, lat)) * Math.PI) / 180;
  const x = (lon + 180) / 360;
  const y = (1 - Math.log(Math.tan(phi) + 1 / Math.cos(phi)) / Math.PI) / 2;
  return { x, y };
}

/** Inverse of project, for turning drag rectangles back into lat/lon boxes. */
export function unproject(x: number, y: number): { lat: number; lon: number } {
  const lon = x * 360 - 180;
  const lat = (Math.atan(Math.sinh(Math.PI * (1 - 2 * y))) * 180) / Math.PI;
  return { lat, lon };
}

function polar(cx: number, cy: number, r: number, angle: number): [number, number] {
  // angle 0 points up; angles grow clockwise
  return [cx + r * Math.sin(angle), cy - r * Math.cos(angle)];
}

/** Annular sector path for donut and sunburst segments. Angles in radians. */
export function arcPath(
  cx: number,
  cy: number,
  r0: number,
  r1: number,
  a0: number,
  a1: number,
): string {
  const full = a1 - a0 >= 2 * Math.PI - 1e-9;
  if (full) a1 = a0 + 2 * Math.PI - 1e-6;
  const large = a1 - a0 > Math.PI ? 1 : 0;
  const [x0o, y0o] = polar(cx, cy, r1, a0);
  const [x1o, y1o] = polar(cx, cy, r1, a1);
  const [x1i, y1i] = polar(cx, cy, r0, a1);
  const [x0i, y0i] = polar(cx, cy, r0, a0);
  const f = (v: number) => v.toFixed(3);
  return [
    `M ${f(x0o)} ${f(y0o)}`,
    `A ${f(r1)} ${f(r1)} 0 ${large} 1 ${f(x1o)} ${f(y1o)}`,
    `L ${f(x1i)} ${f(y1i)}`,
    `A ${f(r0)} ${f(r0)} 0 ${large} 0 ${f(x0i)} ${f(y0i)}`,
    "Z",
  ].join(" ");
}

/** Round tick positions covering [lo, hi], at most `count` of them. */
export function ticks(lo: number, hi: number, count: number): number[] {
  if (!(hi > lo) || count < 1) return [lo];
  const span = hi - lo;
  const rawStep = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (mag * m >= rawStep) {
      step = mag * m;
      break;
    }
  }
  const out: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    // snap away float dust so labels render clean
    out.push(Math.abs(v) < step * 1e-9 ? 0 : Number(v.toPrecision(12)));
  }
  return out;
}
