/** Deterministic word-cloud layout.
 *
 * Words spiral out from the center in frequency order; a word lands on the
 * first spiral position where its box overlaps nothing already placed. The
 * jitter comes from a seeded generator, so the same terms always produce the
 * same picture.
 */

import type { TermCount } from "./types";

export interface PlacedWord {
  term: string;
  frequency: number;
  x: number;
  y: number;
  size: number;
}

interface Box {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

/** mulberry32: tiny seeded PRNG, good enough for layout jitter. */
export function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function overlaps(a: Box, b: Box): boolean {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

export function fontSize(frequency: number, maxFrequency: number): number {
  const minPx = 11;
  const maxPx = 34;
  if (maxFrequency <= 0) return minPx;
  // area proportional to frequency reads better than height proportional
  return minPx + (maxPx - minPx) * Math.sqrt(frequency / maxFrequency);
}

export function layoutCloud(
  terms: TermCount[],
  width: number,
  height: number,
  seed = 7,
): PlacedWord[] {
  const rand = seededRandom(seed);
  const maxFrequency = terms.length ? terms[0].frequency : 0;
  const placed: PlacedWord[] = [];
  const boxes: Box[] = [];
  for (const t of terms) {
    const size = fontSize(t.frequency, maxFrequency);
    const w = t.term.length * size * 0.62;
    const h = size * 1.15;
    const angle0 = rand() * 2 * Math.PI;
    let landed = false;
    for (let step = 0; step < 600; step += 1) {
      const radius = step * 1.8;
      const angle = angle0 + step * 0.35;
      const x = width / 2 + radius * Math.cos(angle);
      const y = height / 2 + radius * Math.sin(angle) * 0.6;
      const box = { x0: x - w / 2, y0: y - h / 2, x1: x + w / 2, y1: y + h / 2 };
      if (box.x0 < 0 || box.y0 < 0 || box.x1 > width || box.y1 > height) continue;
      if (boxes.some((b) => overlaps(box, b))) continue;
      boxes.push(box);
      placed.push({ term: t.term, frequency: t.frequency, x, y, size });
      landed = true;
      break;
    }
    if (!landed) break; // canvas is full; drop the remaining rarer terms
  }
  return placed;
}
