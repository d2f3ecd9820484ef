/**
 * Small deterministic force-directed layout (Fruchterman-Reingold with
 * cooling).  Edge attraction scales with interaction strength, so strong
 * pairs sit closer; orphan nodes only feel repulsion and the centering
 * pull, which keeps them visibly apart.
 */

import type { GraphPayload } from "./types.js";

export interface LayoutNode {
  name: string;
  x: number;
  y: number;
}

/** Deterministic PRNG so a given graph always lays out the same way. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function layout(
  graph: GraphPayload,
  width: number,
  height: number,
  iterations = 250,
  seed = 42,
): LayoutNode[] {
  const names = graph.nodes.map((n) => n.name);
  const n = names.length;
  if (n === 0) return [];
  const rand = mulberry32(seed);
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    xs[i] = (rand() - 0.5) * width * 0.8;
    ys[i] = (rand() - 0.5) * height * 0.8;
  }
  const indexOf = new Map(names.map((name, i) => [name, i]));
  const edges = graph.edges
    .map((e) => ({
      a: indexOf.get(e.source),
      b: indexOf.get(e.target),
      w: e.i,
    }))
    .filter((e): e is { a: number; b: number; w: number } => e.a !== undefined && e.b !== undefined);

  const area = width * height;
  const k = Math.sqrt(area / n);
  let temperature = Math.max(width, height) / 8;
  const cool = temperature / (iterations + 1);

  const dx = new Float64Array(n);
  const dy = new Float64Array(n);
  for (let iter = 0; iter < iterations; iter++) {
    dx.fill(0);
    dy.fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let vx = xs[i]! - xs[j]!;
        let vy = ys[i]! - ys[j]!;
        let d2 = vx * vx + vy * vy;
        if (d2 < 1e-6) {
          vx = 0.01 * (i - j);
          vy = 0.01;
          d2 = vx * vx + vy * vy;
        }
        const d = Math.sqrt(d2);
        const repulse = (k * k) / d;
        dx[i]! += (vx / d) * repulse;
        dy[i]! += (vy / d) * repulse;
        dx[j]! -= (vx / d) * repulse;
        dy[j]! -= (vy / d) * repulse;
      }
    }
    for (const { a, b, w } of edges) {
      const vx = xs[a]! - xs[b]!;
      const vy = ys[a]! - ys[b]!;
      const d = Math.max(Math.sqrt(vx * vx + vy * vy), 1e-3);
      // stronger interaction -> stronger spring
      const attract = ((d * d) / k) * (0.3 + 0.7 * w);
      dx[a]! -= (vx / d) * attract;
      dy[a]! -= (vy / d) * attract;
      dx[b]! += (vx / d) * attract;
      dy[b]! += (vy / d) * attract;
    }
    for (let i = 0; i < n; i++) {
      // centering pull keeps disconnected components on screen
      dx[i]! -= xs[i]! * 0.03;
      dy[i]! -= ys[i]! * 0.03;
      const d = Math.max(Math.sqrt(dx[i]! * dx[i]! + dy[i]! * dy[i]!), 1e-9);
      const step = Math.min(d, temperature);
      xs[i]! += (dx[i]! / d) * step;
      ys[i]! += (dy[i]! / d) * step;
      xs[i] = Math.max(-width / 2, Math.min(width / 2, xs[i]!));
      ys[i] = Math.max(-height / 2, Math.min(height / 2, ys[i]!));
    }
    temperature -= cool;
  }

  return names.map((name, i) => ({
    name,
    x: xs[i]! + width / 2,
    y: ys[i]! + height / 2,
  }));
}
