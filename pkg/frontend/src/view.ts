/** Pure render-model helpers shared by the page and the tests. */

import type { AnalyzeResponse, GraphPayload } from "./types.js";

/** Node radius in px, scaled by narrative strength. */
export function nodeRadius(f: number): number {
  return 8 + 18 * f;
}

/** Edge stroke width, mirroring the DOT penwidth formula. */
export function edgeWidth(i: number): number {
  return 1 + 4 * i;
}

export function edgeKey(a: string, b: string): string {
  return a <= b ? `${a}|${b}` : `${b}|${a}`;
}

/** The rendered node/edge identity sets for a graph payload. */
export function renderSets(graph: GraphPayload): { nodes: Set<string>; edges: Set<string> } {
  return {
    nodes: new Set(graph.nodes.map((n) => n.name)),
    edges: new Set(graph.edges.map((e) => edgeKey(e.source, e.target))),
  };
}

export function orphanNames(graph: GraphPayload): string[] {
  const connected = new Set<string>();
  for (const e of graph.edges) {
    connected.add(e.source);
    connected.add(e.target);
  }
  return graph.nodes.filter((n) => !connected.has(n.name)).map((n) => n.name);
}

/** The tables panel shows the server's ranked tables string verbatim. */
export function tablesText(response: AnalyzeResponse): string {
  return response.tables;
}

/**
 * Accepts only the newest in-flight analysis, and only when it was
 * computed against the cast version the editor still shows.
 */
export class ResponseGate {
  private seq = 0;

  begin(): number {
    return ++this.seq;
  }

  accept(ticket: number, responseVersion: number, currentVersion: number): boolean {
    return ticket === this.seq && responseVersion === currentVersion;
  }
}
