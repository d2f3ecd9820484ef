/** Payload shapes of the local analysis service. */

export type Kind = "character" | "place" | "motif";

export interface CastEntry {
  canonical: string;
  kind: Kind;
  variants: string[];
}

export interface CastPayload {
  version: number;
  entries: CastEntry[];
}

export interface RawWord {
  folded: string;
  count: number;
  sample: string;
}

export interface UnitInfo {
  index: number;
  id: string;
  tokens: number;
}

export interface GraphNode {
  name: string;
  kind: Kind;
  f: number;
}

export interface GraphEdge {
  source: string;
  target: string;
  i: number;
}

export interface GraphMeta {
  scope: string;
  kernel: string;
  thresholds: { node_min: number; edge_min: number };
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: GraphEdge[];
  meta: GraphMeta;
}

export interface KernelParams {
  kind: "rect" | "exp";
  window: number;
  decay: number;
}

export interface AnalyzeRequest {
  unit: number | null;
  kernel: KernelParams;
  thresholds: { node_min: number; edge_min: number };
}

export interface AnalyzeResponse {
  castVersion: number;
  graph: GraphPayload;
  tables: string;
  dot: string;
}
