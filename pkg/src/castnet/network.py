"""Threshold filtering and graph emission (DOT, ranked tables, JSON).

The node filter runs first: an edge survives only if its score passes the
edge threshold AND both endpoints passed the node threshold.  Nodes that
keep no edges stay in the graph as orphans.  All emitters are
deterministic byte-for-byte for a given graph.
"""

import json
from dataclasses import dataclass

from .metrics import FrequencyTable, InteractionMatrix


@dataclass(frozen=True)
class Thresholds:
    node_min: float = 0.15
    edge_min: float = 0.15

    def __post_init__(self):
        for label, v in (("node_min", self.node_min), ("edge_min", self.edge_min)):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{label} must be in [0, 1], got {v}")


@dataclass(frozen=True)
class GraphNode:
    name: str
    kind: str
    f: float


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    i: float


@dataclass(frozen=True)
class GraphMeta:
    scope: str
    kernel: str
    thresholds: Thresholds


@dataclass(frozen=True)
class NetworkGraph:
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]
    meta: GraphMeta


def build_network(
    freq: FrequencyTable,
    inter: InteractionMatrix,
    thresholds: Thresholds,
    *,
    kinds: dict[str, str] | None = None,
    scope_label: str = "",
    kernel_label: str = "",
) -> NetworkGraph:
    """Keep nodes with F >= node_min, then edges with I >= edge_min between them."""
    kinds = kinds or {}
    kept = {name for name, f in freq.scores.items() if f >= thresholds.node_min}
    nodes = tuple(
        GraphNode(name=name, kind=kinds.get(name, "character"), f=freq.scores[name])
        for name in sorted(kept, key=lambda n: (-freq.scores[n], n))
    )
    edges = tuple(
        GraphEdge(source=a, target=b, i=score)
        for (a, b), score in sorted(inter.scores.items(), key=lambda kv: (-kv[1], kv[0]))
        if score >= thresholds.edge_min and a in kept and b in kept
    )
    return NetworkGraph(
        nodes=nodes,
        edges=edges,
        meta=GraphMeta(scope=scope_label, kernel=kernel_label, thresholds=thresholds),
    )


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(graph: NetworkGraph) -> str:
    """Render an undirected DOT graph; scores carry three decimals."""
    lines = ["graph chaplin {"]
    for node in graph.nodes:
        attrs = f'label="{node.name}\\nF={node.f:.3f}", fontsize={round(10 + 14 * node.f)}'
        if node.kind == "place":
            attrs += ", shape=box"
        lines.append(f"  {_quote(node.name)} [{attrs}];")
    for edge in graph.edges:
        lines.append(
            f"  {_quote(edge.source)} -- {_quote(edge.target)} "
            f'[label="{edge.i:.3f}", penwidth={1 + 4 * edge.i:.2f}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_tables(graph: NetworkGraph) -> str:
    """Ranked listings: names by F, then pairs by I (em-dash separated)."""
    if not graph.nodes:
        return ""
    lines = [f"{n.name}: F={n.f:.3f}" for n in graph.nodes]
    if graph.edges:
        lines.append("")
        lines.extend(f"{e.source}—{e.target}: I={e.i:.3f}" for e in graph.edges)
    return "\n".join(lines) + "\n"


def graph_payload(graph: NetworkGraph) -> dict:
    """The JSON-ready form of a graph; emit_json and the HTTP API share it."""
    return {
        "nodes": [{"name": n.name, "kind": n.kind, "f": n.f} for n in graph.nodes],
        "edges": [{"source": e.source, "target": e.target, "i": e.i} for e in graph.edges],
        "meta": {
            "scope": graph.meta.scope,
            "kernel": graph.meta.kernel,
            "thresholds": {
                "node_min": graph.meta.thresholds.node_min,
                "edge_min": graph.meta.thresholds.edge_min,
            },
        },
    }


def emit_json(graph: NetworkGraph) -> str:
    return json.dumps(graph_payload(graph), separators=(",", ":"), ensure_ascii=False)
