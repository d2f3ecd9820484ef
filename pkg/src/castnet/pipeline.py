"""One-call analysis pipeline: match, score, filter, emit.

Both the CLI and the HTTP service run analyses through run_analysis, so
their outputs are the same bytes for the same inputs.
"""

from dataclasses import dataclass, field

from .cast import Cast, match_occurrences
from .corpus import Corpus
from .metrics import (
    AnalysisScope,
    ProximityKernel,
    compute_frequency,
    compute_interaction,
)
from .network import NetworkGraph, Thresholds, build_network, emit_dot, emit_json, emit_tables


@dataclass(frozen=True)
class AnalysisParams:
    unit_index: int | None = None  # None analyzes the whole corpus
    kernel: ProximityKernel = field(default_factory=ProximityKernel)
    thresholds: Thresholds = field(default_factory=Thresholds)


@dataclass(frozen=True)
class AnalysisResult:
    graph: NetworkGraph
    dot: str
    tables: str
    json_text: str


def scope_label(corpus: Corpus, unit_index: int | None) -> str:
    if unit_index is None:
        return "whole"
    return corpus.unit(unit_index).id


def run_analysis(corpus: Corpus, cast: Cast, params: AnalysisParams) -> AnalysisResult:
    """Run match -> F -> I -> threshold filter -> emitters for one scope."""
    index = match_occurrences(corpus, cast)
    if params.unit_index is None:
        scope = AnalysisScope.whole(corpus.unit_indices)
    else:
        scope = AnalysisScope.single(params.unit_index)
    freq = compute_frequency(index, scope)
    inter = compute_interaction(index, scope, params.kernel)
    graph = build_network(
        freq,
        inter,
        params.thresholds,
        kinds=cast.kinds,
        scope_label=scope_label(corpus, params.unit_index),
        kernel_label=params.kernel.describe(),
    )
    return AnalysisResult(
        graph=graph,
        dot=emit_dot(graph),
        tables=emit_tables(graph),
        json_text=emit_json(graph),
    )
