"""castnet: character/place interaction networks from literary texts."""

from .cast import (
    Cast,
    CastError,
    ExtractionConstraints,
    NameEntry,
    Occurrence,
    OccurrenceIndex,
    RawWordEntry,
    extract_raw_words,
    format_cast_file,
    match_occurrences,
    parse_cast_file,
)
from .corpus import Corpus, TextUnit, Token, load_corpus, tokenize
from .metrics import (
    AnalysisScope,
    FrequencyTable,
    InteractionMatrix,
    ProximityKernel,
    compute_frequency,
    compute_interaction,
    proximity,
)
from .network import (
    GraphEdge,
    GraphMeta,
    GraphNode,
    NetworkGraph,
    Thresholds,
    build_network,
    emit_dot,
    emit_json,
    emit_tables,
    graph_payload,
)
from .pipeline import AnalysisParams, AnalysisResult, run_analysis

__version__ = "0.1.0"

__all__ = [
    "AnalysisParams",
    "AnalysisResult",
    "AnalysisScope",
    "Cast",
    "CastError",
    "Corpus",
    "ExtractionConstraints",
    "FrequencyTable",
    "GraphEdge",
    "GraphMeta",
    "GraphNode",
    "InteractionMatrix",
    "NameEntry",
    "NetworkGraph",
    "Occurrence",
    "OccurrenceIndex",
    "ProximityKernel",
    "RawWordEntry",
    "TextUnit",
    "Thresholds",
    "Token",
    "build_network",
    "compute_frequency",
    "compute_interaction",
    "emit_dot",
    "emit_json",
    "emit_tables",
    "extract_raw_words",
    "format_cast_file",
    "graph_payload",
    "load_corpus",
    "match_occurrences",
    "parse_cast_file",
    "proximity",
    "run_analysis",
    "tokenize",
]
