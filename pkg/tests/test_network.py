"""Threshold filtering and the DOT/table/JSON emitters."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from castnet.metrics import FrequencyTable, InteractionMatrix
from castnet.network import (
    Thresholds,
    build_network,
    emit_dot,
    emit_json,
    emit_tables,
)

from dot_grammar import DotSyntaxError, validate_dot


def freq_of(**scores):
    return FrequencyTable(scores=dict(scores), raw_counts={k: 1 for k in scores})


def inter_of(pairs):
    scores = {tuple(sorted(k)): v for k, v in pairs.items()}
    return InteractionMatrix(scores=scores, raw_weights=dict(scores))


def graph_of(f_scores, i_scores, node_min=0.15, edge_min=0.15, **kwargs):
    return build_network(
        freq_of(**f_scores),
        inter_of(i_scores),
        Thresholds(node_min=node_min, edge_min=edge_min),
        **kwargs,
    )


# --- build_network ----------------------------------------------------------


def test_node_filter_kills_edges_of_dropped_nodes():
    g = graph_of(
        {"A": 1.0, "B": 0.5, "C": 0.14},
        {("A", "B"): 1.0, ("A", "C"): 0.9},
    )
    assert [n.name for n in g.nodes] == ["A", "B"]
    assert [(e.source, e.target) for e in g.edges] == [("A", "B")]


def test_orphan_node_kept_when_edges_fall_below_threshold():
    g = graph_of({"A": 1.0, "D": 0.30}, {("A", "D"): 0.10})
    assert [n.name for n in g.nodes] == ["A", "D"]
    assert g.edges == ()


def test_zero_thresholds_keep_everything_positive():
    g = graph_of(
        {"A": 1.0, "B": 0.01, "C": 0.5},
        {("A", "B"): 0.02, ("B", "C"): 0.01},
        node_min=0.0,
        edge_min=0.0,
    )
    assert {n.name for n in g.nodes} == {"A", "B", "C"}
    assert len(g.edges) == 2


def test_nodes_sorted_by_score_then_name():
    g = graph_of({"B": 0.5, "A": 0.5, "C": 1.0}, {}, node_min=0.0)
    assert [n.name for n in g.nodes] == ["C", "A", "B"]


def test_edges_sorted_by_score_then_pair():
    g = graph_of(
        {"A": 1.0, "B": 1.0, "C": 1.0, "D": 1.0},
        {("C", "D"): 0.5, ("A", "D"): 0.5, ("A", "B"): 0.9},
        edge_min=0.0,
    )
    assert [(e.source, e.target) for e in g.edges] == [("A", "B"), ("A", "D"), ("C", "D")]


def test_kinds_and_labels_carried_into_graph():
    g = graph_of(
        {"ELSINORE": 1.0},
        {},
        kinds={"ELSINORE": "place"},
        scope_label="whole",
        kernel_label="rect(window=60)",
    )
    assert g.nodes[0].kind == "place"
    assert g.meta.scope == "whole"
    assert g.meta.kernel == "rect(window=60)"


def test_thresholds_validated():
    with pytest.raises(ValueError):
        Thresholds(node_min=1.01)
    with pytest.raises(ValueError):
        Thresholds(edge_min=-0.1)


@given(
    st.dictionaries(st.sampled_from("ABCDEFG"), st.floats(0, 1), min_size=1, max_size=7),
    st.floats(0, 1),
    st.floats(0, 1),
)
def test_threshold_monotonicity_and_closure(f_scores, node_min, edge_min):
    names = sorted(f_scores)
    i_scores = {}
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            i_scores[(a, b)] = round((f_scores[a] + f_scores[b]) / 2, 3)
    loose = graph_of(f_scores, i_scores, node_min=node_min / 2, edge_min=edge_min / 2)
    tight = graph_of(f_scores, i_scores, node_min=node_min, edge_min=edge_min)

    assert {n.name for n in tight.nodes} <= {n.name for n in loose.nodes}
    assert {(e.source, e.target) for e in tight.edges} <= {
        (e.source, e.target) for e in loose.edges
    }
    for g in (loose, tight):
        node_names = {n.name for n in g.nodes}
        for e in g.edges:
            assert e.source in node_names and e.target in node_names


# --- emit_dot -----------------------------------------------------------------


def test_dot_empty_graph_exact():
    g = graph_of({}, {})
    assert emit_dot(g) == "graph chaplin {\n}\n"


def test_dot_single_node_statement():
    g = graph_of({"HAMLET": 1.0}, {})
    assert '"HAMLET" [label="HAMLET\\nF=1.000", fontsize=24];' in emit_dot(g)


def test_dot_edge_statement():
    g = graph_of({"HAMLET": 1.0, "HORATIO": 0.9}, {("HAMLET", "HORATIO"): 1.0})
    assert '"HAMLET" -- "HORATIO" [label="1.000", penwidth=5.00];' in emit_dot(g)


def test_dot_place_nodes_get_box_shape():
    g = graph_of({"ELSINORE": 1.0}, {}, kinds={"ELSINORE": "place"})
    assert "shape=box" in emit_dot(g)


def test_dot_fontsize_scales_with_f():
    g = graph_of({"A": 1.0, "B": 0.5}, {}, node_min=0.0)
    dot = emit_dot(g)
    assert "fontsize=24" in dot  # 10 + 14*1.0
    assert "fontsize=17" in dot  # 10 + 14*0.5


def test_dot_is_valid_per_grammar():
    g = graph_of(
        {"HAMLET": 1.0, "HORATIO": 0.9, "ELSINORE": 0.4},
        {("HAMLET", "HORATIO"): 1.0, ("HAMLET", "ELSINORE"): 0.2},
        kinds={"ELSINORE": "place"},
    )
    validate_dot(emit_dot(g))


def test_dot_quotes_names_with_apostrophes():
    g = graph_of({"HAMLET'S GHOST": 1.0}, {})
    dot = emit_dot(g)
    assert "\"HAMLET'S GHOST\"" in dot
    validate_dot(dot)


def test_dot_grammar_validator_rejects_garbage():
    with pytest.raises(DotSyntaxError):
        validate_dot('graph chaplin { "A" [label="broken ; }')
    with pytest.raises(DotSyntaxError):
        validate_dot('digraph x { "A"; }')


# --- emit_tables ----------------------------------------------------------------


def test_tables_empty_graph_is_empty_string():
    assert emit_tables(graph_of({}, {})) == ""


def test_tables_rank_names_then_pairs():
    g = graph_of(
        {"HAMLET": 1.0, "HORATIO": 0.315},
        {("HAMLET", "HORATIO"): 1.0},
    )
    text = emit_tables(g)
    lines = text.splitlines()
    assert lines[0] == "HAMLET: F=1.000"
    assert lines[1] == "HORATIO: F=0.315"
    assert lines[2] == ""
    assert lines[3] == "HAMLET—HORATIO: I=1.000"


def test_tables_ties_alphabetical():
    g = graph_of({"BETA": 0.5, "ALFA": 0.5, "TOP": 1.0}, {}, node_min=0.0)
    lines = emit_tables(g).splitlines()
    assert lines == ["TOP: F=1.000", "ALFA: F=0.500", "BETA: F=0.500"]


def test_tables_nodes_only_have_no_pair_section():
    g = graph_of({"A": 1.0}, {})
    assert emit_tables(g) == "A: F=1.000\n"


# --- emit_json -------------------------------------------------------------------


def test_json_empty_graph_shape():
    g = graph_of({}, {}, scope_label="whole", kernel_label="rect(window=60)")
    data = json.loads(emit_json(g))
    assert data == {
        "nodes": [],
        "edges": [],
        "meta": {
            "scope": "whole",
            "kernel": "rect(window=60)",
            "thresholds": {"node_min": 0.15, "edge_min": 0.15},
        },
    }


def test_json_round_trip_reconstructs_sets():
    g = graph_of(
        {"A": 1.0, "B": 0.4, "C": 0.2},
        {("A", "B"): 0.9, ("B", "C"): 0.3},
    )
    data = json.loads(emit_json(g))
    assert {(n["name"], n["kind"], n["f"]) for n in data["nodes"]} == {
        (n.name, n.kind, n.f) for n in g.nodes
    }
    assert {(e["source"], e["target"], e["i"]) for e in data["edges"]} == {
        (e.source, e.target, e.i) for e in g.edges
    }


def test_json_orphan_graph():
    g = graph_of({"A": 1.0}, {})
    data = json.loads(emit_json(g))
    assert data["edges"] == []
    assert len(data["nodes"]) == 1


def test_emitters_are_deterministic():
    def make():
        return graph_of(
            {"A": 1.0, "B": 0.4, "C": 0.2},
            {("A", "B"): 0.9, ("B", "C"): 0.3},
            scope_label="whole",
            kernel_label="rect(window=60)",
        )

    g1, g2 = make(), make()
    assert emit_dot(g1) == emit_dot(g2)
    assert emit_tables(g1) == emit_tables(g2)
    assert emit_json(g1) == emit_json(g2)
