import json

import numpy as np
import pytest

from softclique.temporal_graph import (
    TemporalGraph,
    as_selection,
    canonical_edges,
    intersection_edges,
    load_temporal_graph,
    save_temporal_graph,
    selected_indices,
    selection_from_indices,
    temporal_graph_to_dict,
)


def test_canonical_edges_orders_and_dedupes():
    edges = canonical_edges([(2, 0), (0, 2), (1, 2)], 3)
    assert edges == frozenset({(0, 2), (1, 2)})


def test_canonical_edges_rejects_self_loop():
    with pytest.raises(ValueError):
        canonical_edges([(1, 1)], 3)


def test_canonical_edges_rejects_out_of_range():
    with pytest.raises(ValueError):
        canonical_edges([(0, 3)], 3)
    with pytest.raises(ValueError):
        canonical_edges([(-1, 0)], 3)


def test_graph_requires_positive_n_and_one_slice():
    with pytest.raises(ValueError):
        TemporalGraph.from_edge_lists(0, [[]])
    with pytest.raises(ValueError):
        TemporalGraph.from_edge_lists(3, [])


def test_labels_must_match_n():
    with pytest.raises(ValueError):
        TemporalGraph.from_edge_lists(3, [[(0, 1)]], labels=["a", "b"])
    g = TemporalGraph.from_edge_lists(2, [[(0, 1)]], labels=["a", "b"])
    assert g.labels == ("a", "b")


def test_slice_count_property():
    g = TemporalGraph.from_edge_lists(4, [[(0, 1)], [(1, 2)], []])
    assert g.T == 3
    assert g.n == 4


def test_json_round_trip(tmp_path):
    g = TemporalGraph.from_edge_lists(4, [[(0, 1), (2, 3)], [(1, 3)]], labels=list("wxyz"))
    path = tmp_path / "g.json"
    save_temporal_graph(g, path)
    h = load_temporal_graph(path)
    assert h == g


def test_save_is_deterministic(tmp_path):
    g = TemporalGraph.from_edge_lists(5, [[(3, 4), (0, 1), (1, 2)]])
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    save_temporal_graph(g, p1)
    save_temporal_graph(g, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_to_dict_sorts_edges():
    g = TemporalGraph.from_edge_lists(4, [[(2, 3), (0, 1), (1, 3)]])
    doc = temporal_graph_to_dict(g)
    assert doc["slices"][0]["edges"] == [[0, 1], [1, 3], [2, 3]]


def test_load_rejects_missing_fields(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 3}))
    with pytest.raises(ValueError):
        load_temporal_graph(path)


def test_load_accepts_dict_source():
    g = load_temporal_graph({"n": 3, "slices": [{"edges": [[0, 1]]}]})
    assert g.n == 3
    assert g.slices[0] == frozenset({(0, 1)})


def test_intersection_edges():
    g = TemporalGraph.from_edge_lists(
        3, [[(0, 1), (1, 2)], [(0, 1), (0, 2)], [(0, 1), (1, 2)]]
    )
    assert intersection_edges(g) == frozenset({(0, 1)})


def test_as_selection_validates():
    x = as_selection([0, 1, 1], 3)
    assert x.dtype == np.int64
    with pytest.raises(ValueError):
        as_selection([0, 1], 3)
    with pytest.raises(ValueError):
        as_selection([0, 2, 0], 3)


def test_selection_index_round_trip():
    x = selection_from_indices([3, 1], 5)
    assert list(x) == [0, 1, 0, 1, 0]
    assert selected_indices(x) == [1, 3]
    with pytest.raises(ValueError):
        selection_from_indices([5], 5)
