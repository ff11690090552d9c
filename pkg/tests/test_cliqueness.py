import numpy as np
import pytest

from oracles import count_missing, random_slices
from softclique.cliqueness import (
    is_persistent_clique,
    missing_counts,
    slack_per_slice,
    slice_missing_matrix,
)
from softclique.temporal_graph import TemporalGraph

rng = np.random.default_rng(4519)


def test_slack_hand_case():
    # triangle with only edge (0,1): selecting all three misses (0,2),(1,2)
    g = TemporalGraph.from_edge_lists(3, [[(0, 1)]])
    assert list(slack_per_slice([1, 1, 1], g)) == [2]


def test_slack_empty_and_singleton_are_zero():
    g = TemporalGraph.from_edge_lists(3, [[], []])
    assert list(slack_per_slice([0, 0, 0], g)) == [0, 0]
    assert list(slack_per_slice([0, 1, 0], g)) == [0, 0]


def test_slack_matches_brute_force():
    for _ in range(30):
        n = int(rng.integers(2, 9))
        T = int(rng.integers(1, 5))
        slices = random_slices(rng, n, T)
        g = TemporalGraph(n=n, slices=tuple(slices))
        x = rng.integers(0, 2, size=n).astype(np.int64)
        sel = [int(i) for i in np.flatnonzero(x)]
        expected = [count_missing(sel, s) for s in slices]
        assert list(slack_per_slice(x, g)) == expected


def test_slice_missing_matrix():
    g = TemporalGraph.from_edge_lists(3, [[(0, 1)]])
    M = slice_missing_matrix(g, 0)
    assert M.dtype == np.int64
    assert M[0, 1] == 0 and M[1, 0] == 0
    assert M[0, 2] == 1 and M[1, 2] == 1
    assert np.all(np.diagonal(M) == 0)
    assert np.array_equal(M, M.T)


def test_missing_counts_sums_slices():
    g = TemporalGraph.from_edge_lists(3, [[(0, 1)], [(0, 1), (0, 2)], []])
    C = missing_counts(g)
    assert C[0, 1] == 1  # missing only in the empty slice
    assert C[0, 2] == 2
    assert C[1, 2] == 3


def test_is_persistent_clique():
    g = TemporalGraph.from_edge_lists(3, [[(0, 1), (1, 2)], [(0, 1), (0, 2)]])
    assert is_persistent_clique([1, 1, 0], g)  # (0,1) present everywhere
    assert not is_persistent_clique([1, 1, 1], g)
    assert is_persistent_clique([0, 0, 0], g)


def test_slack_rejects_bad_selection():
    g = TemporalGraph.from_edge_lists(3, [[(0, 1)]])
    with pytest.raises(ValueError):
        slack_per_slice([1, 1], g)
