from __future__ import annotations

import pytest
from hypothesis import given

from iterlex.errors import DimensionMismatch, DuplicatePoint
from iterlex.trie import PointTrie, build_trie, witness_matrix

from conftest import point_sets


def test_fork_level_of_second_point():
    trie = PointTrie(4)
    trie.extend((0, 0, 0, 0))
    f, v = trie.extend((0, 0, 0, 1))
    assert f == 4
    assert trie.sigma_antecedent(v, range(1, 2)) == 1


def test_fourth_point_shares_two_coordinates():
    trie = build_trie([(1, 0, 0), (0, 1, 0), (1, 1, 2)])
    f, v = trie.extend((1, 0, 3))
    assert f == 3
    assert trie.node_of(4, 1).label == [1, 3, 4]
    assert trie.node_of(4, 2).label == [1, 4]
    assert v.label == [4]


def test_first_point():
    trie = PointTrie(3)
    f, v = trie.extend((5, 6, 7))
    assert f == 1
    assert all(node.label == [1] for node in trie.paths[1])


def test_rejects_duplicates_and_wrong_length():
    trie = build_trie([(1, 2)])
    with pytest.raises(DuplicatePoint):
        trie.extend((1, 2))
    with pytest.raises(DimensionMismatch):
        trie.extend((1, 2, 3))
    assert len(trie) == 1


def test_witness_matrix_example():
    X = [(1, 0), (0, 1), (0, 2)]
    expected = [[0, 1, 1], [1, 0, 2], [1, 2, 0]]
    assert build_trie(X).witness_matrix() == expected
    assert witness_matrix(X) == expected
    assert witness_matrix([(3, 3)]) == [[0]]


def test_fork_with_disjoint_set_is_zero():
    trie = build_trie([(0, 0), (0, 1), (1, 0)])
    v = trie.node_of(3, 1)
    assert trie.fork(1, trie.node_of(2, 2), {3}) == 0
    assert trie.fork(1, v, {1, 2}) == 1


def test_antecedent_picks_latest_first_hit():
    # siblings of the new node: {1,3} and {2}; with S={1,2,3} the latest first hit is 2
    trie = build_trie([(0, 0), (1, 0), (0, 1)])
    f, v = trie.extend((2, 5))
    assert f == 1
    assert trie.sigma_antecedent(v, {1, 2, 3}) == 2
    assert trie.sigma_antecedent(v, {3}) == 3


@given(point_sets(max_N=15))
def test_trie_invariants(pts):
    trie = build_trie(pts)
    n = len(pts[0])
    for level in trie.levels()[1:]:
        for v in level:
            edges = [c.edge for c in v.children]
            assert len(edges) == len(set(edges))
            assert v.label == sorted(v.label)
    for i in range(1, len(pts) + 1):
        assert len(trie.paths[i]) == n + 1
        for j in range(1, len(pts) + 1):
            for h in range(n + 1):
                same = trie.node_of(i, h) is trie.node_of(j, h)
                assert same == (pts[i - 1][:h] == pts[j - 1][:h])
    assert trie.witness_matrix() == witness_matrix(pts)


@given(point_sets(max_N=10))
def test_remove_last_restores_shape(pts):
    trie = build_trie(pts[:-1], n=len(pts[0])) if len(pts) > 1 else PointTrie(len(pts[0]))
    before = trie.dump()
    trie.extend(pts[-1])
    trie.remove_last()
    assert trie.dump() == before
