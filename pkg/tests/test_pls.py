from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import condition_checks
from transdecomp.decomposition import EdgePartition, verify
from transdecomp.errors import HypothesisError, InputError
from transdecomp.graph import complete_graph
from transdecomp.permgroup import Permutation, PermGroup, symmetric_group
from transdecomp.pls import (PartialLinearSpace, fano_plane, from_decomposition,
                             is_line_transitive, is_partial_linear_space, to_decomposition)
from transdecomp.samples import fano_group


def fano_lines():
    return [{(d + t) % 7 for d in (0, 1, 3)} for t in range(7)]


class TestValidity:
    def test_fano(self):
        assert is_partial_linear_space(7, fano_lines())
        # every pair lies on exactly one line
        for pair in combinations(range(7), 2):
            assert sum(set(pair) <= line for line in fano_lines()) == 1

    def test_shared_pair(self):
        check = is_partial_linear_space(4, [{0, 1, 2}, {0, 1, 3}])
        assert not check
        assert check.witness["pair"] == [0, 1]

    def test_one_line(self):
        check = is_partial_linear_space(3, [{0, 1, 2}])
        assert not check and "two lines" in check.reason

    def test_short_line_and_range(self):
        assert not is_partial_linear_space(3, [{0}, {1, 2}])
        assert not is_partial_linear_space(3, [{0, 1}, {2, 3}])

    def test_constructor_raises(self):
        with pytest.raises(InputError):
            PartialLinearSpace(4, (frozenset({0, 1, 2}), frozenset({0, 1, 3})))

    def test_lines_sorted(self):
        s = PartialLinearSpace(4, (frozenset({2, 3}), frozenset({0, 1})))
        assert s.sorted_lines() == [[0, 1], [2, 3]]


class TestLineTransitive:
    def test_fano(self):
        assert is_line_transitive(fano_plane(), fano_group())

    def test_fano_trivial(self):
        assert not is_line_transitive(fano_plane(), PermGroup([], degree=7))

    def test_swap(self):
        space = PartialLinearSpace(4, (frozenset({0, 1}), frozenset({2, 3})))
        assert is_line_transitive(space, PermGroup([Permutation((2, 3, 0, 1))]))

    def test_preservation_failure(self):
        space = PartialLinearSpace(4, (frozenset({0, 1}), frozenset({2, 3})))
        check = is_line_transitive(space, PermGroup([Permutation((1, 2, 3, 0))]))
        assert not check and check.witness["line"] == [0, 1]


class TestToDecomposition:
    def test_fano_gives_k7(self):
        graph, partition = to_decomposition(fano_plane())
        assert graph.edges == complete_graph(7).edges
        assert len(partition) == 7 and all(len(p) == 3 for p in partition.parts)

    def test_two_triangles(self):
        space = PartialLinearSpace(6, (frozenset({0, 1, 2}), frozenset({3, 4, 5})))
        graph, partition = to_decomposition(space)
        assert graph.edges == {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
        assert len(partition) == 2

    def test_two_edges(self):
        graph, partition = to_decomposition(
            PartialLinearSpace(4, (frozenset({0, 1}), frozenset({2, 3}))))
        assert graph.edges == {(0, 1), (2, 3)}
        assert partition.parts == (frozenset({(0, 1)}), frozenset({(2, 3)}))

    def test_group_transfers(self):
        graph, partition = to_decomposition(fano_plane())
        group = fano_group()
        assert verify(partition, group).ok
        assert condition_checks(partition.parts, [p.images for p in group.enumerate()])[:2] == \
            (True, True)


class TestFromDecomposition:
    def test_k4_matchings_rejected(self):
        k4 = complete_graph(4)
        part = EdgePartition(k4, (frozenset({(0, 1), (2, 3)}), frozenset({(0, 2), (1, 3)}),
                                  frozenset({(0, 3), (1, 2)})))
        with pytest.raises(HypothesisError) as info:
            from_decomposition(k4, part, symmetric_group(4))
        assert info.value.witness == {"part": 0, "missing_edge": [0, 2]}

    def test_fano_round_trip(self):
        space = fano_plane()
        graph, partition = to_decomposition(space)
        back = from_decomposition(graph, partition, fano_group())
        assert back == space
        assert {frozenset(l) for l in back.lines} == {frozenset(l) for l in fano_lines()}

    def test_single_part_rejected(self):
        k3 = complete_graph(3)
        with pytest.raises(InputError, match="two lines"):
            from_decomposition(k3, EdgePartition(k3, (k3.edges,)), symmetric_group(3))

    def test_not_transitive_rejected(self):
        graph, partition = to_decomposition(fano_plane())
        with pytest.raises(HypothesisError, match="not a transitive"):
            from_decomposition(graph, partition, PermGroup([], degree=7))

    @given(st.integers(2, 5), st.integers(2, 4), st.integers(0, 3), st.data())
    @settings(max_examples=40, deadline=None)
    def test_random_disjoint_lines_round_trip(self, k, s, isolated, data):
        # k disjoint lines of size s, shuffled, plus isolated points
        m = k * s + isolated
        order = data.draw(st.permutations(list(range(m))))
        lines = [frozenset(order[j * s:(j + 1) * s]) for j in range(k)]
        space = PartialLinearSpace(m, tuple(lines))
        # cycle line j onto line j + 1, point by point
        images = list(range(m))
        for j in range(k):
            for i in range(s):
                images[order[j * s + i]] = order[((j + 1) % k) * s + i]
        group = PermGroup([Permutation(tuple(images))])
        assert is_line_transitive(space, group)
        graph, partition = to_decomposition(space)
        assert graph.n == m
        assert verify(partition, group).ok
        assert from_decomposition(graph, partition, group) == space
