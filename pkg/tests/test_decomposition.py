import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from instances import random_cover
from oracles import alternating_elements, condition_checks, image_of_edges
from transdecomp.decomposition import (EdgePartition, is_one_decomposition, lift, lift_parts,
                                       part_action, petersen_Qa_partition, transport, verify)
from transdecomp.errors import HypothesisError, InputError, InvarianceError, PartSplitError
from transdecomp.graph import (BlockSystem, antipodal_blocks_gp10_2, automorphism_group,
                               complete_graph, cycle_graph, generalized_petersen,
                               isomorphism, kneser_action, kneser_petersen, quotient)
from transdecomp.permgroup import (Permutation, PermGroup, alternating_group, cyclic_group,
                                   derived_subgroup, induced_action_on_blocks, inverse,
                                   symmetric_group)

M01 = frozenset({(0, 1), (2, 3)})
M02 = frozenset({(0, 2), (1, 3)})
M03 = frozenset({(0, 3), (1, 2)})


def k4_matchings():
    return EdgePartition(complete_graph(4), (M03, M01, M02))


def k4_one_matching_plus_rest():
    return EdgePartition(complete_graph(4), (M01, M02 | M03))


def a5_on_petersen():
    return PermGroup([kneser_action(g) for g in alternating_group(5).generators])


class TestEdgePartition:
    def test_canonical_order(self):
        assert k4_matchings().parts == (M01, M02, M03)

    def test_names_follow_parts(self):
        p = EdgePartition(complete_graph(4), (M03, M01, M02), ("c", "a", "b"))
        assert p.names == ("a", "b", "c")

    def test_rejects_empty_part(self):
        with pytest.raises(InputError, match="empty"):
            EdgePartition(complete_graph(4), (M01, M02, M03, frozenset()))

    def test_rejects_overlap(self):
        with pytest.raises(InputError, match="lies in parts"):
            EdgePartition(complete_graph(4), (M01, M02 | M03 | {(0, 1)}))

    def test_rejects_missing_edge(self):
        with pytest.raises(InputError, match="no part"):
            EdgePartition(complete_graph(4), (M01, M02))

    def test_rejects_non_edge(self):
        with pytest.raises(InputError, match="not an edge"):
            EdgePartition(cycle_graph(4), (frozenset({(0, 2)}),))


class TestPartAction:
    def test_identity(self):
        assert part_action(k4_matchings(), Permutation.identity(4)).is_identity()

    def test_transposition_swaps_two_matchings(self):
        # (0 1) fixes {01, 23} and swaps {02, 13} with {03, 12}
        assert part_action(k4_matchings(), Permutation.from_cycles(4, (0, 1))).images == (0, 2, 1)

    def test_every_transposition_permutes_parts(self):
        part = k4_matchings()
        for a in range(4):
            for b in range(a + 1, 4):
                t = Permutation.from_cycles(4, (a, b))
                images = part_action(part, t).images
                for i, j in enumerate(images):
                    assert image_of_edges(t.images, part.parts[i]) == part.parts[j]

    def test_split_witness(self):
        # (0 1 2 3) sends {01, 23} to {12, 03}, which lies inside the other part
        rot = Permutation.from_cycles(4, (0, 1, 2, 3))
        with pytest.raises(PartSplitError) as info:
            part_action(k4_one_matching_plus_rest(), rot)
        assert info.value.part == 0
        assert info.value.image_parts == (1,)

    def test_rejects_non_automorphism(self):
        with pytest.raises(InputError, match="not an automorphism"):
            part_action(EdgePartition(cycle_graph(4), (cycle_graph(4).edges,)),
                        Permutation.from_cycles(4, (0, 1)))


class TestVerify:
    def test_petersen_qa_a5(self):
        report = verify(petersen_Qa_partition(), a5_on_petersen())
        assert report.is_invariant and report.is_transitive
        assert report.max_subgraph_valency == 1
        assert report.ok and not report.witnesses

    def test_k4_s4(self):
        report = verify(k4_matchings(), symmetric_group(4))
        assert report.ok and report.max_subgraph_valency == 1
        oracle = condition_checks(k4_matchings().parts, [p.images for p in symmetric_group(4)])
        assert oracle == (True, True, 1)

    def test_single_part(self):
        g = generalized_petersen(5, 2)
        report = verify(EdgePartition(g, (g.edges,)), automorphism_group(g))
        assert report.ok
        assert report.max_subgraph_valency == 3

    def test_trivial_group_witness(self):
        report = verify(petersen_Qa_partition(), PermGroup([], degree=10))
        assert report.is_invariant and not report.is_transitive
        (w,) = report.witnesses
        assert w["condition"] == "transitivity" and w["to_part"] == 1

    def test_invariance_witness(self):
        report = verify(k4_one_matching_plus_rest(), symmetric_group(4))
        assert not report.is_invariant
        assert report.witnesses[0]["condition"] == "invariance"

    def test_transitive_but_not_invariant(self):
        c4 = cycle_graph(4)
        part = EdgePartition(c4, (frozenset({(0, 1), (1, 2)}), frozenset({(2, 3), (0, 3)})))
        report = verify(part, cyclic_group(4))
        assert not report.is_invariant
        assert report.is_transitive

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            verify(k4_matchings(), symmetric_group(5))

    def test_non_automorphism_generator(self):
        c4 = cycle_graph(4)
        with pytest.raises(InputError, match=r"\(0 1\)"):
            verify(EdgePartition(c4, (c4.edges,)), PermGroup([Permutation.from_cycles(4, (0, 1))]))

    def test_generators_agree_with_enumeration(self):
        aut = automorphism_group(kneser_petersen())
        qa = petersen_Qa_partition()
        for gens in ([aut.generators[0]], list(aut.generators), [aut.elements[7]],
                     list(a5_on_petersen().generators)):
            group = PermGroup(gens)
            report = verify(qa, group)
            invariant, transitive, valency = condition_checks(
                qa.parts, [p.images for p in group.enumerate()])
            assert (report.is_invariant, report.is_transitive) == (invariant, transitive)
            assert report.max_subgraph_valency == valency


class TestOneDecomposition:
    def test_examples(self):
        assert is_one_decomposition(k4_matchings())
        k3 = complete_graph(3)
        assert not is_one_decomposition(EdgePartition(k3, (k3.edges,)))


class TestPetersenQa:
    def test_q5(self):
        qa = petersen_Qa_partition()
        labels = qa.graph.labels
        named = {qa.names[i]: {frozenset({labels[u], labels[v]}) for u, v in p}
                 for i, p in enumerate(qa.parts)}
        assert named["5"] == {frozenset({"{1,2}", "{3,4}"}), frozenset({"{1,3}", "{2,4}"}),
                              frozenset({"{1,4}", "{2,3}"})}

    def test_shape(self):
        qa = petersen_Qa_partition()
        assert len(qa) == 5
        assert all(len(p) == 3 for p in qa.parts)
        assert frozenset().union(*qa.parts) == kneser_petersen().edges
        assert sorted(qa.names) == ["1", "2", "3", "4", "5"]

    def test_each_part_is_a_perfect_matching_on_six_vertices(self):
        for p in petersen_Qa_partition().parts:
            assert len({v for e in p for v in e}) == 6

    def test_a5_maps_qa_to_q_ga(self):
        qa = petersen_Qa_partition()
        by_name = dict(zip(qa.names, qa.parts))
        for g in alternating_elements(5):
            lifted = kneser_action(Permutation(g))
            for a in range(1, 6):
                image = image_of_edges(lifted.images, by_name[str(a)])
                assert image == by_name[str(g[a - 1] + 1)]


def dodecahedron_instance():
    graph = generalized_petersen(10, 2)
    blocks = antipodal_blocks_gp10_2()
    q = quotient(graph, blocks)
    phi = isomorphism(q, kneser_petersen())
    qpart = transport(petersen_Qa_partition(), inverse(phi), q)
    rotations = derived_subgroup(automorphism_group(graph))
    return graph, blocks, qpart, rotations


class TestLift:
    def test_hexagon_single_part(self):
        c6 = cycle_graph(6)
        blocks = BlockSystem.from_lists([[0, 3], [1, 4], [2, 5]])
        q = quotient(c6, blocks)
        lifted = lift(c6, blocks, EdgePartition(q, (q.edges,)), cyclic_group(6))
        assert lifted.parts == (c6.edges,)

    def test_dodecahedron(self):
        graph, blocks, qpart, rotations = dodecahedron_instance()
        lifted = lift(graph, blocks, qpart, rotations)
        assert len(lifted) == 5
        assert all(len(p) == 6 for p in lifted.parts)
        report = verify(lifted, rotations)
        assert report.ok and report.max_subgraph_valency == 1

    def test_two_preimages_per_quotient_edge(self):
        graph, blocks, _, _ = dodecahedron_instance()
        where = blocks.block_of()
        counts = {}
        for u, v in graph.edges:
            key = tuple(sorted((where[u], where[v])))
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 15 and set(counts.values()) == {2}

    def test_equivariance(self):
        graph, blocks, qpart, rotations = dodecahedron_instance()
        lifted = lift_parts(graph, blocks, qpart.parts)
        cells = list(blocks.blocks)
        for g in rotations.elements:
            on_blocks = [cells.index(frozenset(g(v) for v in b)) for b in cells]
            for q_part, p_part in zip(qpart.parts, lifted):
                q_image = image_of_edges(on_blocks, q_part)
                j = qpart.parts.index(q_image)
                assert image_of_edges(g.images, p_part) == lifted[j]

    def test_rejects_adjacent_block(self):
        c6 = cycle_graph(6)
        blocks = BlockSystem.from_lists([[0, 1], [2, 3], [4, 5]])
        q = quotient(c6, blocks)
        with pytest.raises(HypothesisError) as info:
            lift(c6, blocks, EdgePartition(q, (q.edges,)), cyclic_group(6))
        assert info.value.witness == [0, 1]

    def test_rejects_non_invariant_blocks(self):
        c6 = cycle_graph(6)
        blocks = BlockSystem.from_lists([[0, 2], [1, 4], [3, 5]])
        q = quotient(c6, blocks)
        with pytest.raises(InvarianceError):
            lift(c6, blocks, EdgePartition(q, (q.edges,)), cyclic_group(6))

    def test_rejects_partition_of_wrong_graph(self):
        c6 = cycle_graph(6)
        blocks = BlockSystem.from_lists([[0, 3], [1, 4], [2, 5]])
        k4 = complete_graph(4)
        with pytest.raises(InputError):
            lift(c6, blocks, EdgePartition(k4, (k4.edges,)), cyclic_group(6))

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_random_covers_lift_to_decompositions(self, seed):
        inst = random_cover(random.Random(seed))
        lifted = lift(inst.graph, inst.blocks, inst.quotient_partition, inst.group)
        report = verify(lifted, inst.group)
        assert report.ok
        assert len(lifted) == len(inst.quotient_partition)
        invariant, transitive, _ = condition_checks(
            lifted.parts, [p.images for p in inst.group.enumerate()])
        assert invariant and transitive

    def test_quotient_valency_one_gives_lift_valency_one(self):
        graph, blocks, qpart, rotations = dodecahedron_instance()
        induced, _ = induced_action_on_blocks(rotations, blocks)
        assert verify(qpart, induced).max_subgraph_valency == 1
        assert is_one_decomposition(lift(graph, blocks, qpart, rotations))
