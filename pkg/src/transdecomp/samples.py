"""Built-in example inputs, written out by ``transdecomp sample``."""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Callable

from . import formats
from .decomposition import EdgePartition, petersen_Qa_partition
from .graph import (BlockSystem, antipodal_blocks_gp10_2, complete_graph, cycle_graph,
                    generalized_petersen, kneser_action, kneser_petersen)
from .permgroup import Permutation, PermGroup, alternating_group, cyclic_group, symmetric_group
from .pls import fano_plane


def petersen_a5() -> PermGroup:
    """A5 acting on the Kneser-labelled Petersen graph."""
    return PermGroup([kneser_action(g) for g in alternating_group(5).generators])


def fano_group() -> PermGroup:
    """x -> x + 1 and x -> 2x modulo 7."""
    return PermGroup([Permutation(tuple((x + 1) % 7 for x in range(7))),
                      Permutation(tuple((2 * x) % 7 for x in range(7)))])


def k4_matchings() -> EdgePartition:
    return EdgePartition(complete_graph(4), (frozenset({(0, 1), (2, 3)}),
                                             frozenset({(0, 2), (1, 3)}),
                                             frozenset({(0, 3), (1, 2)})))


@lru_cache(maxsize=1)
def _pipeline():
    from .origami import run_pipeline
    return run_pipeline()


def dodecahedron_rotations() -> PermGroup:
    return _pipeline().rotations


def petersen_qa_on_quotient() -> EdgePartition:
    return _pipeline().quotient_partition


def _hexagon_blocks() -> BlockSystem:
    return BlockSystem.from_lists([[0, 3], [1, 4], [2, 5]])


SAMPLES: dict[str, tuple[str, Callable[[], Any]]] = {
    "petersen": ("Kneser-labelled Petersen graph",
                 lambda: formats.graph_to_json(kneser_petersen())),
    "petersen-qa": ("the five parts Q_a of the Petersen graph",
                    lambda: formats.partition_to_json(petersen_Qa_partition())),
    "petersen-a5": ("A5 acting on the Petersen graph",
                    lambda: formats.group_to_json(petersen_a5())),
    "petersen-trivial": ("trivial group of degree 10",
                         lambda: formats.group_to_json(PermGroup([], degree=10))),
    "dodecahedron": ("GP(10, 2), the dodecahedron graph",
                     lambda: formats.graph_to_json(generalized_petersen(10, 2))),
    "antipodal": ("antipodal blocks of GP(10, 2)",
                  lambda: formats.blocks_to_json(antipodal_blocks_gp10_2())),
    "dodecahedron-rotations": ("rotation group (order 60) of GP(10, 2)",
                               lambda: formats.group_to_json(dodecahedron_rotations())),
    "quotient-qa": ("Q_a pulled back to the antipodal quotient of GP(10, 2)",
                    lambda: formats.partition_to_json(petersen_qa_on_quotient())),
    "fano": ("Fano plane", lambda: formats.space_to_json(fano_plane())),
    "fano-group": ("line-transitive group of the Fano plane",
                   lambda: formats.group_to_json(fano_group())),
    "k4": ("complete graph K4", lambda: formats.graph_to_json(complete_graph(4))),
    "k4-matchings": ("K4 as three perfect matchings",
                     lambda: formats.partition_to_json(k4_matchings())),
    "s4": ("symmetric group of degree 4", lambda: formats.group_to_json(symmetric_group(4))),
    "hexagon": ("6-cycle", lambda: formats.graph_to_json(cycle_graph(6))),
    "hexagon-blocks": ("antipodal blocks of the 6-cycle",
                       lambda: formats.blocks_to_json(_hexagon_blocks())),
    "hexagon-rotations": ("rotations of the 6-cycle",
                          lambda: formats.group_to_json(cyclic_group(6))),
}
