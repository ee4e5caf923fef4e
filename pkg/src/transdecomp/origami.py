"""Five-colouring of the dodecahedron's edges from the Petersen decomposition.

Pipeline: GP(10, 2) -> antipodal blocks -> quotient -> identify with the
Kneser-labelled Petersen graph -> pull the Q_a parts back -> lift to the
dodecahedron -> verify against the rotation group.  The colour of an edge is
``a - 1`` for the part lifted from Q_a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .decomposition import (EdgePartition, VerificationReport, is_one_decomposition,
                            lift, petersen_Qa_partition, transport, verify)
from .errors import InputError, PipelineError, TransDecompError
from .graph import (BlockSystem, Edge, Graph, antipodal_blocks_gp10_2, automorphism_group,
                    generalized_petersen, internal_edges, isomorphism, kneser_petersen,
                    quotient, to_dot)
from .permgroup import (Permutation, PermGroup, derived_subgroup,
                        induced_action_on_blocks, inverse, is_transitive)

COLOR_NAMES = ("red", "yellow", "green", "blue", "purple")


@dataclass(frozen=True)
class Coloring:
    graph: Graph
    color_of: Mapping[Edge, int]
    color_names: tuple[str, ...] = COLOR_NAMES

    def classes(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in self.color_names]
        for e in sorted(self.color_of):
            out[self.color_of[e]].append(e)
        return out


@dataclass(frozen=True)
class PipelineResult:
    """Every intermediate object of the dodecahedron pipeline."""

    graph: Graph
    blocks: BlockSystem
    quotient_graph: Graph
    kneser: Graph
    identification: Permutation      # quotient vertex -> Kneser vertex
    quotient_partition: EdgePartition
    automorphisms: PermGroup
    rotations: PermGroup
    block_group: PermGroup
    partition: EdgePartition
    report: VerificationReport
    coloring: Coloring


def _stage(name: str, ok: bool, message: str) -> None:
    if not ok:
        raise PipelineError(name, message)


def run_pipeline(color_names: tuple[str, ...] = COLOR_NAMES) -> PipelineResult:
    if len(color_names) != 5:
        raise InputError("exactly five colour names are required")
    try:
        graph = generalized_petersen(10, 2)
        blocks = antipodal_blocks_gp10_2()
        _stage("blocks", not internal_edges(graph, blocks),
               "an antipodal block contains an edge")
        qgraph = quotient(graph, blocks)
        kneser = kneser_petersen()
        phi = isomorphism(qgraph, kneser)
        _stage("identify", phi is not None, "antipodal quotient is not the Petersen graph")

        qa = petersen_Qa_partition()
        pulled = transport(qa, inverse(phi), qgraph)

        aut = automorphism_group(graph)
        _stage("automorphisms", aut.order == 120, f"|Aut| = {aut.order}, expected 120")
        rotations = derived_subgroup(aut)
        if rotations.order != 60 or not is_transitive(rotations, range(graph.n)):
            rotations = aut
        block_group, _ = induced_action_on_blocks(rotations, blocks)
        _stage("block action", block_group.order == 60,
               f"induced group on blocks has order {block_group.order}, expected 60")
        qreport = verify(pulled, block_group)
        _stage("quotient decomposition", qreport.ok and qreport.max_subgraph_valency == 1,
               "pulled-back Q_a partition is not a transitive 1-decomposition")

        partition = lift(graph, blocks, pulled, rotations)
        report = verify(partition, rotations)
        _stage("verify", report.ok and report.max_subgraph_valency == 1,
               "lifted partition is not a transitive 1-decomposition")
        _stage("verify", is_one_decomposition(partition), "a colour class is not a matching")
    except PipelineError:
        raise
    except TransDecompError as exc:
        raise PipelineError("pipeline", str(exc)) from exc

    color_of = {}
    for part, name in zip(partition.parts, partition.names):
        for e in part:
            color_of[e] = int(name) - 1
    coloring = Coloring(graph, dict(sorted(color_of.items())), tuple(color_names))
    return PipelineResult(graph, blocks, qgraph, kneser, phi, pulled, aut, rotations,
                          block_group, partition, report, coloring)


def build_dodecahedron_coloring(
        color_names: tuple[str, ...] = COLOR_NAMES) -> tuple[Coloring, VerificationReport]:
    result = run_pipeline(color_names)
    return result.coloring, result.report


def export_coloring(c: Coloring, format: str) -> bytes:
    """Serialize as ``json`` or ``dot``; output is deterministic."""
    if format == "json":
        records = [json.dumps({"u": u, "v": v, "color": c.color_of[(u, v)]})
                   for u, v in sorted(c.color_of)]
        body = ",\n    ".join(records)
        return f'{{\n  "n": {c.graph.n},\n  "edges": [\n    {body}\n  ]\n}}\n'.encode()
    if format == "dot":
        colors = {e: c.color_names[k] for e, k in c.color_of.items()}
        return to_dot(c.graph, colors).encode()
    raise InputError(f"unknown export format {format!r}; use json or dot")


def parse_coloring_json(data: bytes | str) -> dict[Edge, int]:
    doc = json.loads(data)
    return {(r["u"], r["v"]): r["color"] for r in doc["edges"]}
