"""Partial linear spaces and their correspondence with decompositions into cliques.

A space with a line-transitive group gives a transitive decomposition of its
collinearity graph whose parts are the complete graphs on the lines
(:func:`to_decomposition`).  Conversely, a transitive decomposition whose
parts are all complete subgraphs gives back a line-transitive space
(:func:`from_decomposition`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable

from .decomposition import EdgePartition, verify
from .errors import HypothesisError, InputError
from .graph import Graph
from .permgroup import Action, PermGroup, apply, orbit


@dataclass(frozen=True)
class Check:
    """Outcome of a validity test; falsy on failure, with the reason and witness."""

    ok: bool
    reason: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _line_key(line: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(line))


def is_partial_linear_space(points: int, lines: Iterable[Iterable[int]]) -> Check:
    lines = [frozenset(line) for line in lines]
    if len(lines) < 2:
        return Check(False, f"a partial linear space needs at least two lines, got {len(lines)}")
    for i, line in enumerate(lines):
        if len(line) < 2:
            return Check(False, f"line {i} has fewer than two points", witness=sorted(line))
        bad = [p for p in line if not (isinstance(p, int) and 0 <= p < points)]
        if bad:
            return Check(False, f"line {i} has point {bad[0]} outside 0..{points - 1}",
                         witness=sorted(line))
    seen: dict[tuple[int, int], int] = {}
    for i, line in enumerate(lines):
        for pair in combinations(sorted(line), 2):
            if pair in seen:
                return Check(False, f"points {list(pair)} lie on lines {seen[pair]} and {i}",
                             witness={"pair": list(pair), "lines": [seen[pair], i]})
            seen[pair] = i
    return Check(True)


@dataclass(frozen=True)
class PartialLinearSpace:
    """Points ``0..points-1`` and lines stored in lexicographic order."""

    points: int
    lines: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self):
        lines = tuple(sorted((frozenset(int(p) for p in line) for line in self.lines),
                             key=_line_key))
        check = is_partial_linear_space(self.points, lines)
        if not check:
            raise InputError(f"not a partial linear space: {check.reason}")
        object.__setattr__(self, "lines", lines)

    def sorted_lines(self) -> list[list[int]]:
        return [list(_line_key(line)) for line in self.lines]


def fano_plane() -> PartialLinearSpace:
    """Translates of the difference set {0, 1, 3} modulo 7."""
    return PartialLinearSpace(7, tuple(frozenset((d + t) % 7 for d in (0, 1, 3))
                                       for t in range(7)))


def is_line_transitive(space: PartialLinearSpace, group: PermGroup) -> Check:
    if group.degree != space.points:
        raise InputError(f"group degree {group.degree} != number of points {space.points}")
    lines = set(space.lines)
    for g in group.generators:
        for line in space.lines:
            image = apply(g, line, Action.BLOCKS)
            if image not in lines:
                return Check(False, f"{g} maps line {_line_key(line)} to non-line "
                                    f"{_line_key(image)}",
                             witness={"generator": list(g.images), "line": list(_line_key(line))})
    reached = orbit(group, space.lines[0], Action.BLOCKS)
    if reached != lines:
        missing = min((line for line in lines - reached), key=_line_key)
        return Check(False, f"no element maps line {_line_key(space.lines[0])} to "
                            f"{_line_key(missing)}",
                     witness={"from": list(_line_key(space.lines[0])),
                              "to": list(_line_key(missing))})
    return Check(True)


def to_decomposition(space: PartialLinearSpace) -> tuple[Graph, EdgePartition]:
    """Collinearity graph and its partition into the line cliques."""
    parts = [frozenset(combinations(sorted(line), 2)) for line in space.lines]
    edges = frozenset().union(*parts)
    graph = Graph(space.points, edges)
    partition = EdgePartition(graph, tuple(parts))
    for line, part in zip(space.lines, parts):
        if len(part) != len(line) * (len(line) - 1) // 2:
            raise AssertionError(f"part for line {_line_key(line)} is not complete")
    return graph, partition


def part_vertices(part: Iterable[tuple[int, int]]) -> frozenset[int]:
    return frozenset(v for e in part for v in e)


def from_decomposition(graph: Graph, partition: EdgePartition,
                       group: PermGroup) -> PartialLinearSpace:
    """Lines are the vertex sets of the parts; each part must be complete.

    Raises :class:`HypothesisError` when a part is not a complete subgraph or
    the partition is not a ``group``-transitive decomposition, and
    :class:`InputError` when the lines do not form a partial linear space.
    """
    if partition.graph != graph:
        raise InputError("partition belongs to a different graph")
    for i, part in enumerate(partition.parts):
        verts = sorted(part_vertices(part))
        for u, v in combinations(verts, 2):
            if (u, v) not in part:
                raise HypothesisError(
                    f"part {partition.name(i)} is not a complete subgraph: "
                    f"edge {[u, v]} is missing",
                    witness={"part": i, "missing_edge": [u, v]})
    report = verify(partition, group)
    if not report.ok:
        raise HypothesisError("partition is not a transitive decomposition under the group: "
                              + "; ".join(w["message"] for w in report.witnesses),
                              witness=report.to_dict())
    space = PartialLinearSpace(graph.n, tuple(part_vertices(p) for p in partition.parts))
    if not is_line_transitive(space, group):
        raise AssertionError("recovered space is not line transitive")
    return space
