"""Edge partitions and the check that a group permutes them transitively.

A partition of the edge set is a *G-transitive decomposition* when every
element of G maps each part wholly onto a part, and G is transitive on the
parts.  :func:`verify` checks both conditions from generators only.
:func:`lift` pulls a decomposition of an imprimitive quotient back to the
original graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import HypothesisError, InputError, PartSplitError, PipelineError
from .graph import (BlockSystem, Edge, Graph, canonical_edge, internal_edges,
                    kneser_pairs, kneser_petersen, quotient)
from .permgroup import (Action, Permutation, PermGroup, apply,
                        induced_action_on_blocks, orbit)


@dataclass(frozen=True)
class EdgePartition:
    """A partition of ``graph.edges`` into nonempty named parts.

    Parts are reordered by their least edge on construction; ``names``
    (if given) follow their parts.
    """

    graph: Graph
    parts: tuple[frozenset[Edge], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        parts = [frozenset(canonical_edge(int(u), int(v)) for u, v in p) for p in self.parts]
        names = None if self.names is None else [str(x) for x in self.names]
        if names is not None and len(names) != len(parts):
            raise InputError(f"{len(names)} part names given for {len(parts)} parts")
        owner: dict[Edge, int] = {}
        for i, part in enumerate(parts):
            if not part:
                raise InputError(f"part {i} is empty")
            for e in part:
                if e not in self.graph.edges:
                    raise InputError(f"part {i} contains {list(e)}, which is not an edge")
                if e in owner:
                    raise InputError(f"edge {list(e)} lies in parts {owner[e]} and {i}")
                owner[e] = i
        if len(owner) != len(self.graph.edges):
            missing = min(self.graph.edges - owner.keys())
            raise InputError(f"edge {list(missing)} lies in no part")
        order = sorted(range(len(parts)), key=lambda i: min(parts[i]))
        object.__setattr__(self, "parts", tuple(parts[i] for i in order))
        if names is not None:
            object.__setattr__(self, "names", tuple(names[i] for i in order))

    @cached_property
    def part_of(self) -> dict[Edge, int]:
        return {e: i for i, part in enumerate(self.parts) for e in part}

    @cached_property
    def index(self) -> dict[frozenset[Edge], int]:
        return {part: i for i, part in enumerate(self.parts)}

    def __len__(self):
        return len(self.parts)

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)


def subgraph_valency(part: Iterable[Edge]) -> int:
    counts = Counter(v for e in part for v in e)
    return max(counts.values(), default=0)


def is_matching(part: Iterable[Edge]) -> bool:
    return subgraph_valency(part) <= 1


def is_one_decomposition(partition: EdgePartition) -> bool:
    """True iff every part is a matching."""
    return all(is_matching(p) for p in partition.parts)


def _require_automorphism(partition: EdgePartition, g: Permutation) -> None:
    graph = partition.graph
    if g.degree != graph.n:
        raise InputError(f"permutation degree {g.degree} != vertex count {graph.n}")
    for u, v in graph.edges:
        if canonical_edge(g(u), g(v)) not in graph.edges:
            raise InputError(f"{g} is not an automorphism: edge {[u, v]} maps to a non-edge")


def part_action(partition: EdgePartition, g: Permutation) -> Permutation:
    """Permutation of part indices induced by the automorphism ``g``.

    Raises :class:`PartSplitError` when some part's image is not exactly a part.
    """
    _require_automorphism(partition, g)
    images = []
    for i, part in enumerate(partition.parts):
        image = apply(g, part, Action.EDGE_PARTS)
        j = partition.index.get(image)
        if j is None:
            hit = tuple(sorted({partition.part_of[e] for e in image}))
            raise PartSplitError(
                f"{g} maps part {i} onto edges of parts {list(hit)}",
                generator=g, part=i, image_parts=hit)
        images.append(j)
    return Permutation(tuple(images))


@dataclass
class VerificationReport:
    is_partition: bool
    is_invariant: bool
    is_transitive: bool
    max_subgraph_valency: int
    num_parts: int
    part_sizes: list[int] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.is_partition and self.is_invariant and self.is_transitive

    def to_dict(self) -> dict:
        return {
            "is_partition": self.is_partition,
            "is_invariant": self.is_invariant,
            "is_transitive": self.is_transitive,
            "max_subgraph_valency": self.max_subgraph_valency,
            "num_parts": self.num_parts,
            "part_sizes": list(self.part_sizes),
            "witnesses": list(self.witnesses),
        }

    def summary(self) -> str:
        yn = {True: "yes", False: "NO"}
        lines = [
            f"parts:              {self.num_parts} (sizes {self.part_sizes})",
            f"partition:          {yn[self.is_partition]}",
            f"invariant (i):      {yn[self.is_invariant]}",
            f"transitive (ii):    {yn[self.is_transitive]}",
            f"max part valency:   {self.max_subgraph_valency}",
        ]
        for w in self.witnesses:
            lines.append(f"witness:            {w['message']}")
        return "\n".join(lines)


def verify(partition: EdgePartition, group: PermGroup) -> VerificationReport:
    """Check conditions (i) and (ii) against the generators of ``group``.

    Invariance is tested generator by generator.  When it holds the generators
    induce a permutation group on part indices and transitivity is read off
    the orbit of part 0; otherwise the orbit of part 0 is taken as a set of
    edge sets.
    """
    graph = partition.graph
    if group.degree != graph.n:
        raise InputError(f"group degree {group.degree} != vertex count {graph.n}")
    for g in group.generators:
        _require_automorphism(partition, g)

    witnesses = []
    induced = []
    invariant = True
    for g in group.generators:
        try:
            induced.append(part_action(partition, g))
        except PartSplitError as exc:
            invariant = False
            witnesses.append({
                "condition": "invariance",
                "generator": list(g.images),
                "part": exc.part,
                "image_parts": list(exc.image_parts),
                "message": f"generator {g} splits part {partition.name(exc.part)} across parts "
                           f"{[partition.name(j) for j in exc.image_parts]}",
            })
            break

    k = len(partition.parts)
    transitive = True
    if k > 1:
        if invariant:
            reached = orbit(PermGroup(induced, degree=k), 0)
        else:
            images = orbit(group, partition.parts[0], Action.EDGE_PARTS)
            reached = {partition.index[p] for p in images if p in partition.index}
        missing = sorted(set(range(k)) - set(reached))
        if missing:
            transitive = False
            j = missing[0]
            witnesses.append({
                "condition": "transitivity",
                "from_part": 0,
                "to_part": j,
                "message": f"no group element maps part {partition.name(0)} onto part "
                           f"{partition.name(j)}",
            })

    return VerificationReport(
        is_partition=True,
        is_invariant=invariant,
        is_transitive=transitive,
        max_subgraph_valency=max((subgraph_valency(p) for p in partition.parts), default=0),
        num_parts=k,
        part_sizes=[len(p) for p in partition.parts],
        witnesses=witnesses,
    )


def petersen_Qa_partition() -> EdgePartition:
    """The five parts Q_a of the Kneser-labelled Petersen graph, Q_a named ``a``.

    Q_a holds the three edges whose four labels avoid ``a``.
    """
    graph = kneser_petersen()
    pairs = kneser_pairs()
    parts = []
    for a in range(1, 6):
        parts.append(frozenset(e for e in graph.edges
                               if a not in set(pairs[e[0]]) | set(pairs[e[1]])))
    return EdgePartition(graph, tuple(parts), tuple(str(a) for a in range(1, 6)))


def transport(partition: EdgePartition, p: Permutation, target: Graph) -> EdgePartition:
    """Image of ``partition`` under the vertex map ``p``, as a partition of ``target``."""
    if p.degree != partition.graph.n or target.n != p.degree:
        raise InputError("vertex map degree does not match the graphs")
    parts = tuple(apply(p, part, Action.EDGE_PARTS) for part in partition.parts)
    return EdgePartition(target, parts, partition.names)


def lift_parts(graph: Graph, blocks: BlockSystem,
               quotient_parts: Sequence[Iterable[Edge]]) -> list[frozenset[Edge]]:
    """P_Q for each quotient part Q, in the given order: the edges of ``graph``
    whose endpoint blocks form an edge of Q."""
    where = blocks.block_of()
    owner = {}
    for i, part in enumerate(quotient_parts):
        for e in part:
            owner[canonical_edge(*e)] = i
    lifted: list[set[Edge]] = [set() for _ in quotient_parts]
    for u, v in graph.edges:
        key = canonical_edge(where[u], where[v])
        if key in owner:
            lifted[owner[key]].add((u, v))
    return [frozenset(p) for p in lifted]


def lift(graph: Graph, blocks: BlockSystem, quotient_partition: EdgePartition,
         group: PermGroup) -> EdgePartition:
    """Lift a decomposition of the quotient ``graph / blocks`` to ``graph``.

    Requires every block to be an independent set and the block system to be
    invariant under ``group``.  The result is checked to partition the edges.
    """
    blocks.validate(graph.n)
    if group.degree != graph.n:
        raise InputError(f"group degree {group.degree} != vertex count {graph.n}")
    bad = internal_edges(graph, blocks)
    if bad:
        u, v = bad[0]
        raise HypothesisError(
            f"block contains adjacent vertices {u} and {v}; blocks must be independent sets",
            witness=[u, v])
    induced_action_on_blocks(group, blocks)
    q = quotient(graph, blocks)
    qg = quotient_partition.graph
    if qg.n != q.n or qg.edges != q.edges:
        raise InputError("quotient partition is not a partition of the quotient graph's edges")

    parts = lift_parts(graph, blocks, quotient_partition.parts)
    try:
        return EdgePartition(graph, tuple(parts), quotient_partition.names)
    except InputError as exc:
        raise PipelineError("lift", f"lifted parts do not partition the edges: {exc}") from exc
