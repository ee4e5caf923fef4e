"""Simple undirected graphs, named constructions, symmetry search and quotients."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InputError, ResourceError
from .permgroup import DEFAULT_CAP, Permutation, PermGroup, inverse, small_generating_set

DEFAULT_SEARCH_BOUND = 32

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``0..n-1``.

    ``labels`` are for display only; they take no part in equality.
    """

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        edges = set()
        for e in self.edges:
            try:
                u, v = (int(x) for x in e)
            except (TypeError, ValueError):
                raise InputError(f"malformed edge {e!r}") from None
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e!r} has an endpoint outside 0..{self.n - 1}")
            edges.add(canonical_edge(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise InputError(f"{len(labels)} labels given for {self.n} vertices")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adjacency]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


@dataclass(frozen=True)
class BlockSystem:
    """A partition of ``0..n-1`` into nonempty blocks, in a fixed order."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(int(v) for v in b) for b in self.blocks)
        if any(not b for b in blocks):
            raise InputError("empty block")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_lists(cls, blocks: Iterable[Iterable[int]]) -> BlockSystem:
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> BlockSystem:
        return cls(tuple(frozenset([v]) for v in range(n)))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def validate(self, n: int) -> None:
        """Raise :class:`InputError` unless the blocks partition ``0..n-1`` exactly."""
        seen: dict[int, int] = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                if not 0 <= v < n:
                    raise InputError(f"block {i} contains vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise InputError(f"vertex {v} lies in blocks {seen[v]} and {i}")
                seen[v] = i
        if len(seen) != n:
            missing = min(set(range(n)) - set(seen))
            raise InputError(f"vertex {missing} lies in no block")

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}


# -- constructions -----------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("complete_graph needs n >= 1")
    return Graph(n, frozenset(combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle_graph needs n >= 3")
    return Graph(n, frozenset(canonical_edge(i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path_graph needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle a_i = i, inner vertices b_i = n + i joined at step k."""
    if n < 3 or not 1 <= k or not 2 * k < n:
        raise InputError(f"GP(n, k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}")
    edges = set()
    for i in range(n):
        edges.add(canonical_edge(i, (i + 1) % n))
        edges.add(canonical_edge(i, n + i))
        edges.add(canonical_edge(n + i, n + (i + k) % n))
    return Graph(2 * n, frozenset(edges))


def kneser_pairs() -> list[tuple[int, int]]:
    """The 2-subsets of {1..5} in lexicographic order; vertex i of the Petersen graph."""
    return list(combinations(range(1, 6), 2))


def kneser_petersen() -> Graph:
    """Petersen graph on 2-subsets of {1..5}, adjacent when disjoint."""
    pairs = kneser_pairs()
    edges = frozenset((i, j) for i, j in combinations(range(len(pairs)), 2)
                      if not set(pairs[i]) & set(pairs[j]))
    labels = tuple("{%d,%d}" % p for p in pairs)
    return Graph(len(pairs), edges, labels)


def kneser_action(p: Permutation) -> Permutation:
    """Lift a permutation of {0..4} (standing for {1..5}) to the Kneser vertices."""
    if p.degree != 5:
        raise InputError("kneser_action expects a permutation of degree 5")
    pairs = kneser_pairs()
    index = {frozenset(pr): i for i, pr in enumerate(pairs)}
    return Permutation(tuple(index[frozenset(p(a - 1) + 1 for a in pr)] for pr in pairs))


def antipodal_blocks_gp10_2() -> BlockSystem:
    """Antipodal pairs of GP(10, 2): {a_i, a_i+5} and {b_i, b_i+5} for i < 5."""
    outer = [frozenset({i, i + 5}) for i in range(5)]
    inner = [frozenset({10 + i, 15 + i}) for i in range(5)]
    return BlockSystem(tuple(outer + inner))


# -- automorphisms and isomorphisms -----------------------------------------

def is_automorphism(g: Graph, p: Permutation) -> bool:
    if p.degree != g.n:
        raise InputError(f"permutation degree {p.degree} != vertex count {g.n}")
    im = p.images
    return all(canonical_edge(im[u], im[v]) in g.edges for u, v in g.edges)


def _invariant_colours(g: Graph) -> list[tuple]:
    """Vertex invariants preserved by every isomorphism: degree and neighbour degrees."""
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[w] for w in g.adjacency[v]))) for v in range(g.n)]


def _iter_isomorphisms(g1: Graph, g2: Graph) -> Iterator[tuple[int, ...]]:
    """All isomorphisms g1 -> g2 as image tuples, in lexicographic order.

    Vertices of g1 are assigned in order 0, 1, ...; each candidate image is
    checked for matching invariants and for agreeing adjacency with every
    vertex already assigned.
    """
    n = g1.n
    if n != g2.n or len(g1.edges) != len(g2.edges):
        return
    c1, c2 = _invariant_colours(g1), _invariant_colours(g2)
    if sorted(c1) != sorted(c2):
        return
    candidates = [[w for w in range(n) if c2[w] == c1[v]] for v in range(n)]
    adj1, adj2 = g1.adjacency, g2.adjacency
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(image)
            return
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if (u in adj1[v]) != (image[u] in adj2[w]):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            yield from extend(v + 1)
            used[w] = False
        image[v] = -1

    yield from extend(0)


def _check_bound(g: Graph, bound: int) -> None:
    if g.n > bound:
        raise ResourceError(f"graph has {g.n} vertices; search bound is {bound}")


def automorphism_group(g: Graph, bound: int = DEFAULT_SEARCH_BOUND,
                       cap: int = DEFAULT_CAP) -> PermGroup:
    """Full automorphism group by backtracking, with every element enumerated.

    The generating set is the greedy one from :func:`small_generating_set`.
    """
    _check_bound(g, bound)
    elements = []
    for images in _iter_isomorphisms(g, g):
        elements.append(Permutation(images))
        if len(elements) > cap:
            raise ResourceError(f"automorphism group exceeds cap of {cap} elements")
    for p in elements:
        if not is_automorphism(g, p):
            raise AssertionError(f"search produced non-automorphism {p}")
    gens = small_generating_set(elements, cap)
    group = PermGroup(gens, elements=elements, degree=g.n)
    if len(_closure_of(gens, g.n, cap)) != len(elements):
        raise AssertionError("generators do not span the automorphism group")
    return group


def _closure_of(gens, n: int, cap: int):
    return PermGroup(gens, degree=n).enumerate(cap)


def isomorphism(g1: Graph, g2: Graph, bound: int = DEFAULT_SEARCH_BOUND) -> Permutation | None:
    """Lexicographically least vertex bijection carrying g1's edges onto g2's, or None."""
    _check_bound(g1, bound)
    _check_bound(g2, bound)
    for images in _iter_isomorphisms(g1, g2):
        return Permutation(images)
    return None


def relabel(g: Graph, p: Permutation) -> Graph:
    """Image of ``g`` under the vertex map ``p``."""
    if p.degree != g.n:
        raise InputError(f"permutation degree {p.degree} != vertex count {g.n}")
    labels = None
    if g.labels is not None:
        inv = inverse(p)
        labels = tuple(g.labels[inv(v)] for v in range(g.n))
    return Graph(g.n, frozenset(canonical_edge(p(u), p(v)) for u, v in g.edges), labels)


# -- quotients ---------------------------------------------------------------

def quotient(g: Graph, blocks: BlockSystem) -> Graph:
    """Imprimitive quotient: one vertex per block, adjacent when an edge crosses.

    Edges inside a block are dropped.
    """
    blocks.validate(g.n)
    where = blocks.block_of()
    edges = set()
    for u, v in g.edges:
        i, j = where[u], where[v]
        if i != j:
            edges.add(canonical_edge(i, j))
    return Graph(len(blocks), frozenset(edges))


def internal_edges(g: Graph, blocks: BlockSystem) -> list[Edge]:
    """Edges of ``g`` with both ends in one block, sorted."""
    where = blocks.block_of()
    return sorted(e for e in g.edges if where[e[0]] == where[e[1]])


# -- DOT ---------------------------------------------------------------------

def to_dot(g: Graph, edge_colors: Mapping[Edge, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.labels:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        if edge_colors is not None and (u, v) in edge_colors:
            lines.append(f'  {u} -- {v} [color="{edge_colors[(u, v)]}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edges_from_pairs(pairs: Sequence[Sequence[int]]) -> frozenset[Edge]:
    return frozenset(canonical_edge(int(u), int(v)) for u, v in pairs)
