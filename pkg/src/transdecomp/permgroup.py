"""Permutations, generated groups, orbits and induced actions.

A permutation of degree ``n`` is stored as its image array: ``p.images[i]``
is the image of point ``i``.  Products are written left to right, so
``compose(p, q)`` (or ``p * q``) applies ``p`` first and then ``q``.

Every action used elsewhere in the package (on pairs, blocks, edge sets) is
reduced to point images through :func:`apply`.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import InputError, InvarianceError, ResourceError

DEFAULT_CAP = 10_000


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation of 0..{len(images) - 1}: {list(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        """Build a permutation of degree ``n`` from disjoint cycles, e.g. ``(0, 1, 2)``."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                if not 0 <= a < n:
                    raise InputError(f"cycle point {a} out of range for degree {n}")
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``."""
    if p.degree != q.degree:
        raise InputError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Permutation(tuple(qi[x] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Permutation(tuple(inv))


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """p^-1 q^-1 p q in left-to-right order."""
    return inverse(p) * inverse(q) * p * q


class Action(str, enum.Enum):
    """What a permutation of points is acting on."""

    POINTS = "points"
    PAIRS = "unordered-pairs"
    BLOCKS = "blocks"
    EDGE_PARTS = "edge-parts"


def _check_point(x, n: int) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
        raise InputError(f"invalid point {x!r} for degree {n}")
    return x


def normalize(x, action: Action, n: int) -> Hashable:
    """Validate a domain element and return its canonical hashable form."""
    action = Action(action)
    if action is Action.POINTS:
        return _check_point(x, n)
    if action is Action.PAIRS:
        s = frozenset(_check_point(v, n) for v in x)
        if len(s) != 2:
            raise InputError(f"not an unordered pair of distinct points: {x!r}")
        return s
    if action is Action.BLOCKS:
        s = frozenset(_check_point(v, n) for v in x)
        if not s:
            raise InputError("empty block")
        return s
    edges = set()
    for e in x:
        u, v = (_check_point(w, n) for w in e)
        if u == v:
            raise InputError(f"loop {e!r} is not an edge")
        edges.add((min(u, v), max(u, v)))
    return frozenset(edges)


def apply(p: Permutation, x, action: Action = Action.POINTS):
    """Image of an already-normalized domain element under ``p``."""
    im = p.images
    if action == Action.POINTS:
        return im[x]
    if action in (Action.PAIRS, Action.BLOCKS):
        return frozenset(im[v] for v in x)
    out = []
    for u, v in x:
        a, b = im[u], im[v]
        out.append((a, b) if a < b else (b, a))
    return frozenset(out)


def action_on(p: Permutation, domain: Sequence, action: Action) -> Permutation:
    """The permutation of indices into ``domain`` induced by ``p``.

    Raises :class:`InvarianceError` if some element's image is not in ``domain``.
    """
    action = Action(action)
    index = {x: i for i, x in enumerate(domain)}
    images = []
    for x in domain:
        y = apply(p, x, action)
        if y not in index:
            raise InvarianceError(
                f"{p} maps {_fmt(x)} outside the domain", generator=p, block=x)
        images.append(index[y])
    return Permutation(tuple(images))


def _fmt(x) -> str:
    if isinstance(x, frozenset):
        return "{" + ", ".join(str(v) for v in sorted(x)) + "}"
    return str(x)


class PermGroup:
    """A permutation group given by generators; elements are enumerated lazily.

    ``elements``, once computed, is sorted lexicographically by image array.
    """

    def __init__(self, generators: Iterable[Permutation],
                 elements: Sequence[Permutation] | None = None,
                 degree: int | None = None):
        gens = tuple(generators)
        if not gens:
            if degree is None:
                raise InputError("a group needs at least one generator or an explicit degree")
            gens = (Permutation.identity(degree),)
        degrees = {g.degree for g in gens}
        if len(degrees) != 1:
            raise InputError(f"generators have different degrees: {sorted(degrees)}")
        self.degree = gens[0].degree
        if degree is not None and degree != self.degree:
            raise InputError(f"generator degree {self.degree} != declared degree {degree}")
        self.generators = gens
        self._elements = tuple(sorted(elements)) if elements is not None else None
        self._element_set = None

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"

    @property
    def has_elements(self) -> bool:
        return self._elements is not None

    def enumerate(self, cap: int = DEFAULT_CAP) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._elements = _closure(self.generators, cap)
        return self._elements

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self.enumerate()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        if self._element_set is None:
            self._element_set = frozenset(self.elements)
        return p in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order


def _closure(generators: Sequence[Permutation], cap: int) -> tuple[Permutation, ...]:
    n = generators[0].degree
    ident = Permutation.identity(n)
    gens = sorted(set(generators))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise ResourceError(f"group closure exceeded cap of {cap} elements")
                queue.append(y)
    return tuple(sorted(seen))


def generate(generators: Sequence[Permutation], cap: int = DEFAULT_CAP) -> PermGroup:
    """Breadth-first closure of ``generators`` under composition."""
    gens = tuple(generators)
    if not gens:
        raise InputError("generate needs at least one generator")
    group = PermGroup(gens)
    group.enumerate(cap)
    return group


def orbit(group: PermGroup, point, action: Action = Action.POINTS) -> frozenset:
    """Orbit of ``point`` computed from the generators alone."""
    action = Action(action)
    start = normalize(point, action, group.degree)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = apply(g, x, action)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def is_transitive(group: PermGroup, domain: Iterable, action: Action = Action.POINTS) -> bool:
    action = Action(action)
    dom = {normalize(x, action, group.degree) for x in domain}
    if not dom:
        raise InputError("transitivity needs a nonempty domain")
    return orbit(group, next(iter(dom)), action) == dom


def induced_action_on_blocks(group: PermGroup, blocks,
                             cap: int = DEFAULT_CAP) -> tuple[PermGroup, bool]:
    """The group induced on block indices, and whether the kernel is trivial.

    ``blocks`` is a :class:`~transdecomp.graph.BlockSystem` or any sequence of
    point collections.  Every generator must map blocks onto blocks.
    """
    cells = [frozenset(b) for b in getattr(blocks, "blocks", blocks)]
    induced = []
    for g in group.generators:
        try:
            induced.append(action_on(g, cells, Action.BLOCKS))
        except InvarianceError as exc:
            raise InvarianceError(
                f"generator {g} maps block {_fmt(exc.block)} to "
                f"{_fmt(apply(g, exc.block, Action.BLOCKS))}, which is not a block",
                generator=g, block=exc.block) from None
    nontrivial = sorted({p for p in induced if not p.is_identity()})
    quotient_group = PermGroup(nontrivial, degree=len(cells))
    kernel_trivial = len(quotient_group.enumerate(cap)) == len(group.enumerate(cap))
    return quotient_group, kernel_trivial


def small_generating_set(elements: Iterable[Permutation],
                         cap: int = DEFAULT_CAP) -> list[Permutation]:
    """Greedy generators: scan ``elements`` in lexicographic order and keep each
    one not already in the group generated by those kept before it."""
    elements = sorted(elements)
    if not elements:
        return []
    gens: list[Permutation] = []
    span = {Permutation.identity(elements[0].degree)}
    for p in elements:
        if p not in span:
            gens.append(p)
            span = set(_closure(gens, cap))
    return gens


def derived_subgroup(group: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """Subgroup generated by all commutators, fully enumerated."""
    elems = group.enumerate(cap)
    comms = {commutator(p, q) for p in elems for q in elems}
    elements = _closure(sorted(comms), cap)
    return PermGroup(small_generating_set(elements, cap), elements=elements,
                     degree=group.degree)


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup([], degree=max(n, 0))
    gens = [Permutation.from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(Permutation.from_cycles(n, tuple(range(n))))
    return PermGroup(gens)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], degree=max(n, 0))
    gens = [Permutation.from_cycles(n, (0, 1, 2))]
    if n > 3:
        long = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens.append(Permutation.from_cycles(n, long))
    return PermGroup(gens)


def cyclic_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup([], degree=max(n, 0))
    return PermGroup([Permutation.from_cycles(n, tuple(range(n)))])
