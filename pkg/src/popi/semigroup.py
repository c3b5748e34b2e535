"""Enumeration and closure for orientation-preserving partial injections
with range restricted to a fixed subset of the chain.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import errors
from .transform import PartialInjection, empty_map


class RangeContext:
    """The ambient chain size n together with the restricted range Y."""

    __slots__ = ("n", "points", "_set")

    def __init__(self, n: int, points: Iterable[int]):
        if n < 1:
            raise errors.BadParameters("chain size must be positive")
        pts = sorted(set(points))
        if not pts:
            raise errors.BadParameters("range set must be nonempty")
        if pts[0] < 1 or pts[-1] > n:
            raise errors.PointOutOfRange("range set not contained in 1..%d" % n)
        self.n = n
        self.points = tuple(pts)
        self._set = frozenset(pts)

    @property
    def r(self) -> int:
        return len(self.points)

    @property
    def point_set(self) -> frozenset[int]:
        return self._set

    @property
    def is_full(self) -> bool:
        return self.r == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RangeContext):
            return NotImplemented
        return self.n == other.n and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.n, self.points))

    def __repr__(self) -> str:
        return "RangeContext(n=%d, Y={%s})" % (self.n, ", ".join(map(str, self.points)))


def sort_key(a: PartialInjection):
    """Deterministic element order: by rank, then domain, then image sequence."""
    return (a.rank, a.domain, a.image_seq)


class ElementSet:
    """A deduplicated, deterministically indexed collection of elements.

    When built by `closure`, carries the generator list and the table of
    generator-labeled right-multiplication edges.  Immutable after
    construction.
    """

    def __init__(
        self,
        elements: Sequence[PartialInjection],
        generators: tuple[PartialInjection, ...] | None = None,
        cayley: tuple[tuple[int, ...], ...] | None = None,
    ):
        self.elements = tuple(elements)
        self._index = {a: i for i, a in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise errors.BadParameters("duplicate elements")
        self.generators = generators
        self.cayley = cayley
        self._mult: list[list[int]] | None = None

    @classmethod
    def from_iterable(cls, elements: Iterable[PartialInjection]) -> "ElementSet":
        return cls(sorted(set(elements), key=sort_key))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PartialInjection]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> PartialInjection:
        return self.elements[i]

    def __contains__(self, a: PartialInjection) -> bool:
        return a in self._index

    def index_of(self, a: PartialInjection) -> int:
        return self._index[a]

    def mult_table(self) -> list[list[int]]:
        """Full multiplication table over element indices (cached).

        Requires closure under composition; raises KeyError otherwise.
        """
        if self._mult is None:
            idx = self._index
            elems = self.elements
            self._mult = [[idx[a * b] for b in elems] for a in elems]
        return self._mult

    def product_index(self, i: int, j: int) -> int:
        return self.mult_table()[i][j]


def cardinality_formula(n: int, r: int) -> int:
    """Closed-form element count: 1 + r * C(n+r-1, r), exact."""
    if not 1 <= r <= n:
        raise errors.BadParameters("need 1 <= r <= n, got r=%r, n=%r" % (r, n))
    return 1 + r * math.comb(n + r - 1, r)


def contains(ctx: RangeContext, a: PartialInjection) -> bool:
    """Membership test: orientation-preserving with image inside the range set."""
    if a.n != ctx.n:
        raise errors.MismatchedChainSize(
            "element lives on a chain of size %d, context has %d" % (a.n, ctx.n)
        )
    return a.image <= ctx.point_set and a.is_orientation_preserving()


def _rotations(points: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    k = len(points)
    for t in range(k):
        yield points[t:] + points[:t]


def enumerate_semigroup(ctx: RangeContext) -> ElementSet:
    """All orientation-preserving partial injections with image inside Y.

    Constructive enumeration: for each pair of equal-sized sets
    (A, B) with A in the chain and B in Y, the |B| cyclic rotations of the
    order isomorphism A -> B, plus the empty transformation.
    """
    n = ctx.n
    out = [empty_map(n)]
    universe = tuple(range(1, n + 1))
    for k in range(1, ctx.r + 1):
        for dom in combinations(universe, k):
            for img in combinations(ctx.points, k):
                for rotated in _rotations(img):
                    table = [0] * n
                    for x, y in zip(dom, rotated):
                        table[x - 1] = y
                    out.append(PartialInjection.from_table(n, table))
    return ElementSet(sorted(out, key=sort_key))


def closure(ctx: RangeContext, generators: Iterable[PartialInjection]) -> ElementSet:
    """The subsemigroup generated by the given elements.

    Breadth-first right-multiplication; no identity or zero is adjoined
    unless generated.  The result carries generator-labeled edges.
    """
    gens: list[PartialInjection] = []
    seen: set[PartialInjection] = set()
    for a in generators:
        if not contains(ctx, a):
            raise errors.GeneratorOutsideSemigroup("generator %r is not a member" % (a,))
        if a not in seen:
            seen.add(a)
            gens.append(a)
    if not gens:
        raise errors.BadParameters("need at least one generator")
    elems = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                p = a * g
                if p not in elems:
                    elems.add(p)
                    fresh.append(p)
        frontier = fresh
    ordered = sorted(elems, key=sort_key)
    index = {a: i for i, a in enumerate(ordered)}
    cayley = tuple(tuple(index[a * g] for g in gens) for a in ordered)
    return ElementSet(ordered, generators=tuple(gens), cayley=cayley)


def rank_layer(S: ElementSet, k: int) -> list[int]:
    """Indices of the elements whose image has exactly k points."""
    return [i for i, a in enumerate(S.elements) if a.rank == k]
