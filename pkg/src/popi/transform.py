"""Injective partial transformations of the chain {1, ..., n}.

A partial injection is stored as a fixed-length table: slot x-1 holds the
image of x, or 0 when x is undefined.  Points are 1-based throughout the
package, including the CLI and the JSON wire format.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import errors


def is_cyclic(items: Sequence[int]) -> bool:
    """True if the sequence has at most one descent when read circularly.

    Empty, one-element and constant sequences count as cyclic.
    """
    t = len(items)
    if t <= 1:
        return True
    descents = sum(1 for i in range(t) if items[i] > items[(i + 1) % t])
    return descents <= 1


class PartialInjection:
    """An injective partial self-map of the chain {1, ..., n}.

    Immutable value type: freely shareable, hashable, compared by chain
    size and graph.  Composition acts left to right: x(a*b) == (xa)b.
    """

    __slots__ = ("n", "table", "_dom", "_hash")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise errors.BadParameters("chain size must be positive, got %r" % n)
        table = [0] * n
        values = set()
        for x, y in pairs:
            if not (1 <= x <= n and 1 <= y <= n):
                raise errors.PointOutOfRange("pair (%r, %r) outside 1..%d" % (x, y, n))
            if table[x - 1]:
                raise errors.DuplicateKey("point %d mapped twice" % x)
            if y in values:
                raise errors.DuplicateValue("value %d used twice" % y)
            table[x - 1] = y
            values.add(y)
        self._finish(n, tuple(table))

    def _finish(self, n: int, table: tuple[int, ...]) -> None:
        self.n = n
        self.table = table
        self._dom = tuple(x for x in range(1, n + 1) if table[x - 1])
        self._hash = hash((n, table))

    @classmethod
    def from_table(cls, n: int, table: Sequence[int]) -> "PartialInjection":
        """Fast constructor trusting an already-valid slot table."""
        obj = cls.__new__(cls)
        obj._finish(n, tuple(table))
        return obj

    # -- basic accessors ----------------------------------------------------

    @property
    def domain(self) -> tuple[int, ...]:
        return self._dom

    @property
    def image_seq(self) -> tuple[int, ...]:
        """Images listed in ascending domain order."""
        t = self.table
        return tuple(t[x - 1] for x in self._dom)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.image_seq)

    @property
    def rank(self) -> int:
        return len(self._dom)

    def __call__(self, x: int) -> int:
        v = self.table[x - 1]
        if not v:
            raise KeyError("point %d not in domain" % x)
        return v

    def get(self, x: int) -> int | None:
        v = self.table[x - 1]
        return v or None

    def fixed_points(self) -> frozenset[int]:
        return frozenset(x for x in self._dom if self.table[x - 1] == x)

    def is_empty(self) -> bool:
        return not self._dom

    # -- algebra ------------------------------------------------------------

    def compose(self, other: "PartialInjection") -> "PartialInjection":
        """self followed by other."""
        if self.n != other.n:
            raise errors.MismatchedChainSize(
                "cannot compose maps on chains of size %d and %d" % (self.n, other.n)
            )
        t = other.table
        return PartialInjection.from_table(
            self.n, tuple(t[v - 1] if v else 0 for v in self.table)
        )

    __mul__ = compose

    def inverse(self) -> "PartialInjection":
        table = [0] * self.n
        for x in self._dom:
            table[self.table[x - 1] - 1] = x
        return PartialInjection.from_table(self.n, table)

    def power(self, k: int) -> "PartialInjection":
        """k-fold composition with itself; k=0 gives the identity on the chain."""
        if k < 0:
            raise errors.BadParameters("negative powers are not defined")
        result = identity_on(self.n, range(1, self.n + 1))
        for _ in range(k):
            result = result * self
        return result

    # -- predicates ---------------------------------------------------------

    def is_order_preserving(self) -> bool:
        seq = self.image_seq
        return all(seq[i] < seq[i + 1] for i in range(len(seq) - 1))

    def is_orientation_preserving(self) -> bool:
        return is_cyclic(self.image_seq)

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_permutation(self) -> bool:
        return self.rank == self.n

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialInjection):
            return NotImplemented
        return self.n == other.n and self.table == other.table

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("%d->%d" % (x, self.table[x - 1]) for x in self._dom)
        return "PartialInjection(n=%d, {%s})" % (self.n, body)

    # -- wire format --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "pairs": [[x, self.table[x - 1]] for x in self._dom]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "PartialInjection":
        return cls(data["n"], [(int(x), int(y)) for x, y in data["pairs"]])


def make_partial_injection(n: int, pairs: Iterable[tuple[int, int]]) -> PartialInjection:
    """Build a partial injection, validating range and injectivity."""
    return PartialInjection(n, pairs)


def empty_map(n: int) -> PartialInjection:
    """The zero transformation: nowhere defined."""
    return PartialInjection.from_table(n, (0,) * n)


def identity_on(n: int, points: Iterable[int]) -> PartialInjection:
    """The partial identity fixing the given points and undefined elsewhere."""
    table = [0] * n
    for x in points:
        if not (1 <= x <= n):
            raise errors.PointOutOfRange("point %r outside 1..%d" % (x, n))
        table[x - 1] = x
    return PartialInjection.from_table(n, table)


def order_isomorphism(n: int, source: Iterable[int], target: Iterable[int]) -> PartialInjection:
    """The unique order-preserving bijection between two equal-sized point sets."""
    src = sorted(source)
    dst = sorted(target)
    if len(src) != len(dst):
        raise errors.BadParameters("point sets differ in size")
    return PartialInjection(n, zip(src, dst))


def rotation_perm(n: int) -> PartialInjection:
    """The full cycle i -> i+1 (mod n) on the chain."""
    return PartialInjection.from_table(n, tuple(i % n + 1 for i in range(1, n + 1)))


def reflection_perm(n: int) -> PartialInjection:
    """The order-reversing permutation i -> n+1-i."""
    return PartialInjection.from_table(n, tuple(range(n, 0, -1)))
