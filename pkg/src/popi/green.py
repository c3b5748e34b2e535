"""Regularity and Green's relations, computed two ways.

The "oracle" path works from the ideal definitions over the finite element
set with an external identity adjoined.  The "characterized" path uses the
closed-form descriptions (regularity by domain containment; L/R/H/D by
image, domain and rank).  Tests assert the two partitions coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from . import errors
from .semigroup import ElementSet, RangeContext, contains


@dataclass(frozen=True)
class GreenPartition:
    relation: str  # one of "L", "R", "H", "D", "J"
    classes: tuple[tuple[int, ...], ...]
    method: str  # "oracle" or "characterized"

    def class_map(self) -> dict[int, int]:
        """Element index -> class position."""
        out = {}
        for c, members in enumerate(self.classes):
            for i in members:
                out[i] = c
        return out

    def same_partition(self, other: "GreenPartition") -> bool:
        return self.classes == other.classes


def _normalize(groups) -> tuple[tuple[int, ...], ...]:
    classes = [tuple(sorted(g)) for g in groups]
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


# -- regularity -------------------------------------------------------------


def is_regular_characterized(ctx: RangeContext, a) -> bool:
    """Closed form: regular exactly when the domain lies inside the range set."""
    if not contains(ctx, a):
        raise errors.NotAMember("%r is not in the semigroup" % (a,))
    return set(a.domain) <= ctx.point_set


def is_regular_oracle(S: ElementSet, a_index: int) -> bool:
    """Definition-level check: some b in S satisfies aba = a."""
    m = S.mult_table()
    row = m[a_index]
    return any(m[row[b]][a_index] == a_index for b in range(len(S)))


# -- characterized partitions ----------------------------------------------


def green_characterized(ctx: RangeContext, S: ElementSet, relation: str) -> GreenPartition:
    """Partition from the closed-form descriptions of L, R, H and D."""
    if relation not in ("L", "R", "H", "D"):
        raise errors.BadParameters("unknown relation %r" % relation)
    y = ctx.point_set
    groups: dict = {}
    for i, a in enumerate(S.elements):
        regular = set(a.domain) <= y
        if relation == "L":
            key = ("reg", a.image) if regular else ("one", i)
        elif relation == "R":
            key = a.domain
        elif relation == "H":
            key = ("reg", a.domain, a.image) if regular else ("one", i)
        else:  # D: regular classes by rank, non-regular by shared domain
            key = ("reg", a.rank) if regular else ("non", a.domain)
        groups.setdefault(key, []).append(i)
    return GreenPartition(relation, _normalize(groups.values()), "characterized")


# -- oracle partitions ------------------------------------------------------


def _left_ideals(S: ElementSet) -> list[frozenset[int]]:
    m = S.mult_table()
    size = len(S)
    return [frozenset([a] + [m[s][a] for s in range(size)]) for a in range(size)]


def _right_ideals(S: ElementSet) -> list[frozenset[int]]:
    m = S.mult_table()
    size = len(S)
    return [frozenset([a] + m[a]) for a in range(size)]


def _group_by_ideal(ideals) -> tuple[tuple[int, ...], ...]:
    groups: dict[frozenset[int], list[int]] = {}
    for i, ideal in enumerate(ideals):
        groups.setdefault(ideal, []).append(i)
    return _normalize(groups.values())


def _two_sided_ideal(S: ElementSet, a: int) -> set[int]:
    m = S.mult_table()
    size = len(S)
    left = set([a] + [m[s][a] for s in range(size)])
    out = set(left)
    for u in left:
        out.update(m[u])
    return out


def green_oracle(S: ElementSet, relation: str) -> GreenPartition:
    """Partition computed from principal-ideal comparisons.

    L and R compare one-sided ideals directly; H intersects them; D is the
    transitive closure of L union R; J merges D-classes whose representatives
    generate the same two-sided ideal (D refines J in any semigroup).
    """
    if relation not in ("L", "R", "H", "D", "J"):
        raise errors.BadParameters("unknown relation %r" % relation)
    if relation == "L":
        return GreenPartition("L", _group_by_ideal(_left_ideals(S)), "oracle")
    if relation == "R":
        return GreenPartition("R", _group_by_ideal(_right_ideals(S)), "oracle")
    if relation == "H":
        lmap = green_oracle(S, "L").class_map()
        rmap = green_oracle(S, "R").class_map()
        groups: dict = {}
        for i in range(len(S)):
            groups.setdefault((lmap[i], rmap[i]), []).append(i)
        return GreenPartition("H", _normalize(groups.values()), "oracle")

    # D via union-find over the L- and R-classes
    parent = list(range(len(S)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for part in (green_oracle(S, "L"), green_oracle(S, "R")):
        for members in part.classes:
            for i in members[1:]:
                union(members[0], i)
    groups = {}
    for i in range(len(S)):
        groups.setdefault(find(i), []).append(i)
    d_classes = _normalize(groups.values())
    if relation == "D":
        return GreenPartition("D", d_classes, "oracle")

    # J: merge D-classes with mutually containing two-sided ideals
    reps = [c[0] for c in d_classes]
    ideals = {rep: _two_sided_ideal(S, rep) for rep in reps}
    jparent = {rep: rep for rep in reps}

    def jfind(x):
        while jparent[x] != x:
            x = jparent[x]
        return x

    for a, b in product(reps, reps):
        if a < b and b in ideals[a] and a in ideals[b]:
            ra, rb = jfind(a), jfind(b)
            if ra != rb:
                jparent[rb] = ra
    merged: dict = {}
    for c in d_classes:
        merged.setdefault(jfind(c[0]), []).extend(c)
    return GreenPartition("J", _normalize(merged.values()), "oracle")


def d_from_composition(S: ElementSet) -> GreenPartition:
    """D computed as L∘R instead of the transitive closure; for cross-checks."""
    lmap = green_oracle(S, "L").class_map()
    rparts = green_oracle(S, "R")
    rmap = rparts.class_map()
    size = len(S)
    by_l: dict[int, list[int]] = {}
    for i in range(size):
        by_l.setdefault(lmap[i], []).append(i)
    groups: dict[int, set[int]] = {}
    assigned: dict[int, int] = {}
    for i in range(size):
        if i in assigned:
            continue
        # all j with some c: (i, c) in L and (c, j) in R
        cls: set[int] = set()
        for c in by_l[lmap[i]]:
            cls.update(rparts.classes[rmap[c]])
        gid = len(groups)
        groups[gid] = cls
        for j in cls:
            assigned[j] = gid
    return GreenPartition("D", _normalize(groups.values()), "oracle")


# -- H-class structure ------------------------------------------------------


class HClassProfile(NamedTuple):
    size: int
    is_group: bool
    is_cyclic_group: bool
    common_domain: frozenset[int]
    common_image: frozenset[int]


def h_class_profile(ctx: RangeContext, S: ElementSet, a_index: int) -> HClassProfile:
    """Size and group structure of the H-class of one element.

    Regular elements share their H-class with everything of equal domain
    and image; non-regular elements sit alone.
    """
    a = S[a_index]
    regular = set(a.domain) <= ctx.point_set
    if regular:
        cls = [
            i
            for i, b in enumerate(S.elements)
            if b.domain == a.domain and b.image == a.image
        ]
    else:
        cls = [a_index]
    m = S.mult_table()
    members = set(cls)
    closed = all(m[i][j] in members for i in cls for j in cls)
    identity = None
    if closed:
        for e in cls:
            if all(m[e][i] == i and m[i][e] == i for i in cls):
                identity = e
                break
    is_group = closed and identity is not None
    is_cyclic = False
    if is_group:
        for x in cls:
            powers = {x}
            p = x
            while True:
                p = m[p][x]
                if p in powers:
                    break
                powers.add(p)
            if powers == members:
                is_cyclic = True
                break
    return HClassProfile(
        len(cls), is_group, is_cyclic, frozenset(a.domain), a.image
    )
