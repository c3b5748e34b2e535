"""Generating sets, rank certificates, and the step-down factorizations.

Every factorization routine returns a `Decomposition` whose product is
asserted to reproduce the input bit-exactly; a failed assertion raises
`DecompositionFailed` rather than returning a wrong witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from . import errors
from .semigroup import (
    ElementSet,
    RangeContext,
    closure,
    contains,
    enumerate_semigroup,
    rank_layer,
)
from .transform import (
    PartialInjection,
    order_isomorphism,
    rotation_perm,
)


@dataclass(frozen=True)
class Decomposition:
    """A two-factor product with optional case bookkeeping.

    `shift_exponent` records the power of the chain rotation split off
    before factoring; `case` labels which construction produced the pair.
    """

    beta: PartialInjection
    gamma: PartialInjection
    shift_exponent: int = 0
    case: str | None = None

    def product(self) -> PartialInjection:
        return self.beta * self.gamma


@dataclass(frozen=True)
class RankCertificate:
    ctx: RangeContext
    claimed_rank: int
    generating_set: tuple[PartialInjection, ...]
    lower_bound_witness: tuple[tuple[int, ...], ...] = field(default=())


# -- range-set rotation -----------------------------------------------------


def range_rotation(ctx: RangeContext) -> PartialInjection:
    """The cycle on the range set sending each point to the next one, wrapping."""
    pts = ctx.points
    r = len(pts)
    return PartialInjection(ctx.n, [(pts[m], pts[(m + 1) % r]) for m in range(r)])


def range_rotation_power(ctx: RangeContext, t: int) -> PartialInjection:
    pts = ctx.points
    r = len(pts)
    return PartialInjection(ctx.n, [(pts[m], pts[(m + t) % r]) for m in range(r)])


# -- shift decomposition ----------------------------------------------------


def shift_decompose(a: PartialInjection) -> tuple[int, PartialInjection]:
    """Split off a power of the chain rotation leaving an order-preserving part.

    Returns the smallest l with a == rotation^l * a1 and a1 order-preserving;
    a1 keeps the image of a.
    """
    if not a.is_orientation_preserving():
        raise errors.NotOrientationPreserving("%r" % (a,))
    n = a.n
    g = rotation_perm(n)
    for l in range(n):
        a1 = g.power((n - l) % n) * a
        if a1.is_order_preserving():
            return l, a1
    raise errors.DecompositionFailed("no rotation shift found for %r" % (a,))


# -- the three factorization levels ----------------------------------------


def decompose_low_rank(ctx: RangeContext, a: PartialInjection) -> Decomposition:
    """Factor an element of rank at most r-2 into two factors of one higher rank.

    Bounded search: extend the domain by one point, try every
    one-higher-rank first factor over the extended domain, and complete the
    second factor by a single extra pair, keeping orientation preservation.
    """
    if not contains(ctx, a):
        raise errors.NotAMember("%r" % (a,))
    m = a.rank
    r = ctx.r
    if m > r - 2:
        raise errors.RankTooHigh("rank %d exceeds %d" % (m, r - 2))
    n = ctx.n
    dom = set(a.domain)
    img = a.image
    chain = set(range(1, n + 1))
    for c in sorted(chain - dom):
        ext = tuple(sorted(dom | {c}))
        for b_img in combinations(ctx.points, m + 1):
            for t in range(m + 1):
                rotated = b_img[t:] + b_img[:t]
                beta = PartialInjection(n, zip(ext, rotated))
                gamma0 = beta.inverse() * a
                for d in sorted(chain - set(b_img)):
                    for y in sorted(ctx.point_set - img):
                        table = list(gamma0.table)
                        table[d - 1] = y
                        gamma = PartialInjection.from_table(n, table)
                        if not gamma.is_orientation_preserving():
                            continue
                        if beta * gamma == a:
                            return Decomposition(beta, gamma, case="low")
    raise errors.DecompositionFailed("no one-higher-rank factorization for %r" % (a,))


def decompose_corank_one(ctx: RangeContext, a: PartialInjection) -> Decomposition:
    """Factor a rank-(r-1) element as (top-rank) * (restricted corank-one).

    The first factor is a rotation shift composed with the order
    isomorphism from the extended domain onto the range set; the second is
    order-preserving with domain inside the range set.
    """
    if not contains(ctx, a):
        raise errors.NotAMember("%r" % (a,))
    r = ctx.r
    if a.rank != r - 1:
        raise errors.BadRank("expected rank %d, got %d" % (r - 1, a.rank))
    n = ctx.n
    l, a1 = shift_decompose(a)
    dom1 = set(a1.domain)
    c = min(set(range(1, n + 1)) - dom1)
    beta = order_isomorphism(n, sorted(dom1 | {c}), ctx.points)
    gamma = beta.inverse() * a1
    beta_full = rotation_perm(n).power(l) * beta
    if not (
        beta_full.rank == r
        and contains(ctx, beta_full)
        and is_restricted_corank_one(ctx, gamma)
        and beta_full * gamma == a
    ):
        raise errors.DecompositionFailed("corank-one factorization failed for %r" % (a,))
    return Decomposition(beta_full, gamma, shift_exponent=l, case="corank_one")


def is_restricted_corank_one(ctx: RangeContext, a: PartialInjection) -> bool:
    """Order-preserving, rank r-1, with domain inside the range set."""
    return (
        a.n == ctx.n
        and a.rank == ctx.r - 1
        and set(a.domain) <= ctx.point_set
        and a.is_order_preserving()
    )


def _missing_index(ctx: RangeContext, points: Iterable[int]) -> int:
    """1-based position of the unique range-set point absent from `points`."""
    missing = ctx.point_set - set(points)
    if len(missing) != 1:
        raise errors.BadRank("expected exactly one missing range point")
    return ctx.points.index(next(iter(missing))) + 1


def decompose_restricted_corank_one(ctx: RangeContext, a: PartialInjection) -> Decomposition:
    """Factor a restricted corank-one element into two top-rank factors.

    The first factor is a rotation of the range set; the second is forced
    by the product identity except for one extra pair anchored at an
    insertion point taken, in order of preference, below the range set,
    above it, or inside its first interior gap.  The chosen case is
    recorded for coverage accounting.
    """
    if ctx.is_full:
        raise errors.FullRangeNotSupported("full-range sets admit no insertion point")
    if not is_restricted_corank_one(ctx, a):
        raise errors.NotRestricted("%r" % (a,))
    n, r, pts = ctx.n, ctx.r, ctx.points
    i = _missing_index(ctx, a.domain)
    j = _missing_index(ctx, a.image_seq)
    ge = i >= j
    if pts[0] > 1:
        p = 1
        s = (1 - j) % r if ge else (-j) % r
        case = "low.%s" % ("ge" if ge else "lt")
    elif pts[-1] < n:
        p = n
        s = (1 - j) % r if ge else (-j) % r
        case = "high.%s" % ("ge" if ge else "lt")
    else:
        k = next(k for k in range(1, r) if pts[k - 1] < pts[k] - 1)
        p = pts[k - 1] + 1
        if ge:
            s = (k + 1 - j) % r
            case = "gap.ge.%s" % ("wide" if k >= j - 1 else "narrow")
        else:
            s = (k - j) % r
            case = "gap.lt.%s" % (
                "wide" if k >= j else ("mid" if k >= j + 1 - i else "narrow")
            )
    beta = range_rotation_power(ctx, s)
    table = [0] * n
    for x in a.domain:
        table[beta(x) - 1] = a(x)
    table[p - 1] = pts[j - 1]
    gamma = PartialInjection.from_table(n, table)
    if not (
        gamma.rank == r
        and contains(ctx, gamma)
        and beta * gamma == a
    ):
        raise errors.DecompositionFailed(
            "restricted corank-one factorization failed for %r (case %s)" % (a, case)
        )
    return Decomposition(beta, gamma, case=case)


# -- top-layer structure ----------------------------------------------------


def rotation_exponent_between(
    ctx: RangeContext, a: PartialInjection, b: PartialInjection
) -> int:
    """The unique t with a == b * (range rotation)^t for two top-rank
    elements sharing a domain."""
    if a.rank != ctx.r or b.rank != ctx.r:
        raise errors.BadRank("both elements must have full range rank")
    if not (contains(ctx, a) and contains(ctx, b)):
        raise errors.NotAMember("arguments must belong to the semigroup")
    if a.domain != b.domain:
        raise errors.DomainMismatch("domains differ")
    first = a.domain[0]
    pa = ctx.points.index(a(first))
    pb = ctx.points.index(b(first))
    t = (pa - pb) % ctx.r
    if b * range_rotation_power(ctx, t) != a:
        raise errors.DecompositionFailed("rotation exponent check failed")
    return t


def canonical_generating_set(ctx: RangeContext) -> list[PartialInjection]:
    """One top-rank representative per domain: the order isomorphism onto
    the range set, except that the representative with domain equal to the
    range set is the range rotation."""
    if ctx.is_full:
        raise errors.FullRangeNotSupported(
            "full-range rank is certified by pair search, not by representatives"
        )
    gens = []
    for dom in combinations(range(1, ctx.n + 1), ctx.r):
        if dom == ctx.points:
            gens.append(range_rotation(ctx))
        else:
            gens.append(order_isomorphism(ctx.n, dom, ctx.points))
    return gens


def deletion_test(ctx: RangeContext, generators: list[PartialInjection]) -> list[bool]:
    """For each generator: does removing it strictly shrink the closure?"""
    full = len(closure(ctx, generators))
    out = []
    for i in range(len(generators)):
        rest = generators[:i] + generators[i + 1 :]
        out.append(len(closure(ctx, rest)) < full if rest else True)
    return out


def semigroup_rank(ctx: RangeContext) -> RankCertificate:
    """Rank with a constructive certificate.

    Proper range set: the canonical representatives, one per top-rank
    R-class, verified to generate everything.  Full range set: a
    two-element generating pair found by search, with an exhaustive check
    that no single element suffices.
    """
    S = enumerate_semigroup(ctx)
    if not ctx.is_full:
        gens = canonical_generating_set(ctx)
        if len(closure(ctx, gens)) != len(S):
            raise errors.DecompositionFailed("canonical set failed to generate")
        witness = tuple(combinations(range(1, ctx.n + 1), ctx.r))
        return RankCertificate(ctx, math.comb(ctx.n, ctx.r), tuple(gens), witness)

    g = rotation_perm(ctx.n)
    pair = None
    for idx in rank_layer(S, ctx.n - 1):
        cand = S[idx]
        if len(closure(ctx, [g, cand])) == len(S):
            pair = (g, cand)
            break
    if pair is None:
        for i, j in combinations(range(len(S)), 2):
            if len(closure(ctx, [S[i], S[j]])) == len(S):
                pair = (S[i], S[j])
                break
    if pair is None:
        raise errors.DecompositionFailed("no generating pair found")
    for a in S:
        if len(closure(ctx, [a])) == len(S):
            raise errors.DecompositionFailed("a single element generates; rank claim wrong")
    return RankCertificate(ctx, 2, pair, ())


# -- full pipeline ----------------------------------------------------------


def top_rank_factorization(
    ctx: RangeContext, a: PartialInjection, steps: list | None = None
) -> list[PartialInjection]:
    """Express any element (proper range set) as a product of top-rank
    elements by iterating the three factorization levels.

    When `steps` is given, one record per factorization is appended with
    the operation name, case label and both factors.
    """
    if ctx.is_full:
        raise errors.FullRangeNotSupported("pipeline is defined for proper range sets")
    if not contains(ctx, a):
        raise errors.NotAMember("%r" % (a,))
    factors = _factor(ctx, a, steps)
    prod = factors[0]
    for f in factors[1:]:
        prod = prod * f
    if prod != a or any(f.rank != ctx.r for f in factors):
        raise errors.DecompositionFailed("pipeline product check failed for %r" % (a,))
    return factors


def _record(steps, op, a, d: Decomposition):
    if steps is not None:
        steps.append(
            {
                "op": op,
                "case": d.case,
                "shift": d.shift_exponent,
                "input": a,
                "beta": d.beta,
                "gamma": d.gamma,
            }
        )


def _factor(ctx, a, steps) -> list[PartialInjection]:
    r = ctx.r
    if a.rank == r:
        return [a]
    if a.rank <= r - 2:
        d = decompose_low_rank(ctx, a)
        _record(steps, "raise_rank", a, d)
        return _factor(ctx, d.beta, steps) + _factor(ctx, d.gamma, steps)
    if is_restricted_corank_one(ctx, a):
        d = decompose_restricted_corank_one(ctx, a)
        _record(steps, "restricted_split", a, d)
        return [d.beta, d.gamma]
    d = decompose_corank_one(ctx, a)
    _record(steps, "corank_one_split", a, d)
    dv = decompose_restricted_corank_one(ctx, d.gamma)
    _record(steps, "restricted_split", d.gamma, dv)
    return [d.beta, dv.beta, dv.gamma]
