"""Shared helpers: cached enumerations and independent brute-force builders."""

from functools import lru_cache
from itertools import combinations, permutations

import popi as P


@lru_cache(maxsize=None)
def semigroup(n: int, pts: tuple[int, ...]):
    """Context plus enumerated element set, cached across tests."""
    ctx = P.RangeContext(n, pts)
    return ctx, P.enumerate_semigroup(ctx)


def all_range_sets(n: int, max_size: int | None = None):
    top = max_size if max_size is not None else n
    for size in range(1, min(top, n) + 1):
        for pts in combinations(range(1, n + 1), size):
            yield pts


def proper_range_sets(n: int):
    for size in range(1, n):
        for pts in combinations(range(1, n + 1), size):
            yield pts


def all_partial_injections(n: int, max_rank: int | None = None):
    """Every injective partial self-map of the chain, by direct enumeration."""
    top = max_rank if max_rank is not None else n
    universe = range(1, n + 1)
    for k in range(0, min(top, n) + 1):
        for dom in combinations(universe, k):
            for img in combinations(universe, k):
                for arranged in permutations(img):
                    yield P.make_partial_injection(n, zip(dom, arranged))
