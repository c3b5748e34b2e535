import random

import pytest

import popi as P
from popi import errors

from conftest import all_partial_injections


def pi(n, *pairs):
    return P.make_partial_injection(n, pairs)


class TestConstruction:
    def test_empty(self):
        a = pi(3)
        assert a.rank == 0 and a.domain == () and a == P.empty_map(3)

    def test_basic_map(self):
        a = pi(3, (1, 2), (3, 1))
        assert a.domain == (1, 3)
        assert a.image_seq == (2, 1)
        assert a(1) == 2 and a(3) == 1 and a.get(2) is None

    def test_duplicate_value_rejected(self):
        with pytest.raises(errors.DuplicateValue):
            pi(3, (1, 2), (3, 2))

    def test_duplicate_key_rejected(self):
        with pytest.raises(errors.DuplicateKey):
            pi(3, (1, 2), (1, 3))

    def test_out_of_range_rejected(self):
        with pytest.raises(errors.PointOutOfRange):
            pi(3, (1, 4))
        with pytest.raises(errors.PointOutOfRange):
            pi(3, (0, 1))

    def test_equality_requires_same_chain(self):
        assert pi(3, (1, 1)) != pi(4, (1, 1))

    def test_json_round_trip(self):
        a = pi(3, (1, 2), (3, 1))
        assert P.PartialInjection.from_json_dict(a.to_json_dict()) == a
        assert a.to_json_dict() == {"n": 3, "pairs": [[1, 2], [3, 1]]}


class TestCompose:
    def test_hand_composition(self):
        a = pi(3, (1, 1), (3, 2))
        b = pi(3, (2, 1))
        assert a * b == pi(3, (3, 1))

    def test_zero_absorbs(self):
        a = pi(3, (1, 2), (3, 1))
        assert a * P.empty_map(3) == P.empty_map(3)
        assert P.empty_map(3) * a == P.empty_map(3)

    def test_identity_law(self):
        a = pi(3, (1, 2), (3, 1))
        full = P.identity_on(3, [1, 2, 3])
        assert full * a == a and a * full == a

    def test_mismatched_chain(self):
        with pytest.raises(errors.MismatchedChainSize):
            pi(3, (1, 1)) * pi(4, (1, 1))

    def test_left_to_right_action(self):
        a = pi(3, (1, 2))
        b = pi(3, (2, 3))
        assert (a * b)(1) == 3


class TestInverse:
    def test_swap_pairs(self):
        assert pi(3, (1, 2), (3, 1)).inverse() == pi(3, (2, 1), (1, 3))

    def test_empty(self):
        assert P.empty_map(3).inverse() == P.empty_map(3)

    def test_involution_and_round_trip(self):
        rng = random.Random(7)
        for a in _random_maps(rng, 60, 6):
            assert a.inverse().inverse() == a
            assert a * a.inverse() == P.identity_on(a.n, a.domain)
            assert a * a.inverse() * a == a


class TestIdentityOn:
    def test_basic(self):
        e = P.identity_on(3, {1, 2})
        assert e == pi(3, (1, 1), (2, 2)) and e.is_idempotent()

    def test_empty_set(self):
        assert P.identity_on(3, set()) == P.empty_map(3)

    def test_intersection(self):
        assert P.identity_on(3, {1, 2}) * P.identity_on(3, {2, 3}) == P.identity_on(3, {2})

    def test_out_of_range(self):
        with pytest.raises(errors.PointOutOfRange):
            P.identity_on(3, {4})


class TestCyclicPredicate:
    def test_one_descent(self):
        assert P.is_cyclic((2, 3, 1))

    def test_two_descents(self):
        assert not P.is_cyclic((2, 1, 3))

    def test_degenerate(self):
        assert P.is_cyclic(())
        assert P.is_cyclic((4,))
        assert P.is_cyclic((5, 5, 5))


class TestOrientation:
    def test_rotation_is_orientation_preserving(self):
        assert pi(3, (1, 2), (2, 3), (3, 1)).is_orientation_preserving()

    def test_swap_with_fixed_point_is_not(self):
        assert not pi(3, (1, 2), (2, 1), (3, 3)).is_orientation_preserving()

    def test_rank_at_most_two_always(self):
        for a in all_partial_injections(4, max_rank=2):
            assert a.is_orientation_preserving()

    def test_order_preserving(self):
        assert pi(3, (1, 1), (3, 2)).is_order_preserving()
        assert not pi(3, (1, 2), (3, 1)).is_order_preserving()
        assert P.empty_map(3).is_order_preserving()


class TestFixedPoints:
    def test_identity(self):
        assert P.identity_on(3, {1, 2}).fixed_points() == {1, 2}

    def test_no_fixed(self):
        assert pi(3, (1, 2), (3, 1)).fixed_points() == frozenset()

    def test_partial(self):
        assert pi(3, (1, 1), (2, 3)).fixed_points() == {1}


def _random_maps(rng, count, n):
    out = []
    for _ in range(count):
        k = rng.randrange(0, n + 1)
        dom = rng.sample(range(1, n + 1), k)
        img = rng.sample(range(1, n + 1), k)
        out.append(P.make_partial_injection(n, zip(dom, img)))
    return out


class TestAlgebraProperties:
    def test_associativity(self):
        rng = random.Random(11)
        maps = _random_maps(rng, 40, 5)
        for _ in range(300):
            a, b, c = rng.choice(maps), rng.choice(maps), rng.choice(maps)
            assert (a * b) * c == a * (b * c)

    def test_orientation_closed_under_composition(self):
        rng = random.Random(13)
        pool = [a for a in _random_maps(rng, 400, 6) if a.is_orientation_preserving()]
        for _ in range(500):
            a, b = rng.choice(pool), rng.choice(pool)
            assert (a * b).is_orientation_preserving()

    def test_rank_submultiplicative(self):
        rng = random.Random(17)
        maps = _random_maps(rng, 60, 6)
        for _ in range(300):
            a, b = rng.choice(maps), rng.choice(maps)
            assert (a * b).rank <= min(a.rank, b.rank)

    def test_order_preserving_implies_orientation_preserving(self):
        for a in all_partial_injections(5):
            if a.is_order_preserving():
                assert a.is_orientation_preserving()


class TestChainPermutations:
    def test_rotation(self):
        assert P.rotation_perm(3) == pi(3, (1, 2), (2, 3), (3, 1))
        assert P.rotation_perm(1) == P.identity_on(1, {1})
        assert P.rotation_perm(5).power(5) == P.identity_on(5, range(1, 6))

    def test_reflection(self):
        assert P.reflection_perm(3) == pi(3, (1, 3), (2, 2), (3, 1))
        assert P.reflection_perm(4).power(2) == P.identity_on(4, range(1, 5))

    def test_order_isomorphism(self):
        assert P.order_isomorphism(5, [2, 4], [1, 3]) == pi(5, (2, 1), (4, 3))
