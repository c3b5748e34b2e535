import pytest

import popi as P
from popi import errors

from conftest import semigroup


def pi(n, *pairs):
    return P.make_partial_injection(n, pairs)


class TestDihedralElements:
    def test_n3_is_full_symmetric_group(self):
        elems = set(P.dihedral_elements(3))
        assert len(elems) == 6
        assert all(a.is_permutation() for a in elems)

    def test_n4_excludes_transposition(self):
        elems = set(P.dihedral_elements(4))
        assert len(elems) == 8
        swap = pi(4, (1, 2), (2, 1), (3, 3), (4, 4))
        assert swap not in elems

    def test_defining_relation(self):
        for n in (3, 4, 5, 6):
            g = P.rotation_perm(n)
            h = P.reflection_perm(n)
            assert g * h == h * g.power(n - 1)

    def test_small_chain_rejected(self):
        with pytest.raises(errors.ChainTooSmall):
            P.dihedral_elements(2)


class TestDihedralRestriction:
    def test_members(self):
        for n in (3, 4, 5):
            for a in P.dihedral_elements(n):
                assert P.is_dihedral_restriction(a)

    def test_restriction_of_member(self):
        g = P.rotation_perm(5)
        e = P.identity_on(5, {1, 3})
        assert P.is_dihedral_restriction(e * g.power(2))

    def test_counterexample(self):
        assert not P.is_dihedral_restriction(pi(4, (1, 1), (2, 3)))

    def test_small_rank_always_passes(self):
        assert P.is_dihedral_restriction(pi(5, (2, 4)))
        assert P.is_dihedral_restriction(P.empty_map(5))


class TestDecide:
    def test_positive_dihedral(self):
        w = P.decide_isomorphic(4, (1, 2, 3), (1, 2, 4))
        assert w.verdict and w.reason == "dihedral"
        assert frozenset(w.delta(p) for p in (1, 2, 3)) == frozenset({1, 2, 4})

    def test_small_rank_always_isomorphic(self):
        w = P.decide_isomorphic(4, (1, 2), (1, 3))
        assert w.verdict and w.reason == "small-rank"

    def test_negative_size_mismatch(self):
        assert not P.decide_isomorphic(4, (1, 2), (1, 2, 3)).verdict

    def test_negative_same_size(self):
        w = P.decide_isomorphic(5, (1, 2, 3), (1, 2, 4))
        assert not w.verdict and w.reason == "none"

    def test_reflexive(self):
        w = P.decide_isomorphic(5, (2, 4, 5), (2, 4, 5))
        assert w.verdict


class TestConjugation:
    def test_dihedral_conjugator(self):
        w = P.decide_isomorphic(4, (1, 2, 3), (1, 2, 4))
        phi = P.conjugation_isomorphism(4, (1, 2, 3), (1, 2, 4), w.delta)
        assert len(phi) == P.cardinality_formula(4, 3)
        assert phi[P.empty_map(4)] == P.empty_map(4)

    def test_small_rank_any_permutation(self):
        sigma = pi(5, (1, 2), (2, 1), (3, 3), (4, 5), (5, 4))
        phi = P.conjugation_isomorphism(5, (1, 3), (2, 3), sigma)
        assert len(phi) == P.cardinality_formula(5, 2)

    def test_rejects_wrong_range_image(self):
        with pytest.raises(errors.NotARangeMap):
            P.conjugation_isomorphism(
                4, (1, 2, 3), (1, 2, 4), P.identity_on(4, range(1, 5))
            )

    def test_rejects_non_dihedral_conjugator(self):
        sigma = pi(4, (1, 2), (2, 1), (3, 3), (4, 4))
        with pytest.raises(errors.InvalidConjugator):
            P.conjugation_isomorphism(4, (1, 2, 3), (1, 2, 3), sigma)

    def test_rejects_partial_conjugator(self):
        with pytest.raises(errors.InvalidConjugator):
            P.conjugation_isomorphism(4, (1, 2), (1, 2), P.identity_on(4, {1, 2}))


class TestBruteforceOracle:
    def test_identity_case(self):
        _, S = semigroup(3, (1, 2))
        found = P.bruteforce_isomorphism(S, S)
        assert found is not None
        assert self._is_isomorphism(S, S, found)

    def test_positive_pair(self):
        _, S = semigroup(4, (1, 2, 3))
        _, T = semigroup(4, (2, 3, 4))
        found = P.bruteforce_isomorphism(S, T)
        assert found is not None
        assert self._is_isomorphism(S, T, found)

    def test_negative_pair(self):
        _, S = semigroup(5, (1, 2, 3))
        _, T = semigroup(5, (1, 2, 4))
        assert P.bruteforce_isomorphism(S, T) is None

    def test_size_mismatch_shortcut(self):
        _, S = semigroup(4, (1, 2))
        _, T = semigroup(4, (1, 2, 3))
        assert P.bruteforce_isomorphism(S, T) is None

    def test_map_respects_structure(self):
        _, S = semigroup(4, (1, 3))
        _, T = semigroup(4, (2, 4))
        found = P.bruteforce_isomorphism(S, T)
        assert found is not None
        for i, a in enumerate(S.elements):
            b = T[found[i]]
            assert a.rank == b.rank
            assert a.is_idempotent() == b.is_idempotent()
        assert T[found[S.index_of(P.empty_map(4))]] == P.empty_map(4)

    @staticmethod
    def _is_isomorphism(S, T, found):
        if sorted(found.values()) != list(range(len(T))):
            return False
        m_s, m_t = S.mult_table(), T.mult_table()
        return all(
            found[m_s[i][j]] == m_t[found[i]][found[j]]
            for i in range(len(S))
            for j in range(len(S))
        )


class TestDecideAgreesWithOracle:
    def test_n4_grid(self):
        from itertools import combinations

        sets = [c for k in (1, 2, 3) for c in combinations(range(1, 5), k)]
        for y in sets:
            for z in sets:
                verdict = P.decide_isomorphic(4, y, z).verdict
                found = P.bruteforce_isomorphism(semigroup(4, y)[1], semigroup(4, z)[1])
                assert verdict == (found is not None), (y, z)
