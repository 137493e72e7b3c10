import pytest
from hypothesis import given
import hypothesis.strategies as st

import sumsetcover as sc
from sumsetcover.errors import DimensionMismatch, EnumerationTooLarge, NotPrime

from conftest import brute_sumset, point_sets, set_pairs, space_points


def vec(q, *coords):
    return sc.FieldVector(q, coords)


class TestMakeField:
    def test_three_is_prime(self):
        assert sc.make_field(3).q == 3

    def test_four_rejected(self):
        with pytest.raises(NotPrime):
            sc.make_field(4)

    def test_two_smallest_prime(self):
        assert sc.make_field(2).q == 2

    @pytest.mark.parametrize("q", [0, 1, 6, 9, 15, 21])
    def test_composites_rejected(self, q):
        with pytest.raises(NotPrime):
            sc.make_field(q)

    @pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
    def test_inverse(self, q):
        field = sc.make_field(q)
        for a in range(1, q):
            assert (a * field.inv(a)) % q == 1


class TestVecAdd:
    def test_reduction_mod_three(self):
        assert sc.vec_add(vec(3, 1, 2), vec(3, 2, 2)) == vec(3, 0, 1)

    def test_zero_is_identity(self):
        v = vec(5, 3, 1, 4)
        assert sc.vec_add(v, vec(5, 0, 0, 0)) == v

    def test_characteristic_two(self):
        v = vec(2, 1, 0, 1)
        assert sc.vec_add(v, v) == vec(2, 0, 0, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            sc.vec_add(vec(3, 1), vec(3, 1, 2))
        with pytest.raises(DimensionMismatch):
            sc.vec_add(vec(3, 1), vec(5, 1))

    @given(point_sets(allow_empty=False))
    def test_group_inverse(self, S):
        for v in S:
            assert v + v.scale(v.q - 1) == vec(v.q, *([0] * v.n))

    @given(point_sets(allow_empty=False))
    def test_commutative_and_associative(self, S):
        pts = S.ordered()
        a, b, c = pts[0], pts[len(pts) // 2], pts[-1]
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)


class TestSumset:
    def test_singletons(self):
        S = sc.PointSet.from_coords(2, 1, [(0,)])
        T = sc.PointSet.from_coords(2, 1, [(1,)])
        assert sc.sumset(S, T) == sc.PointSet.from_coords(2, 1, [(1,)])

    def test_group_closure(self):
        F = sc.all_points(2, 1)
        assert sc.sumset(F, F) == F

    def test_interval_mod_three(self):
        # {0,1} + {0,1} in F_3: four pairwise sums enumerate to {0,1,2}
        S = sc.PointSet.from_coords(3, 1, [(0,), (1,)])
        expected = {(0,), (1,), (2,)}
        assert brute_sumset(S, S) == expected
        assert {v.coords for v in sc.sumset(S, S)} == expected

    def test_empty_absorbs(self):
        S = sc.PointSet.from_coords(3, 1, [(0,), (1,)])
        empty = sc.PointSet.empty(3, 1)
        assert len(sc.sumset(S, empty)) == 0
        assert len(sc.sumset(empty, S)) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            sc.sumset(sc.PointSet.empty(2, 1), sc.PointSet.empty(2, 2))

    @given(set_pairs())
    def test_matches_brute_force(self, pair):
        S, T = pair
        assert {v.coords for v in sc.sumset(S, T)} == brute_sumset(S, T)

    @given(set_pairs())
    def test_commutative(self, pair):
        S, T = pair
        assert sc.sumset(S, T) == sc.sumset(T, S)

    @given(set_pairs())
    def test_monotone(self, pair):
        S, T = pair
        sub = sc.PointSet.from_vectors(S.q, S.n, S.ordered()[: len(S) // 2])
        assert sc.sumset(sub, T).issubset(sc.sumset(S, T))


class TestComplement:
    def test_full_space(self):
        F = sc.all_points(3, 1)
        assert len(sc.complement(F)) == 0

    def test_empty_set(self):
        assert len(sc.complement(sc.PointSet.empty(2, 2))) == 4

    def test_set_difference(self):
        A = sc.PointSet.from_coords(2, 2, [(0, 0), (0, 1)])
        assert {v.coords for v in sc.complement(A)} == {(1, 0), (1, 1)}

    def test_cap_refusal(self):
        with pytest.raises(EnumerationTooLarge):
            sc.complement(sc.PointSet.empty(2, 5), cap=16)

    @given(point_sets())
    def test_size_identity(self, A):
        assert len(sc.complement(A)) + len(A) == A.q**A.n


class TestPointSet:
    def test_canonical_iteration_order(self):
        S = sc.PointSet.from_coords(3, 2, [(2, 1), (0, 0), (1, 2)])
        assert [v.coords for v in S] == [(0, 0), (1, 2), (2, 1)]

    def test_mixed_members_rejected(self):
        with pytest.raises(DimensionMismatch):
            sc.PointSet(2, 2, frozenset({vec(2, 1)}))

    def test_coords_reduced(self):
        assert vec(3, 4, -1) == vec(3, 1, 2)

    def test_space_size(self):
        assert len(space_points(3, 2)) == 9
