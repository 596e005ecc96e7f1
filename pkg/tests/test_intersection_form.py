"""Cup-product intersection forms on triangulated 4-manifolds."""

import pytest

from skkinv import fixtures
from skkinv.intersection_form import (
    WrongDimension,
    intersection_matrix,
    signature,
)
from skkinv.simplicial import (
    NotClosed,
    NotOrientable,
    SimplicialComplex,
    disjoint_union,
    euler_characteristic,
    orient,
)


class TestIntersectionMatrix:
    def test_sphere4_empty(self):
        form = intersection_matrix(orient(fixtures.sphere4()))
        assert form.size == 0
        assert form.pairing == ()

    def test_cp2_rank_one_positive(self):
        form = intersection_matrix(fixtures.cp2_9())
        assert form.size == 1
        q = form.pairing[0][0]
        assert q > 0

    def test_reversed_orientation_negates(self):
        K = fixtures.cp2_9()
        q = intersection_matrix(K).pairing[0][0]
        q_rev = intersection_matrix(K.reversed_orientation()).pairing[0][0]
        assert q_rev == -q

    def test_symmetry(self):
        union = disjoint_union(fixtures.cp2_9(), fixtures.cp2_9())
        form = intersection_matrix(union)
        assert form.size == 2
        for i in range(2):
            for j in range(2):
                assert form.pairing[i][j] == form.pairing[j][i]

    def test_wrong_dimension(self):
        with pytest.raises(WrongDimension):
            intersection_matrix(orient(fixtures.torus7()))

    def test_not_closed(self):
        K = SimplicialComplex.from_facets(4, [tuple(range(5))])
        with pytest.raises(NotClosed):
            intersection_matrix(K)

    def test_not_orientable_rejected(self):
        # a non-orientable closed complex only exists here in dimension 2,
        # so check the error comes through orient() on unoriented input
        with pytest.raises(NotOrientable):
            orient(fixtures.projective_plane6())


class TestSignature:
    def test_sphere4(self):
        assert signature(orient(fixtures.sphere4())) == 0

    def test_cp2_reference_orientation(self):
        K = fixtures.cp2_9()
        assert euler_characteristic(K) == 3
        assert signature(K) == 1

    def test_cp2_reversed(self):
        assert signature(fixtures.cp2_9().reversed_orientation()) == -1

    def test_additive_and_sign_flip(self):
        K = fixtures.cp2_9()
        same = disjoint_union(K, K)
        assert signature(same) == 2
        mixed = disjoint_union(K, K.reversed_orientation())
        assert signature(mixed) == 0

    def test_sigma_equals_chi_mod_2(self):
        for K in (fixtures.cp2_9(), orient(fixtures.sphere4()),
                  disjoint_union(fixtures.cp2_9(), fixtures.cp2_9())):
            assert (signature(K) - euler_characteristic(K)) % 2 == 0

    def test_sk_pair_cross_check(self):
        # ((chi - sigma)/2, sigma) = (1, 1) for the projective plane
        K = fixtures.cp2_9()
        chi, sigma = euler_characteristic(K), signature(K)
        assert ((chi - sigma) // 2, sigma) == (1, 1)
